use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};

use super::{Morphism, Representation};

impl Representation {
    /// `D x = Hom_k(x, k)` as a representation of the opposite algebra:
    /// same dimension vector, transposed arrow matrices.
    pub fn dualize(&self) -> Representation {
        let op = Arc::new(self.algebra().opposite());
        self.dual_over(&op).expect("freshly built opposite")
    }

    /// Like [`Representation::dualize`], over a given copy of the opposite
    /// algebra (so that repeated duals share one algebra handle).
    pub fn dual_over(&self, op: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        if !op.is_opposite_of(self.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let action = self.actions().iter().map(|m| m.transpose()).collect();
        Ok(Representation::from_parts(
            op.clone(),
            self.dims().to_vec(),
            action,
        ))
    }
}

impl Morphism {
    /// `D f: D target -> D source`.
    pub fn dual_over(&self, op: &Arc<BoundQuiverAlgebra>) -> Result<Morphism> {
        let source = self.target().dual_over(op)?;
        let target = self.source().dual_over(op)?;
        let components = self.components().iter().map(|m| m.transpose()).collect();
        Ok(Morphism::from_parts(source, target, components))
    }
}
