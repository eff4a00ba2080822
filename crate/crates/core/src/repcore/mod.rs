//! Quiver representations and their morphisms.
//!
//! A representation stores one vector space dimension per vertex and, for
//! each arrow `a: i -> j`, a `dims[j] x dims[i]` matrix acting on column
//! vectors.

mod decompose;
mod dual;
mod hom;
mod iso;
mod parts;
mod submodules;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

pub use decompose::decompose;
pub use hom::{hom_basis, hom_dim, map_from_projective};
pub use iso::{
    endomorphism_idempotent, for_each_combination, for_each_normalized, is_isomorphic,
    is_isomorphic_with_cap, is_sum_of, DEFAULT_SEARCH_CAP,
};
pub use parts::{
    morphism_parts, projective_cover, quotient_by, radical_and_top, reject_of_family, trace_of_family,
    MorphismParts, ProjectiveCover, Quotient, Submodule,
};
pub use submodules::{generated_submodules, submodules_of, submodules_of_with_cap, DEFAULT_SUBMODULE_CAP};

#[derive(Clone)]
pub struct Representation {
    alg: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims)
            .field("action", &self.action)
            .finish()
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.dims == other.dims && self.action == other.action
    }
}

impl Eq for Representation {}

pub(crate) fn same_algebra(a: &Arc<BoundQuiverAlgebra>, b: &Arc<BoundQuiverAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Validated constructor: matrix shapes and relations are checked.
    pub fn new(alg: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let rep = Representation { alg, dims, action };
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn from_parts(alg: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Self {
        let rep = Representation { alg, dims, action };
        debug_assert!(rep.validate().is_ok(), "{:?}", rep.validate());
        rep
    }

    pub fn zero(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let f = alg.field();
        let action = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Representation {
            alg: alg.clone(),
            dims: vec![0; alg.vertex_count()],
            action,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.alg.quiver();
        if self.dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                self.dims.len(),
                q.vertex_count()
            )));
        }
        if self.action.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} arrows",
                self.action.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&self.action) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} carries a {}x{} matrix, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    self.dims[a.target],
                    self.dims[a.source]
                )));
            }
            if m.field() != self.alg.field() {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} has entries over the wrong field",
                    a.name
                )));
            }
        }
        for r in self.alg.relations() {
            let path = Path {
                start: q.arrows()[r.arrows()[0]].source,
                end: q.arrows()[*r.arrows().last().unwrap()].target,
                arrows: r.arrows().to_vec(),
            };
            if !self.path_action(&path).is_zero() {
                let names: Vec<&str> = r.arrows().iter().map(|&i| q.arrows()[i].name.as_str()).collect();
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not vanish",
                    names.join("")
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Support: vertices with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Matrix of a path, composed left to right.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[path.start]);
        for &a in &path.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    pub fn identity(&self) -> Morphism {
        Morphism {
            components: self
                .dims
                .iter()
                .map(|&d| Matrix::identity(self.field(), d))
                .collect(),
            source: self.clone(),
            target: self.clone(),
        }
    }

    pub fn zero_map(&self, target: &Representation) -> Morphism {
        Morphism {
            components: self
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(self.field(), t, s))
                .collect(),
            source: self.clone(),
            target: target.clone(),
        }
    }
}

/// Block-diagonal direct sum; the empty sum is the zero module.
pub fn direct_sum(alg: &Arc<BoundQuiverAlgebra>, parts: &[&Representation]) -> Result<Representation> {
    if parts.iter().any(|p| !same_algebra(p.algebra(), alg)) {
        return Err(Error::AlgebraMismatch);
    }
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let action = (0..alg.quiver().arrows().len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.action[a]).collect();
            Matrix::block_diag(alg.field(), &blocks)
        })
        .collect();
    Ok(Representation::from_parts(alg.clone(), dims, action))
}

/// An intertwiner: `target.action(a) * comp[i] == comp[j] * source.action(a)`
/// for every arrow `a: i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, components: Vec<Matrix>) -> Result<Self> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let m = Morphism {
            source,
            target,
            components,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Self {
        let m = Morphism {
            source,
            target,
            components,
        };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.source.dims.len();
        if self.components.len() != n {
            return Err(Error::InvalidRepresentation(
                "wrong number of morphism components".into(),
            ));
        }
        for v in 0..n {
            let c = &self.components[v];
            if c.rows() != self.target.dims[v] || c.cols() != self.source.dims[v] {
                return Err(Error::InvalidRepresentation(format!(
                    "morphism component at vertex {v} has shape {}x{}",
                    c.rows(),
                    c.cols()
                )));
            }
        }
        for (ai, a) in self.source.alg.quiver().arrows().iter().enumerate() {
            let lhs = self.target.action[ai].mul(&self.components[a.source]);
            let rhs = self.components[a.target].mul(&self.source.action[ai]);
            if lhs != rhs {
                return Err(Error::InvalidRepresentation(format!(
                    "morphism does not commute with arrow {}",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    /// Linear combination `Σ coeffs[k] * maps[k]` of parallel morphisms.
    pub fn combination(maps: &[Morphism], coeffs: &[u32]) -> Option<Morphism> {
        let first = maps.first()?;
        let mut components: Vec<Matrix> = first
            .components
            .iter()
            .map(|c| Matrix::zeros(c.field(), c.rows(), c.cols()))
            .collect();
        for (m, &k) in maps.iter().zip(coeffs) {
            if k == 0 {
                continue;
            }
            for (acc, c) in components.iter_mut().zip(&m.components) {
                *acc = acc.add(&c.scale(k));
            }
        }
        Some(Morphism {
            source: first.source.clone(),
            target: first.target.clone(),
            components,
        })
    }

    /// All entries of all components, vertex by vertex.
    pub fn flatten(&self) -> Vec<u32> {
        self.components
            .iter()
            .flat_map(|c| c.entries().iter().copied())
            .collect()
    }
}
