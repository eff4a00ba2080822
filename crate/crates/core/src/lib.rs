//! Exact representation theory of small bound quiver algebras over prime
//! fields: Hom spaces, τ and τ⁻, support τ-tilting modules, torsion classes
//! and IE-closed subcategories.

pub mod algebra;
pub mod catalog;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod ieclosed;
pub mod linalg;
pub mod repcore;
pub mod tautheory;
pub mod torsion;

pub use algebra::{BoundQuiverAlgebra, MonomialRelation, Path, Quiver, StandardKind};
pub use catalog::{interval_catalog, load_catalog, validate_catalog, Catalog, CatalogEntry};
pub use error::{Error, Result};
pub use ieclosed::{ExtPair, Flags, IeRecord, TwinPair};
pub use linalg::{Field, Matrix};
pub use repcore::{Morphism, Representation};
pub use tautheory::{Side, SttPair};
pub use torsion::{ClassSide, Subcat, TorsionLattice};
