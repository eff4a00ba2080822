//! Small algebras shared by the unit tests.

use std::sync::Arc;

use crate::algebra::{standard_module, BoundQuiverAlgebra, MonomialRelation, Quiver, StandardKind};
use crate::catalog::{interval_catalog, Catalog};
use crate::linalg::Field;
use crate::repcore::{direct_sum, Representation};

/// 1 -a-> 2 -b-> 3 with ab = 0.
pub fn nakayama(p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let r = MonomialRelation::new(&q, &["a", "b"]).unwrap();
    Arc::new(BoundQuiverAlgebra::build(q, vec![r], Field::new(p).unwrap()).unwrap())
}

/// 2 -a-> 1.
pub fn hereditary(p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap();
    Arc::new(BoundQuiverAlgebra::build(q, vec![], Field::new(p).unwrap()).unwrap())
}

pub fn catalog(alg: &Arc<BoundQuiverAlgebra>) -> Catalog {
    interval_catalog(alg).unwrap()
}

/// `S1`, `P2`, `I3`, ...
pub fn module(alg: &Arc<BoundQuiverAlgebra>, name: &str) -> Representation {
    let kind = match &name[..1] {
        "S" => StandardKind::Simple,
        "P" => StandardKind::Projective,
        "I" => StandardKind::Injective,
        _ => panic!("bad module name {name}"),
    };
    standard_module(alg, kind, &name[1..]).unwrap()
}

pub fn sum(alg: &Arc<BoundQuiverAlgebra>, names: &[&str]) -> Representation {
    let parts: Vec<Representation> = names.iter().map(|n| module(alg, n)).collect();
    direct_sum(alg, &parts.iter().collect::<Vec<_>>()).unwrap()
}

pub fn indices(cat: &Catalog, labels: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = labels.iter().map(|l| cat.index_of(l).unwrap()).collect();
    v.sort_unstable();
    v
}
