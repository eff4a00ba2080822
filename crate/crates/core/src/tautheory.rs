//! `Ext^1`, the Auslander–Reiten translate and support τ-tilting modules.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{standard_module_at, BoundQuiverAlgebra, Path, StandardKind};
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::repcore::{
    direct_sum, hom_basis, hom_dim, map_from_projective, morphism_parts, projective_cover, Morphism,
    Representation,
};

/// `τ` side (support τ-tilting) or `τ⁻` side (support τ⁻-tilting).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

/// A basic support τ-tilting (or τ⁻-tilting) module with its projective
/// complement, both given by indices (catalog entries resp. vertices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SttPair {
    pub module: BTreeSet<usize>,
    pub proj_complement: BTreeSet<usize>,
    pub side: Side,
    pub support: BTreeSet<usize>,
}

/// `dim Ext^1(a, b)` from the projective cover sequence `0 -> K -> P -> a -> 0`:
/// the cokernel of restriction `Hom(P, b) -> Hom(K, b)`.
pub fn ext1_dim(a: &Representation, b: &Representation) -> Result<usize> {
    if a.is_zero() || b.is_zero() {
        return Ok(0);
    }
    let cover = projective_cover(a)?;
    let kernel = morphism_parts(&cover.map)?.kernel;
    if kernel.is_zero() {
        return Ok(0);
    }
    let from_kernel = hom_dim(kernel.module(), b)?;
    let restricted: Vec<Vector> = hom_basis(cover.projective(), b)?
        .iter()
        .map(|g| kernel.inclusion().then(g).flatten())
        .collect();
    let rank = match restricted.first() {
        Some(v) => Matrix::from_columns(a.field(), v.len(), &restricted).rank(),
        None => 0,
    };
    Ok(from_kernel - rank)
}

/// `τ x = D Tr x`.
pub fn tau(x: &Representation) -> Result<Representation> {
    let op = Arc::new(x.algebra().opposite());
    tau_with(x, &op)
}

/// `τ⁻ x = D τ D x`, computed over the opposite algebra.
pub fn tau_minus(x: &Representation) -> Result<Representation> {
    let op = Arc::new(x.algebra().opposite());
    tau_minus_with(x, &op)
}

pub(crate) fn tau_minus_with(x: &Representation, op: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
    let dx = x.dual_over(op)?;
    let t = tau_with(&dx, x.algebra())?;
    t.dual_over(x.algebra())
}

/// Builds a minimal projective presentation `P1 -f-> P0 -> x -> 0`, applies
/// `Hom(-, Λ)` to get `f*: P0* -> P1*` over the opposite algebra, and
/// dualizes its cokernel.
pub(crate) fn tau_with(x: &Representation, op: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
    let alg = x.algebra();
    if !op.is_opposite_of(alg) {
        return Err(Error::AlgebraMismatch);
    }
    if x.is_zero() {
        return Ok(Representation::zero(alg));
    }
    let cover0 = projective_cover(x)?;
    let kernel = morphism_parts(&cover0.map)?.kernel;
    if kernel.is_zero() {
        return Ok(Representation::zero(alg));
    }
    let cover1 = projective_cover(kernel.module())?;
    let inclusion = kernel.inclusion();

    // λ[t][s]: coefficients, over the paths i_t -> j_s, of the image of the
    // s-th generator of P1 in the t-th summand of P0.
    let top0 = &cover0.summands;
    let top1 = &cover1.summands;
    let mut lambda: Vec<Vec<Vector>> = vec![vec![Vec::new(); top1.len()]; top0.len()];
    for (s, (j, g)) in top1.iter().enumerate() {
        let y = inclusion.component(*j).apply(g);
        let mut offset = 0;
        for (t, (i, _)) in top0.iter().enumerate() {
            let len = alg.paths(*i, *j).len();
            lambda[t][s] = y[offset..offset + len].to_vec();
            offset += len;
        }
    }

    let sources: Vec<Representation> = top0
        .iter()
        .map(|&(i, _)| standard_module_at(op, StandardKind::Projective, i))
        .collect();
    let targets: Vec<Representation> = top1
        .iter()
        .map(|&(j, _)| standard_module_at(op, StandardKind::Projective, j))
        .collect();
    let source = direct_sum(op, &sources.iter().collect::<Vec<_>>())?;
    let target = direct_sum(op, &targets.iter().collect::<Vec<_>>())?;

    let f = x.field();
    let mut components: Vec<Matrix> = (0..op.vertex_count())
        .map(|v| Matrix::zeros(f, target.dims()[v], 0))
        .collect();
    for (t, (i, _)) in top0.iter().enumerate() {
        // image of the generator e_i of the t-th summand of P0*
        let mut element = Vec::with_capacity(target.dims()[*i]);
        for (s, (j, _)) in top1.iter().enumerate() {
            let mut block = vec![0u32; op.paths(*j, *i).len()];
            for (k, q) in alg.paths(*i, *j).iter().enumerate() {
                let c = lambda[t][s][k];
                if c == 0 {
                    continue;
                }
                let reversed = Path {
                    start: *j,
                    end: *i,
                    arrows: q.arrows.iter().rev().copied().collect(),
                };
                let pos = op
                    .path_position(&reversed)
                    .ok_or_else(|| Error::Consistency("reversed path missing from opposite".into()))?;
                block[pos] = f.add(block[pos], c);
            }
            element.extend(block);
        }
        let m = map_from_projective(&sources[t], *i, &element, &target);
        for (acc, c) in components.iter_mut().zip(m.components()) {
            *acc = acc.hstack(c);
        }
    }
    let transpose_map = Morphism::new(source, target, components)?;
    let tr = morphism_parts(&transpose_map)?.cokernel;
    tr.module().dual_over(alg)
}

/// τ and τ⁻ of every catalog entry, plus the pairwise rigidity tables.
#[derive(Debug)]
pub struct TauTable {
    pub tau: Vec<Representation>,
    pub tau_minus: Vec<Representation>,
    /// `plus[i][j]`: `Hom(E_i, τ E_j) = 0`.
    pub plus: Vec<Vec<bool>>,
    /// `minus[i][j]`: `Hom(τ⁻ E_i, E_j) = 0`.
    pub minus: Vec<Vec<bool>>,
}

impl Catalog {
    pub fn tau_table(&self) -> Result<&TauTable> {
        if let Some(t) = self.tau_cache.get() {
            return Ok(t);
        }
        let n = self.len();
        let tau = self
            .modules()
            .map(|m| tau_with(m, self.opposite()))
            .collect::<Result<Vec<_>>>()?;
        let tau_minus = self
            .modules()
            .map(|m| tau_minus_with(m, self.opposite()))
            .collect::<Result<Vec<_>>>()?;
        let mut plus = vec![vec![false; n]; n];
        let mut minus = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                plus[i][j] = hom_dim(self.module(i), &tau[j])? == 0;
                minus[i][j] = hom_dim(&tau_minus[i], self.module(j))? == 0;
            }
        }
        let _ = self.tau_cache.set(TauTable {
            tau,
            tau_minus,
            plus,
            minus,
        });
        Ok(self.tau_cache.get().expect("just set"))
    }
}

/// `Hom(X, τY) = 0` for all `X, Y` in `parts` (or `Hom(τ⁻X, Y) = 0`).
pub fn is_tau_rigid_sum(cat: &Catalog, parts: &BTreeSet<usize>, side: Side) -> Result<bool> {
    let table = cat.tau_table()?;
    let rel = match side {
        Side::Plus => &table.plus,
        Side::Minus => &table.minus,
    };
    Ok(parts.iter().all(|&x| parts.iter().all(|&y| rel[x][y])))
}

/// Union of the supports of the given entries.
pub fn supp_of(cat: &Catalog, parts: &BTreeSet<usize>) -> BTreeSet<usize> {
    parts.iter().flat_map(|&i| cat.module(i).support()).collect()
}

/// The pair `(M, P)` if `parts` is τ-rigid (resp. τ⁻-rigid) with as many
/// summands as support vertices; `P` is the projective at the other vertices.
pub fn is_support_tau_tilting(cat: &Catalog, parts: &BTreeSet<usize>, side: Side) -> Result<Option<SttPair>> {
    if !is_tau_rigid_sum(cat, parts, side)? {
        return Ok(None);
    }
    let support = supp_of(cat, parts);
    if support.len() != parts.len() {
        return Ok(None);
    }
    let proj_complement = (0..cat.algebra().vertex_count())
        .filter(|v| !support.contains(v))
        .collect();
    Ok(Some(SttPair {
        module: parts.clone(),
        proj_complement,
        side,
        support,
    }))
}

/// All basic support τ-tilting (or τ⁻-tilting) modules, by clique search in
/// the pairwise compatibility graph. Ordered by support, then module.
pub fn enumerate_stt(cat: &Catalog, side: Side) -> Result<Vec<SttPair>> {
    let table = cat.tau_table()?;
    let rel = match side {
        Side::Plus => &table.plus,
        Side::Minus => &table.minus,
    };
    let n = cat.len();
    let compatible = |x: usize, y: usize| rel[x][y] && rel[y][x];
    let mut out = Vec::new();
    let mut clique = Vec::new();
    fn grow<F: Fn(usize, usize) -> bool>(
        start: usize,
        n: usize,
        limit: usize,
        clique: &mut Vec<usize>,
        compatible: &F,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        visit(clique);
        if clique.len() == limit {
            return;
        }
        for k in start..n {
            if !compatible(k, k) || !clique.iter().all(|&c| compatible(c, k)) {
                continue;
            }
            clique.push(k);
            grow(k + 1, n, limit, clique, compatible, visit);
            clique.pop();
        }
    }
    let vertices = cat.algebra().vertex_count();
    grow(0, n, vertices, &mut clique, &compatible, &mut |c: &[usize]| {
        let parts: BTreeSet<usize> = c.iter().copied().collect();
        let support = supp_of(cat, &parts);
        if support.len() == parts.len() {
            out.push(parts);
        }
    });
    let mut pairs = out
        .into_iter()
        .map(|parts| {
            is_support_tau_tilting(cat, &parts, side)?
                .ok_or_else(|| Error::Consistency("clique failed the support τ-tilting test".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    pairs.sort_by(|a, b| {
        let key = |p: &SttPair| {
            (
                p.support.len(),
                p.support.iter().copied().collect::<Vec<_>>(),
                p.module.len(),
                p.module.iter().copied().collect::<Vec<_>>(),
            )
        };
        key(a).cmp(&key(b))
    });
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{catalog, hereditary, indices, module, nakayama};
    use crate::repcore::is_isomorphic;

    fn set(v: Vec<usize>) -> BTreeSet<usize> {
        v.into_iter().collect()
    }

    #[test]
    fn translates() {
        let alg = nakayama(2);
        assert!(is_isomorphic(&tau(&module(&alg, "S1")).unwrap(), &module(&alg, "S2")).unwrap());
        assert!(is_isomorphic(&tau(&module(&alg, "S2")).unwrap(), &module(&alg, "S3")).unwrap());
        assert!(tau(&module(&alg, "P1")).unwrap().is_zero());
        assert!(tau(&module(&alg, "P2")).unwrap().is_zero());
        assert!(is_isomorphic(&tau_minus(&module(&alg, "S3")).unwrap(), &module(&alg, "S2")).unwrap());
        for inj in ["I1", "I2", "I3"] {
            assert!(tau_minus(&module(&alg, inj)).unwrap().is_zero(), "{inj}");
        }
        let s2 = module(&alg, "S2");
        assert!(is_isomorphic(&tau_minus(&tau(&s2).unwrap()).unwrap(), &s2).unwrap());
    }

    #[test]
    fn hereditary_translate() {
        let alg = hereditary(3);
        assert!(is_isomorphic(&tau(&module(&alg, "S2")).unwrap(), &module(&alg, "S1")).unwrap());
        assert!(is_isomorphic(&tau_minus(&module(&alg, "S1")).unwrap(), &module(&alg, "S2")).unwrap());
    }

    #[test]
    fn ext_dimensions() {
        let alg = nakayama(2);
        let m = |s| module(&alg, s);
        assert_eq!(ext1_dim(&m("S1"), &m("S2")).unwrap(), 1);
        assert_eq!(ext1_dim(&m("S2"), &m("S3")).unwrap(), 1);
        assert_eq!(ext1_dim(&m("S1"), &m("S3")).unwrap(), 0);
        assert_eq!(ext1_dim(&m("S2"), &m("S1")).unwrap(), 0);
        for p in ["P1", "P2", "P3"] {
            for x in ["S1", "S2", "S3", "P1", "P2"] {
                assert_eq!(ext1_dim(&m(p), &m(x)).unwrap(), 0, "{p} {x}");
            }
        }
    }

    #[test]
    fn rigidity() {
        let cat = catalog(&nakayama(2));
        let s = |l: &[&str]| set(indices(&cat, l));
        assert!(is_tau_rigid_sum(&cat, &s(&["S1", "S3", "P1"]), Side::Plus).unwrap());
        assert!(!is_tau_rigid_sum(&cat, &s(&["S1", "S2"]), Side::Plus).unwrap());
        assert!(is_tau_rigid_sum(&cat, &s(&[]), Side::Plus).unwrap());
        assert!(is_tau_rigid_sum(&cat, &s(&["S1", "S2"]), Side::Minus).is_ok_and(|r| !r));
    }

    #[test]
    fn support_tau_tilting() {
        let cat = catalog(&nakayama(2));
        let s = |l: &[&str]| set(indices(&cat, l));
        let pair = is_support_tau_tilting(&cat, &s(&["S1", "S3"]), Side::Plus)
            .unwrap()
            .unwrap();
        assert_eq!(pair.support, set(vec![0, 2]));
        assert_eq!(pair.proj_complement, set(vec![1]));
        let zero = is_support_tau_tilting(&cat, &s(&[]), Side::Plus)
            .unwrap()
            .unwrap();
        assert_eq!(zero.proj_complement, set(vec![0, 1, 2]));
        // rigid but not maximal for its support
        assert!(is_support_tau_tilting(&cat, &s(&["P1"]), Side::Plus)
            .unwrap()
            .is_none());
        assert!(is_support_tau_tilting(&cat, &s(&["S1", "S2"]), Side::Plus)
            .unwrap()
            .is_none());
    }

    #[test]
    fn counts() {
        let cat = catalog(&nakayama(2));
        let plus = enumerate_stt(&cat, Side::Plus).unwrap();
        let minus = enumerate_stt(&cat, Side::Minus).unwrap();
        assert_eq!(plus.len(), 12);
        assert_eq!(minus.len(), 12);
        for pair in plus.iter().chain(&minus) {
            assert_eq!(pair.module.len() + pair.proj_complement.len(), 3);
            assert_eq!(pair.support, supp_of(&cat, &pair.module));
            assert!(pair.support.is_disjoint(&pair.proj_complement));
        }
        let cat = catalog(&hereditary(2));
        assert_eq!(enumerate_stt(&cat, Side::Plus).unwrap().len(), 5);
        assert_eq!(enumerate_stt(&cat, Side::Minus).unwrap().len(), 5);
    }

    #[test]
    fn supports() {
        let cat = catalog(&nakayama(2));
        let s = |l: &[&str]| set(indices(&cat, l));
        assert_eq!(supp_of(&cat, &s(&["S2", "P1"])), set(vec![0, 1]));
        assert!(supp_of(&cat, &s(&[])).is_empty());
        assert_eq!(supp_of(&cat, &s(&["P1", "P2", "S3"])), set(vec![0, 1, 2]));
    }
}
