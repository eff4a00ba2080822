//! Exhaustive searches through small Hom spaces.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::{hom_basis, parts::check_same, Morphism, Representation};

/// Default bound on `p^(dim Hom)` for exhaustive searches.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 16;

/// Calls `visit` on every coefficient vector in `GF(p)^d` (zero first)
/// until it returns `true`. Returns whether some call did.
pub fn for_each_combination<F>(p: u32, d: usize, cap: u128, what: &str, mut visit: F) -> Result<bool>
where
    F: FnMut(&[u32]) -> bool,
{
    let size = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchCapExceeded {
            what: what.to_string(),
            size,
            cap,
        });
    }
    let mut coeffs = vec![0u32; d];
    loop {
        if visit(&coeffs) {
            return Ok(true);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == d {
                return Ok(false);
            }
            coeffs[k] += 1;
            if coeffs[k] == p {
                coeffs[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
    }
}

pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool> {
    is_isomorphic_with_cap(x, y, DEFAULT_SEARCH_CAP)
}

/// Searches `Hom(x, y)` for a vertex-wise invertible map.
pub fn is_isomorphic_with_cap(x: &Representation, y: &Representation, cap: u128) -> Result<bool> {
    check_same(x, y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    if x == y {
        return Ok(true);
    }
    let basis = hom_basis(x, y)?;
    if basis.is_empty() {
        return Ok(false);
    }
    for_each_combination(x.field().p(), basis.len(), cap, "isomorphism search", |c| {
        c.iter().any(|&k| k != 0) && Morphism::combination(&basis, c).is_some_and(|m| m.is_iso())
    })
}

/// An idempotent endomorphism other than 0 and the identity, if one exists.
/// `x` is indecomposable exactly when this returns `None`.
pub fn endomorphism_idempotent(x: &Representation, cap: u128) -> Result<Option<Morphism>> {
    let basis = hom_basis(x, x)?;
    if basis.len() <= 1 {
        return Ok(None);
    }
    let id = x.identity();
    let mut found = None;
    for_each_combination(x.field().p(), basis.len(), cap, "idempotent search", |c| {
        let Some(e) = Morphism::combination(&basis, c) else {
            return false;
        };
        if e.is_zero() || e == id {
            return false;
        }
        if e.then(&e) == e {
            found = Some(e);
            return true;
        }
        false
    })?;
    Ok(found)
}

/// Calls `visit` on one representative of each line in `GF(p)^d`: the
/// vectors whose first nonzero coordinate is 1.
pub fn for_each_normalized<F>(p: u32, d: usize, mut visit: F) -> Result<bool>
where
    F: FnMut(&[u32]) -> Result<bool>,
{
    let mut coeffs = vec![0u32; d];
    for lead in 0..d {
        coeffs.iter_mut().for_each(|c| *c = 0);
        coeffs[lead] = 1;
        let mut failure = None;
        let hit = for_each_combination(p, d - lead - 1, u128::MAX, "normalized vectors", |tail| {
            coeffs[lead + 1..].copy_from_slice(tail);
            match visit(&coeffs) {
                Ok(b) => b,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `y` is isomorphic to the direct sum of `parts`, decided by
/// building the isomorphism one summand at a time: each new component is
/// kept only if the partial map stays injective. At most `cap` candidate
/// components are tried.
pub fn is_sum_of(parts: &[&Representation], y: &Representation, cap: u128) -> Result<bool> {
    let n = y.dims().len();
    let mut total = vec![0usize; n];
    for e in parts {
        check_same(e, y)?;
        for (t, d) in total.iter_mut().zip(e.dims()) {
            *t += d;
        }
    }
    if total != y.dims() {
        return Ok(false);
    }
    let bases = parts
        .iter()
        .map(|e| hom_basis(e, y))
        .collect::<Result<Vec<_>>>()?;
    let f = y.field();
    let start: Vec<Matrix> = y.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    let mut budget = cap;
    assemble(&bases, 0, &start, &mut budget, cap)
}

fn assemble(
    bases: &[Vec<Morphism>],
    j: usize,
    current: &[Matrix],
    budget: &mut u128,
    cap: u128,
) -> Result<bool> {
    if j == bases.len() {
        return Ok(true);
    }
    let basis = &bases[j];
    let Some(first) = basis.first() else {
        return Ok(false);
    };
    let p = first.source().field().p();
    for_each_normalized(p, basis.len(), |c| {
        if *budget == 0 {
            return Err(Error::SearchCapExceeded {
                what: "summand-wise isomorphism search".into(),
                size: cap + 1,
                cap,
            });
        }
        *budget -= 1;
        let Some(g) = Morphism::combination(basis, c) else {
            return Ok(false);
        };
        let next: Vec<Matrix> = current
            .iter()
            .zip(g.components())
            .map(|(a, b)| a.hstack(b))
            .collect();
        if next.iter().any(|m| m.rank() < m.cols()) {
            return Ok(false);
        }
        assemble(bases, j + 1, &next, budget, cap)
    })
}
