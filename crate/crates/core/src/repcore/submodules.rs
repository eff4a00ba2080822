//! Enumeration of subrepresentations over a finite field.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::linalg::{span_basis, Field, Matrix, Vector};

use super::iso::{for_each_combination, for_each_normalized};
use super::{hom_basis, Morphism, Representation, Submodule};

/// Default bound on the total dimension accepted by [`submodules_of`].
pub const DEFAULT_SUBMODULE_CAP: usize = 8;

pub fn submodules_of(x: &Representation) -> Result<Vec<Submodule>> {
    submodules_of_with_cap(x, DEFAULT_SUBMODULE_CAP)
}

/// Every subrepresentation of `x`, found by choosing a subspace per vertex
/// and pruning as soon as an arrow between chosen vertices is violated.
pub fn submodules_of_with_cap(x: &Representation, cap: usize) -> Result<Vec<Submodule>> {
    if x.total_dim() > cap {
        return Err(Error::SearchCapExceeded {
            what: "submodule enumeration (total dimension)".into(),
            size: x.total_dim() as u128,
            cap: cap as u128,
        });
    }
    let f = x.field();
    let n = x.dims().len();
    let spaces: Vec<Vec<Vec<Vector>>> = x.dims().iter().map(|&d| all_subspaces(f, d)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    search(x, &spaces, &mut chosen, &mut out)?;
    Ok(out)
}

fn search(
    x: &Representation,
    spaces: &[Vec<Vec<Vector>>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Submodule>,
) -> Result<()> {
    let v = chosen.len();
    if v == spaces.len() {
        let spans = chosen
            .iter()
            .enumerate()
            .map(|(w, &k)| spaces[w][k].clone())
            .collect();
        out.push(Submodule::from_spans(x, spans)?);
        return Ok(());
    }
    for k in 0..spaces[v].len() {
        chosen.push(k);
        if consistent(x, spaces, chosen, v) {
            search(x, spaces, chosen, out)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// Checks the arrows touching `v` whose other endpoint is already chosen.
fn consistent(x: &Representation, spaces: &[Vec<Vec<Vector>>], chosen: &[usize], v: usize) -> bool {
    let f = x.field();
    for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
        if a.source > v || a.target > v || (a.source != v && a.target != v) {
            continue;
        }
        let src = &spaces[a.source][chosen[a.source]];
        let tgt = &spaces[a.target][chosen[a.target]];
        let mut all = tgt.clone();
        all.extend(src.iter().map(|b| x.action(ai).apply(b)));
        if span_basis(f, x.dims()[a.target], &all).len() != tgt.len() {
            return false;
        }
    }
    true
}

/// All subspaces of `GF(p)^d`, as reduced echelon bases.
fn all_subspaces(f: Field, d: usize) -> Vec<Vec<Vector>> {
    let mut out = Vec::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            // free entries: row r, columns after its pivot that are not pivots
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..d)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let _ = for_each_combination(f.p(), free.len(), u128::MAX, "subspaces", |vals| {
                let mut rows: Vec<Vector> = pivots
                    .iter()
                    .map(|&pc| {
                        let mut row = vec![0; d];
                        row[pc] = 1;
                        row
                    })
                    .collect();
                for (&(r, c), &val) in free.iter().zip(vals) {
                    rows[r][c] = val;
                }
                out.push(rows);
                false
            });
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every submodule of `y` generated by `family`, i.e. every sum of images
/// of maps from members of `family`. The zero submodule is included.
pub fn generated_submodules(
    family: &[&Representation],
    y: &Representation,
    cap: u128,
) -> Result<Vec<Submodule>> {
    let f = y.field();
    let n = y.dims().len();
    // distinct nonzero images of single maps
    let mut images: BTreeSet<Vec<Vec<Vector>>> = BTreeSet::new();
    for member in family {
        let basis = hom_basis(member, y)?;
        if basis.is_empty() {
            continue;
        }
        // images only depend on the map up to a nonzero scalar
        let lines = ((f.p() as u128)
            .checked_pow(basis.len() as u32)
            .unwrap_or(u128::MAX)
            - 1)
            / (f.p() as u128 - 1);
        if lines > cap {
            return Err(Error::SearchCapExceeded {
                what: "generated submodule search".into(),
                size: lines,
                cap,
            });
        }
        for_each_normalized(f.p(), basis.len(), |c| {
            if let Some(g) = Morphism::combination(&basis, c) {
                if !g.is_zero() {
                    images.insert(image_spans(f, y, &g));
                }
            }
            Ok(false)
        })?;
    }
    let zero: Vec<Vec<Vector>> = vec![Vec::new(); n];
    let mut seen: HashSet<Vec<Vec<Vector>>> = HashSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(u) = frontier.pop() {
        for img in &images {
            let sum: Vec<Vec<Vector>> = (0..n)
                .map(|v| {
                    let mut all = u[v].clone();
                    all.extend(img[v].iter().cloned());
                    span_basis(f, y.dims()[v], &all)
                })
                .collect();
            if seen.insert(sum.clone()) {
                frontier.push(sum);
            }
        }
    }
    let mut all: Vec<Vec<Vec<Vector>>> = seen.into_iter().collect();
    all.sort();
    all.into_iter()
        .map(|spans| Submodule::from_spans(y, spans))
        .collect()
}

fn image_spans(f: Field, y: &Representation, g: &Morphism) -> Vec<Vec<Vector>> {
    g.components()
        .iter()
        .enumerate()
        .map(|(v, c): (usize, &Matrix)| span_basis(f, y.dims()[v], &c.columns()))
        .collect()
}
