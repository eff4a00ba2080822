use crate::algebra::Path;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

use super::{same_algebra, Morphism, Representation};

/// Basis of `Hom(x, y)`, the null space of the intertwining equations.
///
/// Unknowns are the entries of the vertex components, vertex by vertex and
/// row-major inside each component.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    let n = x.dims().len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for v in 0..n {
        offsets.push(offsets[v] + x.dims()[v] * y.dims()[v]);
    }
    let unknowns = offsets[n];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * x.dims()[v] + c;

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let ya = y.action(ai);
        let xa = x.action(ai);
        // (Y_a f_i - f_j X_a)[r][c] = 0
        for r in 0..y.dims()[j] {
            for c in 0..x.dims()[i] {
                let mut eq = vec![0u32; unknowns];
                for k in 0..y.dims()[i] {
                    let coeff = ya.get(r, k);
                    if coeff != 0 {
                        let idx = var(i, k, c);
                        eq[idx] = f.add(eq[idx], coeff);
                    }
                }
                for k in 0..x.dims()[j] {
                    let coeff = xa.get(k, c);
                    if coeff != 0 {
                        let idx = var(j, r, k);
                        eq[idx] = f.sub(eq[idx], coeff);
                    }
                }
                if eq.iter().any(|&e| e != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::zeros(f, 0, unknowns).kernel_basis()
    } else {
        let rows: Vec<Vec<i64>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect();
        Matrix::from_rows(f, unknowns, &rows)?.kernel_basis()
    };
    Ok(kernel
        .into_iter()
        .map(|vec| {
            let components = (0..n)
                .map(|v| {
                    let mut m = Matrix::zeros(f, y.dims()[v], x.dims()[v]);
                    for r in 0..y.dims()[v] {
                        for c in 0..x.dims()[v] {
                            m.set(r, c, vec[var(v, r, c)]);
                        }
                    }
                    m
                })
                .collect();
            Morphism::from_parts(x.clone(), y.clone(), components)
        })
        .collect())
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    Ok(hom_basis(x, y)?.len())
}

/// The morphism `P_vertex -> x` sending the idempotent `e_vertex` to
/// `element`, where `projective` is the standard projective at `vertex`.
pub fn map_from_projective(
    projective: &Representation,
    vertex: usize,
    element: &Vector,
    x: &Representation,
) -> Morphism {
    let alg = x.algebra();
    let components = (0..alg.vertex_count())
        .map(|j| {
            let cols: Vec<Vector> = alg
                .paths(vertex, j)
                .iter()
                .map(|q: &Path| x.path_action(q).apply(element))
                .collect();
            Matrix::from_columns(x.field(), x.dims()[j], &cols)
        })
        .collect();
    Morphism::from_parts(projective.clone(), x.clone(), components)
}
