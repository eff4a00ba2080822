//! Submodules, quotients and the constructions built from them: kernels,
//! images, cokernels, traces, rejects, radicals and projective covers.

use crate::algebra::{standard_module_at, StandardKind};
use crate::error::{Error, Result};
use crate::linalg::{span_basis, Matrix, Vector};

use super::{direct_sum, hom_basis, map_from_projective, same_algebra, Morphism, Representation};

/// A subrepresentation, stored as echelon-canonical vertex subspaces
/// together with its inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    bases: Vec<Vec<Vector>>,
    inclusion: Morphism,
}

impl Submodule {
    /// The subrepresentation of `x` spanned vertex-wise by `spans`.
    ///
    /// Fails if the spans are not stable under the arrows.
    pub fn from_spans(x: &Representation, spans: Vec<Vec<Vector>>) -> Result<Self> {
        let f = x.field();
        let bases: Vec<Vec<Vector>> = spans
            .iter()
            .enumerate()
            .map(|(v, s)| span_basis(f, x.dims()[v], s))
            .collect();
        let mats: Vec<Matrix> = bases
            .iter()
            .enumerate()
            .map(|(v, b)| Matrix::from_columns(f, x.dims()[v], b))
            .collect();
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let mut action = Vec::new();
        for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
            let image = x.action(ai).mul(&mats[a.source]);
            let m = mats[a.target].solve_matrix(&image)?.ok_or_else(|| {
                Error::InvalidRepresentation(format!("subspaces not stable under arrow {}", a.name))
            })?;
            action.push(m);
        }
        let module = Representation::from_parts(x.algebra().clone(), dims, action);
        let inclusion = Morphism::from_parts(module, x.clone(), mats);
        Ok(Submodule { bases, inclusion })
    }

    pub fn whole(x: &Representation) -> Self {
        let f = x.field();
        let spans = x
            .dims()
            .iter()
            .map(|&d| Matrix::identity(f, d).columns())
            .collect();
        Self::from_spans(x, spans).expect("whole space is a submodule")
    }

    pub fn zero(x: &Representation) -> Self {
        Self::from_spans(x, vec![Vec::new(); x.dims().len()]).expect("zero is a submodule")
    }

    pub fn module(&self) -> &Representation {
        self.inclusion.source()
    }

    pub fn ambient(&self) -> &Representation {
        self.inclusion.target()
    }

    pub fn inclusion(&self) -> &Morphism {
        &self.inclusion
    }

    /// Echelon bases of the vertex subspaces.
    pub fn bases(&self) -> &[Vec<Vector>] {
        &self.bases
    }

    pub fn dims(&self) -> &[usize] {
        self.module().dims()
    }

    pub fn is_zero(&self) -> bool {
        self.module().is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.module().dims() == self.ambient().dims()
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.bases
            .iter()
            .zip(&other.bases)
            .enumerate()
            .all(|(v, (mine, theirs))| {
                if theirs.is_empty() {
                    return true;
                }
                let f = self.ambient().field();
                let d = self.ambient().dims()[v];
                let mut all = mine.clone();
                all.extend(theirs.iter().cloned());
                span_basis(f, d, &all).len() == mine.len()
            })
    }
}

/// A quotient module with its projection and a lift of its basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    module: Representation,
    projection: Morphism,
    lifts: Vec<Matrix>,
}

impl Quotient {
    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn projection(&self) -> &Morphism {
        &self.projection
    }

    /// Columns: representatives in the ambient module of the quotient basis.
    pub fn lifts(&self, v: usize) -> &Matrix {
        &self.lifts[v]
    }
}

/// `x / sub`, using the standard basis vectors off the pivots of `sub` as
/// quotient representatives.
pub fn quotient_by(x: &Representation, sub: &Submodule) -> Result<Quotient> {
    if sub.ambient() != x {
        return Err(Error::InvalidRepresentation(
            "submodule belongs to a different module".into(),
        ));
    }
    let f = x.field();
    let n = x.dims().len();
    let mut proj = Vec::with_capacity(n);
    let mut lifts = Vec::with_capacity(n);
    for v in 0..n {
        let d = x.dims()[v];
        let basis = &sub.bases[v];
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.iter().position(|&e| e != 0).expect("nonzero basis vector"))
            .collect();
        let complement: Vec<Vector> = (0..d)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut e = vec![0; d];
                e[c] = 1;
                e
            })
            .collect();
        let mut all = basis.clone();
        all.extend(complement.iter().cloned());
        let full = Matrix::from_columns(f, d, &all);
        let inv = full
            .inverse()
            .ok_or_else(|| Error::Consistency("submodule basis plus complement is not a basis".into()))?;
        proj.push(inv.slice(basis.len()..d, 0..d));
        lifts.push(Matrix::from_columns(f, d, &complement));
    }
    let dims: Vec<usize> = lifts.iter().map(Matrix::cols).collect();
    let action = x
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| proj[a.target].mul(&x.action(ai).mul(&lifts[a.source])))
        .collect();
    let module = Representation::from_parts(x.algebra().clone(), dims, action);
    let projection = Morphism::from_parts(x.clone(), module.clone(), proj);
    Ok(Quotient {
        module,
        projection,
        lifts,
    })
}

/// Kernel, image and cokernel of a morphism.
#[derive(Clone, Debug)]
pub struct MorphismParts {
    pub kernel: Submodule,
    pub image: Submodule,
    pub cokernel: Quotient,
}

pub fn morphism_parts(f: &Morphism) -> Result<MorphismParts> {
    let kernel_spans = f.components().iter().map(Matrix::kernel_basis).collect();
    let image_spans = f.components().iter().map(Matrix::columns).collect();
    let kernel = Submodule::from_spans(f.source(), kernel_spans)?;
    let image = Submodule::from_spans(f.target(), image_spans)?;
    let cokernel = quotient_by(f.target(), &image)?;
    Ok(MorphismParts {
        kernel,
        image,
        cokernel,
    })
}

/// Sum of the images of all maps from members of `family` into `x`.
pub fn trace_of_family(family: &[&Representation], x: &Representation) -> Result<Submodule> {
    let mut spans: Vec<Vec<Vector>> = vec![Vec::new(); x.dims().len()];
    for member in family {
        for g in hom_basis(member, x)? {
            for (v, c) in g.components().iter().enumerate() {
                spans[v].extend(c.columns());
            }
        }
    }
    Submodule::from_spans(x, spans)
}

/// Intersection of the kernels of all maps from `x` into members of `family`.
pub fn reject_of_family(family: &[&Representation], x: &Representation) -> Result<Submodule> {
    let f = x.field();
    let n = x.dims().len();
    let mut stacked: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(f, 0, x.dims()[v])).collect();
    for member in family {
        for g in hom_basis(x, member)? {
            for (v, s) in stacked.iter_mut().enumerate() {
                *s = s.vstack(g.component(v));
            }
        }
    }
    let spans = stacked.iter().map(Matrix::kernel_basis).collect();
    Submodule::from_spans(x, spans)
}

/// Radical (sum of the images of the arrows) and top `x / rad x`.
pub fn radical_and_top(x: &Representation) -> Result<(Submodule, Quotient)> {
    let mut spans: Vec<Vec<Vector>> = vec![Vec::new(); x.dims().len()];
    for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
        spans[a.target].extend(x.action(ai).columns());
    }
    let rad = Submodule::from_spans(x, spans)?;
    let top = quotient_by(x, &rad)?;
    Ok((rad, top))
}

/// A projective cover `⊕ P_v -> x`, one summand per lifted top basis vector.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// `(vertex, generator)` for each indecomposable summand, in order.
    pub summands: Vec<(usize, Vector)>,
    pub map: Morphism,
}

impl ProjectiveCover {
    pub fn projective(&self) -> &Representation {
        self.map.source()
    }
}

pub fn projective_cover(x: &Representation) -> Result<ProjectiveCover> {
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    projective_cover_or_zero(x)
}

/// Like [`projective_cover`], but the zero module gets the empty cover.
pub(crate) fn projective_cover_or_zero(x: &Representation) -> Result<ProjectiveCover> {
    let alg = x.algebra();
    let (_, top) = radical_and_top(x)?;
    let mut summands = Vec::new();
    for v in 0..alg.vertex_count() {
        summands.extend(top.lifts(v).columns().into_iter().map(|g| (v, g)));
    }
    let projectives: Vec<Representation> = summands
        .iter()
        .map(|&(v, _)| standard_module_at(alg, StandardKind::Projective, v))
        .collect();
    let refs: Vec<&Representation> = projectives.iter().collect();
    let cover = direct_sum(alg, &refs)?;
    let f = x.field();
    let mut components: Vec<Matrix> = (0..alg.vertex_count())
        .map(|v| Matrix::zeros(f, x.dims()[v], 0))
        .collect();
    for ((v, g), p) in summands.iter().zip(&projectives) {
        let m = map_from_projective(p, *v, g, x);
        for (acc, c) in components.iter_mut().zip(m.components()) {
            *acc = acc.hstack(c);
        }
    }
    let map = Morphism::from_parts(cover, x.clone(), components);
    Ok(ProjectiveCover { summands, map })
}

pub(crate) fn check_same(x: &Representation, y: &Representation) -> Result<()> {
    if same_algebra(x.algebra(), y.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}
