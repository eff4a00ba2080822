//! Bound quiver algebras `kQ/I` with `I` generated by zero relations.
//!
//! Paths are written left to right: `ab` means "first `a`, then `b`". Right
//! modules are realised as covariant representations, so the indecomposable
//! projective `P_i` has basis the surviving paths that start at `i`.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::repcore::Representation;

/// Default bound on the length of a surviving path.
pub const DEFAULT_PATH_LENGTH_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let lookup = |label: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name:?}")));
            }
            out.push(Arrow {
                name,
                source: lookup(s.as_ref())?,
                target: lookup(t.as_ref())?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A zero relation: a composable path of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialRelation {
    arrows: Vec<usize>,
}

impl MonomialRelation {
    pub fn new<S: AsRef<str>>(quiver: &Quiver, names: &[S]) -> Result<Self> {
        let shown = || names.iter().map(|n| n.as_ref()).collect::<Vec<_>>().join("");
        if names.len() < 2 {
            return Err(Error::NonComposableRelation(format!("{} (length < 2)", shown())));
        }
        let mut arrows = Vec::with_capacity(names.len());
        for n in names {
            let idx = quiver.arrow_index(n.as_ref()).ok_or_else(|| {
                Error::NonComposableRelation(format!("{} (unknown arrow {:?})", shown(), n.as_ref()))
            })?;
            arrows.push(idx);
        }
        for w in arrows.windows(2) {
            if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                return Err(Error::NonComposableRelation(shown()));
            }
        }
        Ok(MonomialRelation { arrows })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }
}

/// A path in the quiver; trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// A trivial path (no arrows).
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<MonomialRelation>,
    field: Field,
    /// `path_basis[i][j]`: surviving paths from `i` to `j`, shortest first.
    path_basis: Vec<Vec<Vec<Path>>>,
    path_index: HashMap<Path, usize>,
}

impl BoundQuiverAlgebra {
    pub fn build(quiver: Quiver, relations: Vec<MonomialRelation>, field: Field) -> Result<Self> {
        Self::build_with_cap(quiver, relations, field, DEFAULT_PATH_LENGTH_CAP)
    }

    /// Breadth-first path enumeration, dropping every path that ends in a
    /// relation. Since prefixes of surviving paths survive, checking the
    /// suffix is enough.
    pub fn build_with_cap(
        quiver: Quiver,
        relations: Vec<MonomialRelation>,
        field: Field,
        max_len: usize,
    ) -> Result<Self> {
        let n = quiver.vertex_count();
        let mut path_basis = vec![vec![Vec::new(); n]; n];
        let mut queue: VecDeque<Path> = (0..n).map(Path::trivial).collect();
        while let Some(path) = queue.pop_front() {
            for (ai, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != path.end {
                    continue;
                }
                let mut arrows = path.arrows.clone();
                arrows.push(ai);
                if relations.iter().any(|r| arrows.ends_with(&r.arrows)) {
                    continue;
                }
                if arrows.len() > max_len {
                    return Err(Error::InfiniteDimensional(max_len));
                }
                queue.push_back(Path {
                    start: path.start,
                    end: arrow.target,
                    arrows,
                });
            }
            path_basis[path.start][path.end].push(path);
        }
        let mut path_index = HashMap::new();
        for row in &path_basis {
            for paths in row {
                for (k, p) in paths.iter().enumerate() {
                    path_index.insert(p.clone(), k);
                }
            }
        }
        Ok(BoundQuiverAlgebra {
            quiver,
            relations,
            field,
            path_basis,
            path_index,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[MonomialRelation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    /// Surviving paths from `i` to `j`.
    pub fn paths(&self, i: usize, j: usize) -> &[Path] {
        &self.path_basis[i][j]
    }

    /// Position of `path` within `paths(path.start, path.end)`, if it survives.
    pub fn path_position(&self, path: &Path) -> Option<usize> {
        self.path_index.get(path).copied()
    }

    pub fn dim(&self) -> usize {
        self.path_basis.iter().flatten().map(Vec::len).sum()
    }

    /// Same algebra with a different ground field.
    pub fn with_field(&self, field: Field) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra {
            field,
            ..self.clone()
        }
    }

    /// Arrows reversed, relations read backwards.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let relations = self
            .relations
            .iter()
            .map(|r| MonomialRelation {
                arrows: r.arrows.iter().rev().copied().collect(),
            })
            .collect();
        // cannot fail: reversal keeps the path space in bijection
        Self::build_with_cap(self.quiver.reversed(), relations, self.field, usize::MAX)
            .expect("opposite of a finite-dimensional algebra")
    }

    /// Whether `other` is (structurally) the opposite of `self`.
    pub fn is_opposite_of(&self, other: &BoundQuiverAlgebra) -> bool {
        self.field == other.field
            && self.quiver == other.quiver.reversed()
            && self.relations.len() == other.relations.len()
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|(a, b)| a.arrows.iter().eq(b.arrows.iter().rev()))
    }

    /// Stable fingerprint of quiver, relations and field.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("p={};", self.field.p()));
        for v in &self.quiver.vertices {
            h.update(format!("v:{v};"));
        }
        for a in &self.quiver.arrows {
            h.update(format!(
                "a:{}:{}->{};",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            ));
        }
        for r in &self.relations {
            let names: Vec<&str> = r
                .arrows
                .iter()
                .map(|&a| self.quiver.arrows[a].name.as_str())
                .collect();
            h.update(format!("r:{};", names.join(",")));
        }
        h.finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect::<String>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Projective,
    Injective,
    Simple,
}

/// `P_v`, `I_v` or `S_v`.
pub fn standard_module(
    alg: &Arc<BoundQuiverAlgebra>,
    kind: StandardKind,
    vertex: &str,
) -> Result<Representation> {
    let v = alg.quiver.vertex_index(vertex)?;
    Ok(standard_module_at(alg, kind, v))
}

pub(crate) fn standard_module_at(
    alg: &Arc<BoundQuiverAlgebra>,
    kind: StandardKind,
    v: usize,
) -> Representation {
    let n = alg.vertex_count();
    let f = alg.field;
    match kind {
        StandardKind::Simple => {
            let mut dims = vec![0; n];
            dims[v] = 1;
            let action = alg
                .quiver
                .arrows
                .iter()
                .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
                .collect();
            Representation::from_parts(alg.clone(), dims, action)
        }
        StandardKind::Projective => {
            let dims: Vec<usize> = (0..n).map(|j| alg.paths(v, j).len()).collect();
            let action = alg
                .quiver
                .arrows
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                    for (col, q) in alg.paths(v, a.source).iter().enumerate() {
                        let mut arrows = q.arrows.clone();
                        arrows.push(ai);
                        let ext = Path {
                            start: v,
                            end: a.target,
                            arrows,
                        };
                        if let Some(row) = alg.path_position(&ext) {
                            m.set(row, col, 1);
                        }
                    }
                    m
                })
                .collect();
            Representation::from_parts(alg.clone(), dims, action)
        }
        StandardKind::Injective => {
            let dims: Vec<usize> = (0..n).map(|j| alg.paths(j, v).len()).collect();
            let action = alg
                .quiver
                .arrows
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                    for (col, q) in alg.paths(a.source, v).iter().enumerate() {
                        if q.arrows.first() != Some(&ai) {
                            continue;
                        }
                        let rest = Path {
                            start: a.target,
                            end: v,
                            arrows: q.arrows[1..].to_vec(),
                        };
                        if let Some(row) = alg.path_position(&rest) {
                            m.set(row, col, 1);
                        }
                    }
                    m
                })
                .collect();
            Representation::from_parts(alg.clone(), dims, action)
        }
    }
}
