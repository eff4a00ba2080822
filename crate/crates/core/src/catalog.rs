//! Complete lists of indecomposable modules.
//!
//! Every subcategory handled downstream is a set of indices into a
//! [`Catalog`]. The built-in generator covers line quivers (any orientation)
//! and oriented cycles; anything else has to be supplied as a catalog file.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{standard_module_at, BoundQuiverAlgebra, Path, StandardKind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::repcore::{
    endomorphism_idempotent, for_each_combination, hom_dim, is_isomorphic, same_algebra, Representation,
    DEFAULT_SEARCH_CAP,
};

/// Default bound on the number of arrow-matrix tuples tried by
/// [`bruteforce_indecomposables`].
pub const DEFAULT_BRUTEFORCE_CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub module: Representation,
}

#[derive(Debug)]
pub struct Catalog {
    alg: Arc<BoundQuiverAlgebra>,
    op: Arc<BoundQuiverAlgebra>,
    entries: Vec<CatalogEntry>,
    hom_dims: OnceLock<Vec<Vec<usize>>>,
    pub(crate) tau_cache: OnceLock<crate::tautheory::TauTable>,
}

impl Catalog {
    /// Wraps already-labelled modules, sorting them canonically by total
    /// dimension, then dimension vector (largest first in lexicographic
    /// order, so `S1` precedes `S2`), then label.
    pub fn new(alg: Arc<BoundQuiverAlgebra>, mut entries: Vec<CatalogEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !same_algebra(e.module.algebra(), &alg) {
                return Err(Error::AlgebraMismatch);
            }
            if !seen.insert(e.label.clone()) {
                return Err(Error::InvalidCatalog(format!("duplicate label {:?}", e.label)));
            }
        }
        entries.sort_by_key(sort_key);
        let op = Arc::new(alg.opposite());
        Ok(Catalog {
            alg,
            op,
            entries,
            hom_dims: OnceLock::new(),
            tau_cache: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.alg
    }

    /// Shared handle on the opposite algebra.
    pub fn opposite(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.op
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn modules(&self) -> impl Iterator<Item = &Representation> {
        self.entries.iter().map(|e| &e.module)
    }

    pub fn module(&self, i: usize) -> &Representation {
        &self.entries[i].module
    }

    pub fn label(&self, i: usize) -> &str {
        &self.entries[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.label == label)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    /// `hom_dims()[i][j] = dim Hom(E_i, E_j)`.
    pub fn hom_dims(&self) -> Result<&[Vec<usize>]> {
        if let Some(h) = self.hom_dims.get() {
            return Ok(h);
        }
        let table = self
            .modules()
            .map(|a| self.modules().map(|b| hom_dim(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let _ = self.hom_dims.set(table);
        Ok(self.hom_dims.get().expect("just set"))
    }

    /// Index of the entry isomorphic to `x`, if any.
    pub fn find(&self, x: &Representation) -> Result<Option<usize>> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.module.dims() == x.dims() && is_isomorphic(&e.module, x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Indices of the indecomposable projectives, in vertex order.
    pub fn projectives(&self) -> Result<Vec<usize>> {
        self.standard_indices(StandardKind::Projective)
    }

    /// Indices of the indecomposable injectives, in vertex order.
    pub fn injectives(&self) -> Result<Vec<usize>> {
        self.standard_indices(StandardKind::Injective)
    }

    fn standard_indices(&self, kind: StandardKind) -> Result<Vec<usize>> {
        (0..self.alg.vertex_count())
            .map(|v| {
                let m = standard_module_at(&self.alg, kind, v);
                self.find(&m)?.ok_or_else(|| {
                    Error::NotInCatalog(format!("{kind:?} module at vertex {}", self.alg.vertex_label(v)))
                })
            })
            .collect()
    }
}

fn sort_key(e: &CatalogEntry) -> (usize, Reverse<Vec<usize>>, String) {
    (
        e.module.total_dim(),
        Reverse(e.module.dims().to_vec()),
        e.label.clone(),
    )
}

/// Name of `x` if it is a simple, projective or injective, in that priority.
pub fn standard_label(x: &Representation) -> Result<Option<String>> {
    let alg = x.algebra();
    for (kind, prefix) in [
        (StandardKind::Simple, "S"),
        (StandardKind::Projective, "P"),
        (StandardKind::Injective, "I"),
    ] {
        for v in 0..alg.vertex_count() {
            let m = standard_module_at(alg, kind, v);
            if m.dims() == x.dims() && is_isomorphic(&m, x)? {
                return Ok(Some(format!("{prefix}{}", alg.vertex_label(v))));
            }
        }
    }
    Ok(None)
}

enum Shape {
    Line(Vec<usize>),
    Cycle,
}

fn detect_shape(alg: &BoundQuiverAlgebra) -> Result<Shape> {
    let q = alg.quiver();
    let n = q.vertex_count();
    let arrows = q.arrows();
    if n == 0 {
        return Err(Error::UnsupportedQuiver("no vertices".into()));
    }
    let mut out_deg = vec![0; n];
    let mut in_deg = vec![0; n];
    let mut neighbours = vec![Vec::new(); n];
    for a in arrows {
        out_deg[a.source] += 1;
        in_deg[a.target] += 1;
        neighbours[a.source].push(a.target);
        neighbours[a.target].push(a.source);
    }
    // connectivity of the underlying graph
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &neighbours[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::UnsupportedQuiver("quiver is not connected".into()));
    }
    if arrows.len() == n && (0..n).all(|v| out_deg[v] == 1 && in_deg[v] == 1) {
        return Ok(Shape::Cycle);
    }
    let is_line = arrows.len() + 1 == n
        && arrows.iter().all(|a| a.source != a.target)
        && neighbours.iter().all(|nb| nb.len() <= 2);
    if !is_line {
        return Err(Error::UnsupportedQuiver(
            "underlying graph is neither a line nor an oriented cycle".into(),
        ));
    }
    let start = (0..n)
        .find(|&v| neighbours[v].len() <= 1)
        .expect("a line has an end");
    let mut order = vec![start];
    while order.len() < n {
        let last = *order.last().unwrap();
        let next = neighbours[last]
            .iter()
            .copied()
            .find(|w| !order.contains(w))
            .ok_or_else(|| Error::UnsupportedQuiver("multiple arrows between two vertices".into()))?;
        order.push(next);
    }
    Ok(Shape::Line(order))
}

/// Every interval module of a line quiver, or every uniserial module of an
/// oriented cycle, that satisfies the relations.
pub fn interval_catalog(alg: &Arc<BoundQuiverAlgebra>) -> Result<Catalog> {
    let mut modules = Vec::new();
    match detect_shape(alg)? {
        Shape::Line(order) => {
            for s in 0..order.len() {
                for t in s..order.len() {
                    let members = &order[s..=t];
                    if let Some(m) = interval_module(alg, members) {
                        let fallback = format!(
                            "M[{}..{}]",
                            alg.vertex_label(order[s]),
                            alg.vertex_label(order[t])
                        );
                        modules.push((m, fallback));
                    }
                }
            }
        }
        Shape::Cycle => {
            let n = alg.vertex_count();
            for start in 0..n {
                let mut path = Path::trivial(start);
                loop {
                    let m = walk_module(alg, &path);
                    let mut fallback = format!(
                        "M[{}..{}]",
                        alg.vertex_label(path.start),
                        alg.vertex_label(path.end)
                    );
                    if path.len() >= n {
                        fallback.push_str(&format!(";{}", path.len() + 1));
                    }
                    modules.push((m, fallback));
                    let (ai, a) = alg
                        .quiver()
                        .arrows()
                        .iter()
                        .enumerate()
                        .find(|(_, a)| a.source == path.end)
                        .expect("cycle vertex has an outgoing arrow");
                    let mut next = path.clone();
                    next.arrows.push(ai);
                    next.end = a.target;
                    if alg.path_position(&next).is_none() {
                        break;
                    }
                    path = next;
                }
            }
        }
    }
    label_and_build(alg, modules)
}

fn label_and_build(alg: &Arc<BoundQuiverAlgebra>, modules: Vec<(Representation, String)>) -> Result<Catalog> {
    let mut entries = Vec::with_capacity(modules.len());
    let mut used = std::collections::BTreeSet::new();
    for (module, fallback) in modules {
        let mut label = standard_label(&module)?.unwrap_or(fallback);
        if used.contains(&label) {
            let base = label.clone();
            let mut k = 2;
            while used.contains(&label) {
                label = format!("{base}#{k}");
                k += 1;
            }
        }
        used.insert(label.clone());
        entries.push(CatalogEntry { label, module });
    }
    Catalog::new(alg.clone(), entries)
}

/// One-dimensional at each vertex of `members` (consecutive along the line),
/// identity on the arrows joining them. `None` if a relation survives.
fn interval_module(alg: &Arc<BoundQuiverAlgebra>, members: &[usize]) -> Option<Representation> {
    let f = alg.field();
    let n = alg.vertex_count();
    let mut dims = vec![0; n];
    for &v in members {
        dims[v] = 1;
    }
    let action = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            if dims[a.source] == 1 && dims[a.target] == 1 {
                m.set(0, 0, 1);
            }
            m
        })
        .collect();
    Representation::new(alg.clone(), dims, action).ok()
}

/// The uniserial module with basis the vertices visited along `path`.
fn walk_module(alg: &Arc<BoundQuiverAlgebra>, path: &Path) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let mut vertices = vec![path.start];
    for &a in &path.arrows {
        vertices.push(q.arrows()[a].target);
    }
    let mut dims = vec![0; alg.vertex_count()];
    let mut pos = Vec::with_capacity(vertices.len());
    for &v in &vertices {
        pos.push(dims[v]);
        dims[v] += 1;
    }
    let mut action: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    for (m, &a) in path.arrows.iter().enumerate() {
        action[a].set(pos[m + 1], pos[m], 1);
    }
    Representation::from_parts(alg.clone(), dims, action)
}

/// Every indecomposable with dimension vector bounded entrywise by
/// `max_dims`, found by trying all arrow matrices over GF(p).
pub fn bruteforce_indecomposables(alg: &Arc<BoundQuiverAlgebra>, max_dims: &[usize]) -> Result<Catalog> {
    bruteforce_indecomposables_with_cap(alg, max_dims, DEFAULT_BRUTEFORCE_CAP)
}

pub fn bruteforce_indecomposables_with_cap(
    alg: &Arc<BoundQuiverAlgebra>,
    max_dims: &[usize],
    cap: u128,
) -> Result<Catalog> {
    let n = alg.vertex_count();
    if max_dims.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} bounds for {} vertices",
            max_dims.len(),
            n
        )));
    }
    let f = alg.field();
    let arrows = alg.quiver().arrows();
    let dim_vectors = bounded_vectors(max_dims);
    let entries_for = |d: &[usize]| -> usize { arrows.iter().map(|a| d[a.source] * d[a.target]).sum() };
    let mut total: u128 = 0;
    for d in &dim_vectors {
        total = total.saturating_add((f.p() as u128).saturating_pow(entries_for(d) as u32));
    }
    if total > cap {
        return Err(Error::SearchCapExceeded {
            what: "brute-force indecomposable enumeration".into(),
            size: total,
            cap,
        });
    }
    let mut found: Vec<Representation> = Vec::new();
    for d in dim_vectors.iter().filter(|d| d.iter().any(|&x| x > 0)) {
        let count = entries_for(d);
        let mut err = None;
        for_each_combination(f.p(), count, cap, "brute-force matrices", |vals| {
            let mut k = 0;
            let action: Vec<Matrix> = arrows
                .iter()
                .map(|a| {
                    let mut m = Matrix::zeros(f, d[a.target], d[a.source]);
                    for r in 0..d[a.target] {
                        for c in 0..d[a.source] {
                            m.set(r, c, vals[k]);
                            k += 1;
                        }
                    }
                    m
                })
                .collect();
            let Ok(rep) = Representation::new(alg.clone(), d.clone(), action) else {
                return false;
            };
            let keep = (|| -> Result<bool> {
                if endomorphism_idempotent(&rep, DEFAULT_SEARCH_CAP)?.is_some() {
                    return Ok(false);
                }
                for g in &found {
                    if g.dims() == rep.dims() && is_isomorphic(g, &rep)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            match keep {
                Ok(true) => found.push(rep),
                Ok(false) => {}
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
            false
        })?;
        if let Some(e) = err {
            return Err(e);
        }
    }
    let modules = found
        .into_iter()
        .map(|m| {
            let fallback = format!("X{:?}", m.dims()).replace(' ', "");
            (m, fallback)
        })
        .collect();
    label_and_build(alg, modules)
}

fn bounded_vectors(max: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &m in max {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=m).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Outcome of [`validate_catalog`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogReport {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks relations, indecomposability, pairwise non-isomorphism, and runs
/// the brute-force oracle up to the largest dimensions present as a
/// completeness audit.
pub fn validate_catalog(cat: &Catalog) -> Result<CatalogReport> {
    let mut report = CatalogReport::default();
    for e in cat.entries() {
        if let Err(err) = e.module.validate() {
            report.violations.push(format!("{}: {err}", e.label));
            continue;
        }
        if e.module.is_zero() {
            report.violations.push(format!("{}: zero module", e.label));
            continue;
        }
        if endomorphism_idempotent(&e.module, DEFAULT_SEARCH_CAP)?.is_some() {
            report
                .violations
                .push(format!("{}: decomposable (nontrivial idempotent found)", e.label));
        }
    }
    for i in 0..cat.len() {
        for j in i + 1..cat.len() {
            if is_isomorphic(cat.module(i), cat.module(j))? {
                report
                    .violations
                    .push(format!("{} and {} are isomorphic", cat.label(i), cat.label(j)));
            }
        }
    }
    let n = cat.algebra().vertex_count();
    let max_dims: Vec<usize> = (0..n)
        .map(|v| cat.modules().map(|m| m.dims()[v]).max().unwrap_or(0).max(1))
        .collect();
    match bruteforce_indecomposables(cat.algebra(), &max_dims) {
        Ok(oracle) => {
            for m in oracle.modules() {
                if cat.find(m)?.is_none() {
                    report.warnings.push(format!(
                        "incomplete: indecomposable with dimension vector {:?} is missing",
                        m.dims()
                    ));
                }
            }
        }
        Err(Error::SearchCapExceeded { .. }) => report.warnings.push(format!(
            "completeness audit skipped: search up to {max_dims:?} exceeds the cap"
        )),
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// On-disk catalog: `{"algebra_hash", "entries": [{label, dims, action}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub algebra_hash: String,
    pub entries: Vec<CatalogFileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFileEntry {
    pub label: String,
    pub dims: Vec<usize>,
    /// Arrow name to row-major matrix; missing arrows act by zero.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
}

impl CatalogFile {
    pub fn from_catalog(cat: &Catalog) -> Self {
        let q = cat.algebra().quiver();
        CatalogFile {
            algebra_hash: cat.algebra().hash_hex(),
            entries: cat
                .entries()
                .iter()
                .map(|e| CatalogFileEntry {
                    label: e.label.clone(),
                    dims: e.module.dims().to_vec(),
                    action: q
                        .arrows()
                        .iter()
                        .enumerate()
                        .map(|(ai, a)| {
                            let rows = e
                                .module
                                .action(ai)
                                .to_rows()
                                .into_iter()
                                .map(|r| r.into_iter().map(i64::from).collect())
                                .collect();
                            (a.name.clone(), rows)
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Parses and validates a JSON catalog file for `alg`.
pub fn load_catalog(alg: &Arc<BoundQuiverAlgebra>, json: &str) -> Result<Catalog> {
    let file: CatalogFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("catalog file: {e}")))?;
    let expected = alg.hash_hex();
    if file.algebra_hash != expected {
        return Err(Error::InvalidCatalog(format!(
            "algebra_hash {} does not match the algebra ({expected})",
            file.algebra_hash
        )));
    }
    let q = alg.quiver();
    let f = alg.field();
    let mut entries = Vec::with_capacity(file.entries.len());
    for e in file.entries {
        if e.dims.len() != q.vertex_count() {
            return Err(Error::Parse(format!(
                "entry {}: {} dimensions for {} vertices",
                e.label,
                e.dims.len(),
                q.vertex_count()
            )));
        }
        for name in e.action.keys() {
            if q.arrow_index(name).is_none() {
                return Err(Error::Parse(format!("entry {}: unknown arrow {name:?}", e.label)));
            }
        }
        let mut action = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let m = match e.action.get(&a.name) {
                Some(rows) => {
                    if rows.len() != e.dims[a.target] {
                        return Err(Error::Parse(format!(
                            "entry {}: arrow {} needs {} rows, got {}",
                            e.label,
                            a.name,
                            e.dims[a.target],
                            rows.len()
                        )));
                    }
                    Matrix::from_rows(f, e.dims[a.source], rows)
                        .map_err(|err| Error::Parse(format!("entry {}: arrow {}: {err}", e.label, a.name)))?
                }
                None => Matrix::zeros(f, e.dims[a.target], e.dims[a.source]),
            };
            action.push(m);
        }
        let module = Representation::new(alg.clone(), e.dims, action)
            .map_err(|err| Error::InvalidCatalog(format!("{}: {err}", e.label)))?;
        entries.push(CatalogEntry {
            label: e.label,
            module,
        });
    }
    let cat = Catalog::new(alg.clone(), entries)?;
    let report = validate_catalog(&cat)?;
    if !report.passed() {
        return Err(Error::InvalidCatalog(report.violations.join("; ")));
    }
    Ok(cat)
}
