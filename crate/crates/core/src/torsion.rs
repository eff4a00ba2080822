//! Torsion and torsion-free classes as sets of catalog indices.
//!
//! Over a τ-tilting finite algebra every torsion class is `Fac M` for a
//! unique basic support τ-tilting `M`, so the lattice of torsion classes is
//! obtained by enumerating those modules. Smallest closures `T(C)`, `F(C)`
//! are then lattice minima; [`TorsionLattice::filt_closure_oracle`] computes
//! the same closures directly from submodule filtrations as a cross-check.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::repcore::{
    decompose, direct_sum, quotient_by, reject_of_family, submodules_of, trace_of_family, Morphism,
    Representation, Submodule,
};
use crate::tautheory::{enumerate_stt, ext1_dim, Side, SttPair};

/// The additive closure of a set of catalog entries; empty means `{0}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subcat(BTreeSet<usize>);

impl Subcat {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subcat(indices.into_iter().collect())
    }

    pub fn all(cat: &Catalog) -> Self {
        Subcat((0..cat.len()).collect())
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn is_subset(&self, other: &Subcat) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &Subcat) -> Subcat {
        Subcat(self.0.intersection(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Subcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl From<BTreeSet<usize>> for Subcat {
    fn from(s: BTreeSet<usize>) -> Self {
        Subcat(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassSide {
    Torsion,
    TorsionFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Fac,
    Sub,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionClassRecord {
    pub subcat: Subcat,
    pub side: ClassSide,
    pub generator: SttPair,
}

fn members<'a>(cat: &'a Catalog, set: &BTreeSet<usize>) -> Vec<&'a Representation> {
    set.iter().map(|&i| cat.module(i)).collect()
}

/// Whether `x` is generated by the entries in `m` (a quotient of a sum of them).
pub fn module_in_fac(cat: &Catalog, m: &BTreeSet<usize>, x: &Representation) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    Ok(trace_of_family(&members(cat, m), x)?.is_whole())
}

/// Whether `x` is cogenerated by the entries in `n` (embeds in a sum of them).
pub fn module_in_sub(cat: &Catalog, n: &BTreeSet<usize>, x: &Representation) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    Ok(reject_of_family(&members(cat, n), x)?.is_zero())
}

pub fn in_fac(cat: &Catalog, m: &BTreeSet<usize>, x: usize) -> Result<bool> {
    module_in_fac(cat, m, cat.module(x))
}

pub fn in_sub(cat: &Catalog, n: &BTreeSet<usize>, x: usize) -> Result<bool> {
    module_in_sub(cat, n, cat.module(x))
}

/// `Fac m` or `Sub m` as a set of catalog indices.
pub fn closure_subcat(cat: &Catalog, m: &BTreeSet<usize>, kind: Closure) -> Result<Subcat> {
    let mut out = BTreeSet::new();
    for x in 0..cat.len() {
        let inside = match kind {
            Closure::Fac => in_fac(cat, m, x)?,
            Closure::Sub => in_sub(cat, m, x)?,
        };
        if inside {
            out.insert(x);
        }
    }
    Ok(Subcat(out))
}

/// Which canonical sequence to build for a pair `(M, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SesSide {
    /// `0 -> U_M -> M -> P_M -> 0` for the torsion pair `(⊥N, Sub N)`.
    M,
    /// `0 -> I^N -> N -> V^N -> 0` for the torsion pair `(Fac M, M⊥)`.
    N,
}

/// A canonical short exact sequence `0 -> torsion -> middle -> free -> 0`.
#[derive(Clone, Debug)]
pub struct CanonicalSes {
    pub side: SesSide,
    pub middle: Representation,
    pub torsion_part: Representation,
    pub free_part: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
    /// Decompositions into catalog entries (sorted multisets).
    pub torsion_summands: Vec<usize>,
    pub middle_summands: Vec<usize>,
    pub free_summands: Vec<usize>,
}

/// Closures, canonical sequences and Ext-extremes over a fixed catalog.
#[derive(Debug)]
pub struct TorsionLattice {
    cat: Catalog,
    torsion: Vec<TorsionClassRecord>,
    torsionfree: Vec<TorsionClassRecord>,
    ext1: Vec<Vec<usize>>,
    /// For each entry `X`: `(summands of A, summands of X/A)` over all
    /// proper nonzero submodules `A`.
    filtrations: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
}

impl TorsionLattice {
    /// Enumerates all torsion and torsion-free classes and checks each is
    /// closed (the filtration oracle must leave it unchanged).
    pub fn new(cat: Catalog) -> Result<Self> {
        let n = cat.len();
        let ext1 = cat
            .modules()
            .map(|a| cat.modules().map(|b| ext1_dim(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut filtrations = Vec::with_capacity(n);
        for x in cat.modules() {
            let mut rows = Vec::new();
            for a in submodules_of(x)? {
                if a.is_zero() || a.is_whole() {
                    continue;
                }
                let q = quotient_by(x, &a)?;
                rows.push((decompose(a.module(), &cat)?, decompose(q.module(), &cat)?));
            }
            filtrations.push(rows);
        }
        let mut lattice = TorsionLattice {
            cat,
            torsion: Vec::new(),
            torsionfree: Vec::new(),
            ext1,
            filtrations,
        };
        lattice.torsion = lattice.enumerate_classes(ClassSide::Torsion)?;
        lattice.torsionfree = lattice.enumerate_classes(ClassSide::TorsionFree)?;
        Ok(lattice)
    }

    pub fn catalog(&self) -> &Catalog {
        &self.cat
    }

    pub fn into_catalog(self) -> Catalog {
        self.cat
    }

    fn enumerate_classes(&self, side: ClassSide) -> Result<Vec<TorsionClassRecord>> {
        let (stt_side, kind) = match side {
            ClassSide::Torsion => (Side::Plus, Closure::Fac),
            ClassSide::TorsionFree => (Side::Minus, Closure::Sub),
        };
        let mut out: Vec<TorsionClassRecord> = Vec::new();
        for generator in enumerate_stt(&self.cat, stt_side)? {
            let subcat = closure_subcat(&self.cat, &generator.module, kind)?;
            if out.iter().any(|r| r.subcat == subcat) {
                return Err(Error::Consistency(format!(
                    "two support τ-tilting modules share the class {subcat}"
                )));
            }
            if self.filt_closure_oracle(&subcat, side)? != subcat {
                return Err(Error::Consistency(format!(
                    "class {subcat} is not closed; the catalog is probably incomplete"
                )));
            }
            out.push(TorsionClassRecord {
                subcat,
                side,
                generator,
            });
        }
        Ok(out)
    }

    pub fn classes(&self, side: ClassSide) -> &[TorsionClassRecord] {
        match side {
            ClassSide::Torsion => &self.torsion,
            ClassSide::TorsionFree => &self.torsionfree,
        }
    }

    pub fn torsion_classes(&self) -> &[TorsionClassRecord] {
        &self.torsion
    }

    pub fn torsionfree_classes(&self) -> &[TorsionClassRecord] {
        &self.torsionfree
    }

    /// The enumerated support τ-tilting (τ⁻-tilting) pair with module `m`.
    pub fn stt(&self, side: Side, m: &BTreeSet<usize>) -> Option<&SttPair> {
        let list = match side {
            Side::Plus => &self.torsion,
            Side::Minus => &self.torsionfree,
        };
        list.iter().map(|r| &r.generator).find(|g| &g.module == m)
    }

    /// The class generated (cogenerated) by an enumerated pair.
    pub fn class_of(&self, pair: &SttPair) -> Option<&TorsionClassRecord> {
        let list = match pair.side {
            Side::Plus => &self.torsion,
            Side::Minus => &self.torsionfree,
        };
        list.iter().find(|r| r.generator.module == pair.module)
    }

    /// `dim Ext^1(E_i, E_j)` for catalog entries.
    pub fn ext1(&self, i: usize, j: usize) -> usize {
        self.ext1[i][j]
    }

    /// `T(C)` or `F(C)`: the least enumerated class containing `c`. Also
    /// checks that it equals the intersection of all classes containing `c`.
    pub fn smallest_closure(&self, c: &Subcat, side: ClassSide) -> Result<&TorsionClassRecord> {
        let containing: Vec<&TorsionClassRecord> = self
            .classes(side)
            .iter()
            .filter(|r| c.is_subset(&r.subcat))
            .collect();
        let meet = containing
            .iter()
            .fold(Subcat::all(&self.cat), |acc, r| acc.intersection(&r.subcat));
        containing
            .into_iter()
            .find(|r| r.subcat == meet)
            .ok_or_else(|| Error::Consistency(format!("no least class contains {c}")))
    }

    /// Closure of `c` under quotients (submodules) and extensions, iterated to
    /// a fixpoint using explicit submodule filtrations of catalog entries.
    pub fn filt_closure_oracle(&self, c: &Subcat, side: ClassSide) -> Result<Subcat> {
        let mut current = c.0.clone();
        loop {
            let mut changed = false;
            for x in 0..self.cat.len() {
                if current.contains(&x) {
                    continue;
                }
                let closed = match side {
                    ClassSide::Torsion => in_fac(&self.cat, &current, x)?,
                    ClassSide::TorsionFree => in_sub(&self.cat, &current, x)?,
                };
                let extension = self.filtrations[x].iter().any(|(sub, quot)| {
                    sub.iter().all(|k| current.contains(k)) && quot.iter().all(|k| current.contains(k))
                });
                if closed || extension {
                    current.insert(x);
                    changed = true;
                }
            }
            if !changed {
                return Ok(Subcat(current));
            }
        }
    }

    /// The torsion submodule of `x` for a torsion class.
    pub fn torsion_radical(&self, class: &TorsionClassRecord, x: &Representation) -> Result<Submodule> {
        if class.side != ClassSide::Torsion {
            return Err(Error::Consistency(
                "torsion radical of a torsion-free class".into(),
            ));
        }
        trace_of_family(&members(&self.cat, &class.subcat.0), x)
    }

    /// The canonical sequence of `M` with respect to `(⊥N, Sub N)` (side M)
    /// or of `N` with respect to `(Fac M, M⊥)` (side N).
    pub fn canonical_ses(
        &self,
        m: &BTreeSet<usize>,
        n: &BTreeSet<usize>,
        side: SesSide,
    ) -> Result<CanonicalSes> {
        let alg = self.cat.algebra();
        let (middle_set, sub) = match side {
            SesSide::M => {
                let mid = direct_sum(alg, &members(&self.cat, m))?;
                let u = reject_of_family(&members(&self.cat, n), &mid)?;
                (m, (mid, u))
            }
            SesSide::N => {
                let mid = direct_sum(alg, &members(&self.cat, n))?;
                let i = trace_of_family(&members(&self.cat, m), &mid)?;
                (n, (mid, i))
            }
        };
        let (middle, torsion) = sub;
        let quotient = quotient_by(&middle, &torsion)?;
        let composite = torsion.inclusion().then(quotient.projection());
        let exact_dims = (0..middle.dims().len())
            .all(|v| torsion.dims()[v] + quotient.module().dims()[v] == middle.dims()[v]);
        if !composite.is_zero() || !exact_dims {
            return Err(Error::Consistency("canonical sequence is not exact".into()));
        }
        Ok(CanonicalSes {
            side,
            torsion_summands: decompose(torsion.module(), &self.cat)?,
            middle_summands: middle_set.iter().copied().collect(),
            free_summands: decompose(quotient.module(), &self.cat)?,
            torsion_part: torsion.module().clone(),
            free_part: quotient.module().clone(),
            inclusion: torsion.inclusion().clone(),
            projection: quotient.projection().clone(),
            middle,
        })
    }

    /// Ext-projective (or Ext-injective) entries of `c`.
    pub fn ext_extremes(&self, c: &Subcat, side: Extreme) -> BTreeSet<usize> {
        c.iter()
            .filter(|&x| {
                c.iter().all(|y| match side {
                    Extreme::Projective => self.ext1[x][y] == 0,
                    Extreme::Injective => self.ext1[y][x] == 0,
                })
            })
            .collect()
    }

    /// Basic Ext-progenerator (or Ext-injective cogenerator) of an
    /// IE-closed `c`: the sum of all its Ext-projectives (Ext-injectives).
    pub fn progenerator(&self, c: &Subcat, side: Extreme) -> BTreeSet<usize> {
        self.ext_extremes(c, side)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Projective,
    Injective,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{catalog, hereditary, indices, nakayama, sum};
    use crate::repcore::decompose;

    fn lattice(alg: &std::sync::Arc<crate::algebra::BoundQuiverAlgebra>) -> TorsionLattice {
        TorsionLattice::new(catalog(alg)).unwrap()
    }

    fn set(cat: &Catalog, labels: &[&str]) -> BTreeSet<usize> {
        indices(cat, labels).into_iter().collect()
    }

    #[test]
    fn membership() {
        let cat = catalog(&nakayama(2));
        let s2 = cat.index_of("S2").unwrap();
        assert!(in_fac(&cat, &set(&cat, &["P2"]), s2).unwrap());
        assert!(!in_fac(&cat, &set(&cat, &["P1"]), s2).unwrap());
        assert!(in_sub(&cat, &set(&cat, &["P1"]), s2).unwrap());
        assert!(!in_sub(&cat, &set(&cat, &["P2"]), cat.index_of("S1").unwrap()).unwrap());
        for x in 0..cat.len() {
            let own = BTreeSet::from([x]);
            assert!(in_fac(&cat, &own, x).unwrap());
            assert!(in_sub(&cat, &own, x).unwrap());
        }
    }

    #[test]
    fn closures() {
        let cat = catalog(&nakayama(2));
        let fac = closure_subcat(&cat, &set(&cat, &["S1", "S3", "P1"]), Closure::Fac).unwrap();
        assert_eq!(fac.indices(), &set(&cat, &["S1", "S3", "P1"]));
        let sub = closure_subcat(&cat, &set(&cat, &["S1", "S3", "P2"]), Closure::Sub).unwrap();
        assert_eq!(sub.indices(), &set(&cat, &["S1", "S3", "P2"]));
        assert!(closure_subcat(&cat, &BTreeSet::new(), Closure::Fac)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn class_counts() {
        let lat = lattice(&nakayama(2));
        assert_eq!(lat.torsion_classes().len(), 12);
        assert_eq!(lat.torsionfree_classes().len(), 12);
        let lat = lattice(&hereditary(2));
        assert_eq!(lat.torsion_classes().len(), 5);
        assert_eq!(lat.torsionfree_classes().len(), 5);
    }

    #[test]
    fn smallest_closures() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        let c = Subcat::new(set(cat, &["S1", "S3"]));
        assert_eq!(lat.smallest_closure(&c, ClassSide::Torsion).unwrap().subcat, c);
        assert!(lat
            .smallest_closure(&Subcat::default(), ClassSide::Torsion)
            .unwrap()
            .subcat
            .is_empty());

        let lat = lattice(&hereditary(2));
        let cat = lat.catalog();
        let f = lat
            .smallest_closure(&Subcat::new(set(cat, &["P2"])), ClassSide::TorsionFree)
            .unwrap();
        assert_eq!(f.subcat.indices(), &set(cat, &["P2", "S1"]));
    }

    #[test]
    fn oracle() {
        let lat = lattice(&hereditary(2));
        let cat = lat.catalog();
        let c = Subcat::new(set(cat, &["S1", "S2"]));
        let closed = lat.filt_closure_oracle(&c, ClassSide::Torsion).unwrap();
        assert!(closed.contains(cat.index_of("P2").unwrap()));
        for record in lat.torsion_classes() {
            assert_eq!(
                lat.filt_closure_oracle(&record.subcat, ClassSide::Torsion)
                    .unwrap(),
                record.subcat
            );
        }
    }

    #[test]
    fn radical() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        let alg = cat.algebra().clone();
        let m = set(cat, &["S1", "S3", "P1"]);
        let class = lat.class_of(lat.stt(Side::Plus, &m).unwrap()).unwrap();
        let n = sum(&alg, &["S1", "S3", "P2"]);
        let t = lat.torsion_radical(class, &n).unwrap();
        assert_eq!(
            decompose(t.module(), cat).unwrap(),
            indices(cat, &["S1", "S3", "S3"])
        );

        let inside = sum(&alg, &["S1", "P1"]);
        assert!(lat.torsion_radical(class, &inside).unwrap().is_whole());
        let outside = sum(&alg, &["S2"]);
        assert!(lat.torsion_radical(class, &outside).unwrap().is_zero());
    }

    #[test]
    fn canonical_sequences() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        let m = set(cat, &["S1", "S3", "P1"]);
        let n = set(cat, &["S1", "S3", "P2"]);
        let ses = lat.canonical_ses(&m, &n, SesSide::M).unwrap();
        assert_eq!(ses.torsion_summands, indices(cat, &["S2"]));
        assert_eq!(ses.free_summands, indices(cat, &["S1", "S1", "S3"]));
        let ses = lat.canonical_ses(&m, &n, SesSide::N).unwrap();
        assert_eq!(ses.torsion_summands, indices(cat, &["S1", "S3", "S3"]));
        assert_eq!(ses.free_summands, indices(cat, &["S2"]));

        let m = set(cat, &["S1", "S3"]);
        let ses = lat.canonical_ses(&m, &m, SesSide::M).unwrap();
        assert!(ses.torsion_summands.is_empty());
        assert_eq!(ses.free_summands, indices(cat, &["S1", "S3"]));
    }

    #[test]
    fn extremes() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        let sc = |l: &[&str]| Subcat::new(set(cat, l));
        let c = sc(&["S1", "S3"]);
        assert_eq!(lat.ext_extremes(&c, Extreme::Projective), set(cat, &["S1", "S3"]));
        let all = Subcat::all(cat);
        assert_eq!(
            lat.ext_extremes(&all, Extreme::Projective),
            set(cat, &["P1", "P2", "S3"])
        );
        assert_eq!(
            lat.ext_extremes(&all, Extreme::Injective),
            set(cat, &["P1", "P2", "S1"])
        );
        assert_eq!(
            lat.ext_extremes(&sc(&["P1"]), Extreme::Projective),
            set(cat, &["P1"])
        );

        let c = sc(&["S2", "S3", "P1", "P2"]);
        assert_eq!(
            lat.progenerator(&c, Extreme::Projective),
            set(cat, &["S3", "P1", "P2"])
        );
        assert_eq!(
            lat.progenerator(&c, Extreme::Injective),
            set(cat, &["S2", "P1", "P2"])
        );
        assert!(lat
            .progenerator(&Subcat::default(), Extreme::Projective)
            .is_empty());
    }

    #[test]
    fn supports_agree() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        for bits in 0u32..1 << cat.len() {
            let c = Subcat::new((0..cat.len()).filter(|i| bits >> i & 1 == 1));
            let supp = crate::tautheory::supp_of(cat, c.indices());
            for side in [ClassSide::Torsion, ClassSide::TorsionFree] {
                let closed = lat.smallest_closure(&c, side).unwrap();
                assert_eq!(crate::tautheory::supp_of(cat, closed.subcat.indices()), supp);
            }
        }
    }
}
