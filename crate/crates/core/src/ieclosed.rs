//! IE-closed subcategories, twin support τ-tilting modules and Ext-pairs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repcore::{
    direct_sum, generated_submodules, quotient_by, reject_of_family, Representation, DEFAULT_SEARCH_CAP,
};
use crate::tautheory::{Side, SttPair};
use crate::torsion::{closure_subcat, ClassSide, Closure, Extreme, SesSide, Subcat, TorsionLattice};

/// Default multiplicity bound for the `Cok`/`Ker` searches in [`classify`].
pub const DEFAULT_CLASSIFY_BOUND: usize = 2;

/// `(M, N)` with `M` support τ-tilting and `N` support τ⁻-tilting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwinPair {
    pub m: SttPair,
    pub n: SttPair,
}

impl TwinPair {
    /// Looks both modules up among the enumerated pairs.
    pub fn from_sets(lat: &TorsionLattice, m: &BTreeSet<usize>, n: &BTreeSet<usize>) -> Result<Self> {
        let label = |s: &BTreeSet<usize>| {
            let v: Vec<&str> = s.iter().map(|&i| lat.catalog().label(i)).collect();
            if v.is_empty() {
                "0".to_string()
            } else {
                v.join("+")
            }
        };
        let m = lat
            .stt(Side::Plus, m)
            .cloned()
            .ok_or_else(|| Error::Consistency(format!("{} is not support τ-tilting", label(m))))?;
        let n = lat
            .stt(Side::Minus, n)
            .cloned()
            .ok_or_else(|| Error::Consistency(format!("{} is not support τ⁻-tilting", label(n))))?;
        Ok(TwinPair { m, n })
    }

    pub fn key(&self) -> (&BTreeSet<usize>, &BTreeSet<usize>) {
        (&self.m.module, &self.n.module)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtPair {
    pub p: BTreeSet<usize>,
    pub i: BTreeSet<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub is_torsion: bool,
    pub is_torsionfree: bool,
    pub is_ice: bool,
    pub is_ike: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IeRecord {
    pub subcat: Subcat,
    pub twin: TwinPair,
    pub extpair: ExtPair,
    pub flags: Flags,
}

fn fac(lat: &TorsionLattice, pair: &SttPair) -> Result<Subcat> {
    match lat.class_of(pair) {
        Some(r) => Ok(r.subcat.clone()),
        None => closure_subcat(lat.catalog(), &pair.module, Closure::Fac),
    }
}

fn sub(lat: &TorsionLattice, pair: &SttPair) -> Result<Subcat> {
    match lat.class_of(pair) {
        Some(r) => Ok(r.subcat.clone()),
        None => closure_subcat(lat.catalog(), &pair.module, Closure::Sub),
    }
}

/// `Fac M ∩ Sub N`.
pub fn phi(lat: &TorsionLattice, t: &TwinPair) -> Result<Subcat> {
    Ok(fac(lat, &t.m)?.intersection(&sub(lat, &t.n)?))
}

/// `(M_C, N_C)`: generators of `T(C)` and `F(C)`.
pub fn psi(lat: &TorsionLattice, c: &Subcat) -> Result<TwinPair> {
    Ok(TwinPair {
        m: lat.smallest_closure(c, ClassSide::Torsion)?.generator.clone(),
        n: lat.smallest_closure(c, ClassSide::TorsionFree)?.generator.clone(),
    })
}

fn as_subcat(summands: &[usize]) -> Subcat {
    Subcat::new(summands.iter().copied())
}

/// `P_M` and `I^N` as index sets.
fn canonical_parts(lat: &TorsionLattice, t: &TwinPair) -> Result<(Subcat, Subcat)> {
    let pm = lat.canonical_ses(&t.m.module, &t.n.module, SesSide::M)?;
    let in_ = lat.canonical_ses(&t.m.module, &t.n.module, SesSide::N)?;
    Ok((as_subcat(&pm.free_summands), as_subcat(&in_.torsion_summands)))
}

/// Whether `Fac M = T(C)` and `Sub N = F(C)` for `C = Φ(M, N)`. The
/// equivalent test `Fac M = T(P_M)`, `Sub N = F(I^N)` is run as well and
/// the two must agree.
pub fn is_canonical(lat: &TorsionLattice, t: &TwinPair) -> Result<bool> {
    let c = phi(lat, t)?;
    let fm = fac(lat, &t.m)?;
    let sn = sub(lat, &t.n)?;
    let by_definition = lat.smallest_closure(&c, ClassSide::Torsion)?.subcat == fm
        && lat.smallest_closure(&c, ClassSide::TorsionFree)?.subcat == sn;
    let (pm, in_) = canonical_parts(lat, t)?;
    let by_sequences = lat.smallest_closure(&pm, ClassSide::Torsion)?.subcat == fm
        && lat.smallest_closure(&in_, ClassSide::TorsionFree)?.subcat == sn;
    if by_definition != by_sequences {
        return Err(Error::Consistency(format!(
            "canonicity criteria disagree for ({:?}, {:?})",
            t.m.module, t.n.module
        )));
    }
    Ok(by_definition)
}

/// `(M*, N*)` with `Fac M* = T(P_M)` and `Sub N* = F(I^N)`.
pub fn canonicalize(lat: &TorsionLattice, t: &TwinPair) -> Result<TwinPair> {
    let (pm, in_) = canonical_parts(lat, t)?;
    Ok(TwinPair {
        m: lat.smallest_closure(&pm, ClassSide::Torsion)?.generator.clone(),
        n: lat
            .smallest_closure(&in_, ClassSide::TorsionFree)?
            .generator
            .clone(),
    })
}

/// `(P_M, I^N)` of the canonical form of `t`, checked against the
/// Ext-projectives and Ext-injectives of `Φ(t)`.
pub fn ext_pair(lat: &TorsionLattice, t: &TwinPair) -> Result<ExtPair> {
    let t = if is_canonical(lat, t)? {
        t.clone()
    } else {
        canonicalize(lat, t)?
    };
    let (pm, in_) = canonical_parts(lat, &t)?;
    let c = phi(lat, &t)?;
    let p = pm.indices().clone();
    let i = in_.indices().clone();
    if p != lat.progenerator(&c, Extreme::Projective) || i != lat.progenerator(&c, Extreme::Injective) {
        return Err(Error::Consistency(format!(
            "Ext-pair of ({:?}, {:?}) does not match the Ext-progenerator of {c}",
            t.m.module, t.n.module
        )));
    }
    Ok(ExtPair { p, i })
}

/// `T(P) ∩ F(I)`.
pub fn phi_prime(lat: &TorsionLattice, e: &ExtPair) -> Result<Subcat> {
    let t = lat.smallest_closure(&Subcat::from(e.p.clone()), ClassSide::Torsion)?;
    let f = lat.smallest_closure(&Subcat::from(e.i.clone()), ClassSide::TorsionFree)?;
    Ok(t.subcat.intersection(&f.subcat))
}

/// The Ext-pair of an IE-closed subcategory, via its canonical twin.
pub fn psi_prime(lat: &TorsionLattice, c: &Subcat) -> Result<ExtPair> {
    ext_pair(lat, &psi(lat, c)?)
}

/// All twin pairs `(M, N)`, in enumeration order.
pub fn all_twins(lat: &TorsionLattice) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for m in lat.torsion_classes() {
        for n in lat.torsionfree_classes() {
            out.push(TwinPair {
                m: m.generator.clone(),
                n: n.generator.clone(),
            });
        }
    }
    out
}

/// Every IE-closed subcategory with its canonical twin, Ext-pair and flags,
/// sorted by size and then by indices.
pub fn enumerate_ie(lat: &TorsionLattice) -> Result<Vec<IeRecord>> {
    enumerate_ie_with_bound(lat, DEFAULT_CLASSIFY_BOUND)
}

pub fn enumerate_ie_with_bound(lat: &TorsionLattice, bound: usize) -> Result<Vec<IeRecord>> {
    let mut subcats = BTreeSet::new();
    for t in lat.torsion_classes() {
        for f in lat.torsionfree_classes() {
            subcats.insert(t.subcat.intersection(&f.subcat));
        }
    }
    let mut subcats: Vec<Subcat> = subcats.into_iter().collect();
    subcats.sort_by_key(|c| (c.len(), c.indices().iter().copied().collect::<Vec<_>>()));
    let mut out = Vec::with_capacity(subcats.len());
    for c in subcats {
        let twin = psi(lat, &c)?;
        if phi(lat, &twin)? != c {
            return Err(Error::Consistency(format!("Φ(Ψ(C)) differs from C = {c}")));
        }
        if !is_canonical(lat, &twin)? {
            return Err(Error::Consistency(format!("Ψ({c}) is not canonical")));
        }
        let extpair = ext_pair(lat, &twin)?;
        if phi_prime(lat, &extpair)? != c {
            return Err(Error::Consistency(format!("Φ′(Ψ′(C)) differs from C = {c}")));
        }
        let flags = classify(lat, &c, &twin, bound)?;
        out.push(IeRecord {
            subcat: c,
            twin,
            extpair,
            flags,
        });
    }
    Ok(out)
}

/// Torsion / torsion-free / ICE / IKE flags of `c = Φ(twin)`.
///
/// ICE: every cokernel of a map between objects of `c` lies in `Sub N`
/// (it is always in `Fac M`). Cokernels are enumerated as `Y/U` with `Y` a
/// sum of members of `c` with multiplicities at most `bound` and `U` a
/// `c`-generated submodule. IKE is the dual test over the opposite algebra.
pub fn classify(lat: &TorsionLattice, c: &Subcat, twin: &TwinPair, bound: usize) -> Result<Flags> {
    let fm = fac(lat, &twin.m)?;
    let sn = sub(lat, &twin.n)?;
    let is_torsion = fm.is_subset(&sn);
    let is_torsionfree = sn.is_subset(&fm);
    let cat = lat.catalog();
    // Cokernels lie in Fac C and kernels in Sub C, so these inclusions settle
    // the question without a search.
    let fac_c = closure_subcat(cat, c.indices(), Closure::Fac)?;
    let sub_c = closure_subcat(cat, c.indices(), Closure::Sub)?;
    let is_ice = is_torsion || fac_c.is_subset(&sn) || {
        let family: Vec<&Representation> = c.iter().map(|i| cat.module(i)).collect();
        let cogen: Vec<&Representation> = twin.n.module.iter().map(|&i| cat.module(i)).collect();
        cokernels_cogenerated(&family, &cogen, bound)?
    };
    let is_ike = is_torsionfree || sub_c.is_subset(&fm) || {
        let op = cat.opposite();
        let family = c
            .iter()
            .map(|i| cat.module(i).dual_over(op))
            .collect::<Result<Vec<_>>>()?;
        let cogen = twin
            .m
            .module
            .iter()
            .map(|&i| cat.module(i).dual_over(op))
            .collect::<Result<Vec<_>>>()?;
        cokernels_cogenerated(
            &family.iter().collect::<Vec<_>>(),
            &cogen.iter().collect::<Vec<_>>(),
            bound,
        )?
    };
    Ok(Flags {
        is_torsion,
        is_torsionfree,
        is_ice,
        is_ike,
    })
}

/// Whether every `Y/U` (as in [`classify`]) embeds in a sum of `cogen`.
fn cokernels_cogenerated(
    family: &[&Representation],
    cogen: &[&Representation],
    bound: usize,
) -> Result<bool> {
    let Some(first) = family.first() else {
        return Ok(true);
    };
    let alg = first.algebra().clone();
    // smaller sums first, so counterexamples turn up early
    let mut vectors: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in family {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    vectors.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    for mult in vectors.into_iter().skip(1) {
        let parts: Vec<&Representation> = family
            .iter()
            .zip(&mult)
            .flat_map(|(m, &c)| std::iter::repeat_n(*m, c))
            .collect();
        let y = direct_sum(&alg, &parts)?;
        for u in generated_submodules(family, &y, DEFAULT_SEARCH_CAP)? {
            let q = quotient_by(&y, &u)?;
            if !reject_of_family(cogen, q.module())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts and round-trip checks for the bijections between IE-closed
/// subcategories, canonical twin pairs and Ext-pairs.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BijectionReport {
    pub ie_closed: usize,
    pub canonical_twins: usize,
    pub ext_pairs: usize,
    pub twin_pairs: usize,
    pub equal_support_twins: usize,
    pub violations: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.ie_closed == self.canonical_twins
            && self.ie_closed == self.ext_pairs
    }
}

pub fn verify_bijections(lat: &TorsionLattice) -> Result<BijectionReport> {
    let records = enumerate_ie(lat)?;
    verify_bijections_with(lat, &records)
}

/// As [`verify_bijections`], reusing already enumerated records.
pub fn verify_bijections_with(lat: &TorsionLattice, records: &[IeRecord]) -> Result<BijectionReport> {
    let mut report = BijectionReport {
        ie_closed: records.len(),
        ..Default::default()
    };
    let mut canonical = BTreeSet::new();
    for t in all_twins(lat) {
        report.twin_pairs += 1;
        if t.m.support == t.n.support {
            report.equal_support_twins += 1;
        }
        let c = phi(lat, &t)?;
        let back = psi(lat, &c)?;
        if is_canonical(lat, &t)? {
            if back != t {
                report.violations.push(format!(
                    "Ψ(Φ(t)) ≠ t for canonical t = ({:?}, {:?})",
                    t.m.module, t.n.module
                ));
            }
            if t.m.support != t.n.support {
                report.violations.push(format!(
                    "canonical twin ({:?}, {:?}) has unequal supports",
                    t.m.module, t.n.module
                ));
            }
            canonical.insert(t.clone());
        } else {
            let star = canonicalize(lat, &t)?;
            if back != star {
                report.violations.push(format!(
                    "Ψ(Φ(t)) ≠ canonicalize(t) for t = ({:?}, {:?})",
                    t.m.module, t.n.module
                ));
            }
            if phi(lat, &star)? != c || canonicalize(lat, &star)? != star {
                report.violations.push(format!(
                    "canonicalize is not Φ-preserving and idempotent at ({:?}, {:?})",
                    t.m.module, t.n.module
                ));
            }
        }
    }
    report.canonical_twins = canonical.len();
    let record_twins: BTreeSet<TwinPair> = records.iter().map(|r| r.twin.clone()).collect();
    if record_twins != canonical {
        report
            .violations
            .push("canonical twins differ from the twins of the IE-closed subcategories".into());
    }
    let ext_pairs: BTreeSet<ExtPair> = records.iter().map(|r| r.extpair.clone()).collect();
    report.ext_pairs = ext_pairs.len();
    for r in records {
        if phi(lat, &r.twin)? != r.subcat {
            report
                .violations
                .push(format!("Φ(Ψ(C)) ≠ C for C = {}", r.subcat));
        }
        if phi_prime(lat, &r.extpair)? != r.subcat {
            report
                .violations
                .push(format!("Φ′(Ψ′(C)) ≠ C for C = {}", r.subcat));
        }
        for set in [&r.extpair.p, &r.extpair.i] {
            if set.iter().any(|&x| set.iter().any(|&y| lat.ext1(x, y) != 0)) {
                report.violations.push(format!(
                    "Ext-pair member {set:?} of C = {} is not rigid",
                    r.subcat
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{BoundQuiverAlgebra, Quiver};
    use crate::catalog::Catalog;
    use crate::fixtures::{catalog, hereditary, indices, nakayama};
    use crate::linalg::Field;

    fn lattice(alg: &Arc<BoundQuiverAlgebra>) -> TorsionLattice {
        TorsionLattice::new(catalog(alg)).unwrap()
    }

    fn set(cat: &Catalog, labels: &[&str]) -> BTreeSet<usize> {
        indices(cat, labels).into_iter().collect()
    }

    fn twin(lat: &TorsionLattice, m: &[&str], n: &[&str]) -> TwinPair {
        let cat = lat.catalog();
        TwinPair::from_sets(lat, &set(cat, m), &set(cat, n)).unwrap()
    }

    fn subcat(lat: &TorsionLattice, labels: &[&str]) -> Subcat {
        Subcat::new(set(lat.catalog(), labels))
    }

    const LAMBDA: [&str; 3] = ["P1", "P2", "S3"];
    const D_LAMBDA: [&str; 3] = ["S1", "P1", "P2"];

    #[test]
    fn phi_examples() {
        let lat = lattice(&nakayama(2));
        let t = twin(&lat, &["S1", "S3", "P1"], &["S1", "S3", "P2"]);
        assert_eq!(phi(&lat, &t).unwrap(), subcat(&lat, &["S1", "S3"]));
        let t = twin(&lat, &LAMBDA, &D_LAMBDA);
        assert_eq!(phi(&lat, &t).unwrap(), Subcat::all(lat.catalog()));
        for m in lat.torsion_classes() {
            let t = TwinPair::from_sets(&lat, &m.generator.module, &BTreeSet::new()).unwrap();
            assert!(phi(&lat, &t).unwrap().is_empty());
        }
    }

    #[test]
    fn psi_examples() {
        let lat = lattice(&nakayama(2));
        assert_eq!(
            psi(&lat, &subcat(&lat, &["P1"])).unwrap(),
            twin(&lat, &["S1", "P1"], &["S2", "P1"])
        );
        assert_eq!(psi(&lat, &Subcat::default()).unwrap(), twin(&lat, &[], &[]));
        assert_eq!(
            psi(&lat, &subcat(&lat, &["S3", "P1"])).unwrap(),
            twin(&lat, &["S1", "S3", "P1"], &["S2", "P1", "P2"])
        );
    }

    #[test]
    fn canonicity() {
        let lat = lattice(&nakayama(2));
        let worked = twin(&lat, &["S1", "S3", "P1"], &["S1", "S3", "P2"]);
        assert!(!is_canonical(&lat, &worked).unwrap());
        let fixed = twin(&lat, &["S1", "S3"], &["S1", "S3"]);
        assert!(is_canonical(&lat, &fixed).unwrap());
        assert_eq!(canonicalize(&lat, &worked).unwrap(), fixed);
        assert_eq!(canonicalize(&lat, &fixed).unwrap(), fixed);
        let row = twin(&lat, &["S2", "P1"], &["S1", "P1"]);
        assert!(is_canonical(&lat, &row).unwrap());
        assert_eq!(canonicalize(&lat, &row).unwrap(), row);

        for m in lat.torsion_classes() {
            let t = TwinPair::from_sets(&lat, &m.generator.module, &BTreeSet::new()).unwrap();
            assert_eq!(is_canonical(&lat, &t).unwrap(), m.generator.module.is_empty());
        }
    }

    #[test]
    fn canonicalize_everything() {
        let lat = lattice(&nakayama(3));
        for t in all_twins(&lat) {
            let c = canonicalize(&lat, &t).unwrap();
            assert!(is_canonical(&lat, &c).unwrap());
            assert_eq!(phi(&lat, &c).unwrap(), phi(&lat, &t).unwrap());
            assert_eq!(canonicalize(&lat, &c).unwrap(), c);
            assert_eq!(psi(&lat, &phi(&lat, &t).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn ext_pairs() {
        let lat = lattice(&nakayama(2));
        let cat = lat.catalog();
        let e = ext_pair(&lat, &twin(&lat, &["S1", "P1"], &["S2", "P1"])).unwrap();
        assert_eq!((e.p.clone(), e.i.clone()), (set(cat, &["P1"]), set(cat, &["P1"])));
        assert_eq!(phi_prime(&lat, &e).unwrap(), subcat(&lat, &["P1"]));

        let e = ext_pair(&lat, &twin(&lat, &LAMBDA, &D_LAMBDA)).unwrap();
        assert_eq!((e.p, e.i), (set(cat, &LAMBDA), set(cat, &D_LAMBDA)));

        let e = ext_pair(&lat, &twin(&lat, &["S2", "P1", "P2"], &D_LAMBDA)).unwrap();
        assert_eq!(
            (e.p, e.i),
            (set(cat, &["S2", "P1", "P2"]), set(cat, &["S1", "P1", "P2"]))
        );

        // non-canonical input goes through its canonical form
        let e = ext_pair(&lat, &twin(&lat, &["S1", "S3", "P1"], &["S1", "S3", "P2"])).unwrap();
        assert_eq!(
            (e.p.clone(), e.i.clone()),
            (set(cat, &["S1", "S3"]), set(cat, &["S1", "S3"]))
        );
        assert_eq!(phi_prime(&lat, &e).unwrap(), subcat(&lat, &["S1", "S3"]));
        assert!(phi_prime(&lat, &ExtPair::default()).unwrap().is_empty());
    }

    #[test]
    fn record_counts() {
        let lat = lattice(&nakayama(2));
        let records = enumerate_ie(&lat).unwrap();
        assert_eq!(records.len(), 21);
        let report = verify_bijections_with(&lat, &records).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.equal_support_twins, 22);

        let lat = lattice(&hereditary(2));
        assert_eq!(enumerate_ie(&lat).unwrap().len(), 7);

        let q = Quiver::new::<&str>(&["1"], &[]).unwrap();
        let point = Arc::new(BoundQuiverAlgebra::build(q, vec![], Field::binary()).unwrap());
        let records = enumerate_ie(&lattice(&point)).unwrap();
        assert_eq!(records.len(), 2);
        assert!(records[0].subcat.is_empty());
        assert_eq!(records[1].subcat.len(), 1);
    }

    #[test]
    fn records_are_consistent() {
        let lat = lattice(&nakayama(2));
        for r in enumerate_ie(&lat).unwrap() {
            assert_eq!(r.twin.m.support, r.twin.n.support, "{}", r.subcat);
            for set in [&r.extpair.p, &r.extpair.i] {
                for &x in set {
                    for &y in set {
                        assert_eq!(lat.ext1(x, y), 0);
                    }
                }
            }
            if r.flags.is_torsion {
                assert!(r.flags.is_ice);
            }
            if r.flags.is_torsionfree {
                assert!(r.flags.is_ike);
            }
        }
    }

    #[test]
    fn classification() {
        let lat = lattice(&nakayama(2));
        let flags = |labels: &[&str]| {
            let c = subcat(&lat, labels);
            classify(&lat, &c, &psi(&lat, &c).unwrap(), DEFAULT_CLASSIFY_BOUND).unwrap()
        };
        let f = flags(&["S1", "S3"]);
        assert!(f.is_torsion && f.is_torsionfree);
        assert!(flags(&["S1", "S2", "P1"]).is_torsion);
        assert!(flags(&["P1"]).is_ice);
        assert!(flags(&["P1"]).is_ike);
        // coker(P2 -> P1) = S1 and ker(P2 -> P1) = S3
        let f = flags(&["P1", "P2"]);
        assert!(!f.is_ice && !f.is_ike && !f.is_torsion && !f.is_torsionfree);
    }

    #[test]
    fn hereditary_twin_and_ext_pair() {
        let lat = lattice(&hereditary(2));
        let cat = lat.catalog();
        let c = subcat(&lat, &["P2"]);
        let t = psi(&lat, &c).unwrap();
        assert_eq!(t, twin(&lat, &["P2", "S2"], &["P2", "S1"]));
        let e = ext_pair(&lat, &t).unwrap();
        assert_eq!((e.p, e.i), (set(cat, &["P2"]), set(cat, &["P2"])));
    }
}
