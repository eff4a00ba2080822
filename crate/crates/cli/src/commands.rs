//! Subcommand implementations; each returns serializable records.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use twintau_core::ieclosed::{
    all_twins, canonicalize, enumerate_ie_with_bound, ext_pair, is_canonical, phi, IeRecord, TwinPair,
};
use twintau_core::repcore::decompose;
use twintau_core::tautheory::enumerate_stt;
use twintau_core::torsion::SesSide;
use twintau_core::{Error, Flags, Result, Side, SttPair, TorsionLattice};

use crate::input::parse_module_expr;
use crate::render::{Names, Row};

fn labels<I: IntoIterator<Item = usize>>(lat: &TorsionLattice, idx: I) -> Vec<String> {
    idx.into_iter()
        .map(|i| lat.catalog().label(i).to_string())
        .collect()
}

fn vertex_labels(lat: &TorsionLattice, idx: &BTreeSet<usize>) -> Vec<String> {
    let alg = lat.catalog().algebra();
    idx.iter().map(|&v| alg.vertex_label(v).to_string()).collect()
}

fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub label: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub tau: Vec<String>,
    pub tau_minus: Vec<String>,
}

impl Row for CatalogRecord {
    fn headers() -> Vec<&'static str> {
        vec!["label", "dims", "projective", "injective", "tau", "tau^-"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        vec![
            self.label.clone(),
            format!("({})", dims.join(" ")),
            flag(self.projective),
            flag(self.injective),
            names.module(&self.tau),
            names.module(&self.tau_minus),
        ]
    }
}

pub fn catalog(lat: &TorsionLattice) -> Result<Vec<CatalogRecord>> {
    let cat = lat.catalog();
    let table = cat.tau_table()?;
    let projectives = cat.projectives()?;
    let injectives = cat.injectives()?;
    (0..cat.len())
        .map(|i| {
            Ok(CatalogRecord {
                label: cat.label(i).to_string(),
                dims: cat.module(i).dims().to_vec(),
                projective: projectives.contains(&i),
                injective: injectives.contains(&i),
                tau: labels(lat, decompose(&table.tau[i], cat)?),
                tau_minus: labels(lat, decompose(&table.tau_minus[i], cat)?),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SttRecord {
    pub support: Vec<String>,
    pub module: Vec<String>,
    pub projective_complement: Vec<String>,
}

impl Row for SttRecord {
    fn headers() -> Vec<&'static str> {
        vec!["support", "module", "projective complement"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        let complement: Vec<String> = self
            .projective_complement
            .iter()
            .map(|v| format!("P{v}"))
            .collect();
        vec![
            format!("{{{}}}", self.support.join(",")),
            names.module(&self.module),
            if complement.is_empty() {
                "0".into()
            } else {
                complement.join("+")
            },
        ]
    }
}

fn stt_record(lat: &TorsionLattice, pair: &SttPair) -> SttRecord {
    SttRecord {
        support: vertex_labels(lat, &pair.support),
        module: labels(lat, pair.module.iter().copied()),
        projective_complement: vertex_labels(lat, &pair.proj_complement),
    }
}

pub fn stt(lat: &TorsionLattice, side: Side) -> Result<Vec<SttRecord>> {
    Ok(enumerate_stt(lat.catalog(), side)?
        .iter()
        .map(|p| stt_record(lat, p))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwinLabels {
    #[serde(rename = "M")]
    pub m: Vec<String>,
    #[serde(rename = "N")]
    pub n: Vec<String>,
}

impl TwinLabels {
    fn of(lat: &TorsionLattice, t: &TwinPair) -> Self {
        TwinLabels {
            m: labels(lat, t.m.module.iter().copied()),
            n: labels(lat, t.n.module.iter().copied()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwinRecord {
    pub twin: TwinLabels,
    pub same_support: bool,
    pub canonical: bool,
    pub subcat: Vec<String>,
}

impl Row for TwinRecord {
    fn headers() -> Vec<&'static str> {
        vec!["M", "N", "supp M = supp N", "canonical", "Fac M ∩ Sub N"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        vec![
            names.module(&self.twin.m),
            names.module(&self.twin.n),
            flag(self.same_support),
            flag(self.canonical),
            names.subcat(&self.subcat),
        ]
    }
}

pub fn twins(lat: &TorsionLattice, canonical_only: bool) -> Result<Vec<TwinRecord>> {
    let mut out = Vec::new();
    for t in all_twins(lat) {
        let canonical = is_canonical(lat, &t)?;
        if canonical_only && !canonical {
            continue;
        }
        out.push(TwinRecord {
            twin: TwinLabels::of(lat, &t),
            same_support: t.m.support == t.n.support,
            canonical,
            subcat: labels(lat, phi(lat, &t)?.iter()),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtPairLabels {
    #[serde(rename = "P")]
    pub p: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IeRow {
    pub subcat: Vec<String>,
    pub twin: TwinLabels,
    pub ext_pair: ExtPairLabels,
    pub flags: Flags,
}

impl IeRow {
    fn of(lat: &TorsionLattice, r: &IeRecord) -> Self {
        IeRow {
            subcat: labels(lat, r.subcat.iter()),
            twin: TwinLabels::of(lat, &r.twin),
            ext_pair: ExtPairLabels {
                p: labels(lat, r.extpair.p.iter().copied()),
                i: labels(lat, r.extpair.i.iter().copied()),
            },
            flags: r.flags,
        }
    }
}

impl Row for IeRow {
    fn headers() -> Vec<&'static str> {
        vec!["C", "M", "N", "P", "I", "torsion", "torsion-free", "ICE", "IKE"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        vec![
            names.subcat(&self.subcat),
            names.module(&self.twin.m),
            names.module(&self.twin.n),
            names.module(&self.ext_pair.p),
            names.module(&self.ext_pair.i),
            flag(self.flags.is_torsion),
            flag(self.flags.is_torsionfree),
            flag(self.flags.is_ice),
            flag(self.flags.is_ike),
        ]
    }
}

pub fn ie(lat: &TorsionLattice, bound: usize) -> Result<Vec<IeRow>> {
    Ok(enumerate_ie_with_bound(lat, bound)?
        .iter()
        .map(|r| IeRow::of(lat, r))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtPairRow {
    pub subcat: Vec<String>,
    pub ext_pair: ExtPairLabels,
}

impl Row for ExtPairRow {
    fn headers() -> Vec<&'static str> {
        vec!["C", "P", "I"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        vec![
            names.subcat(&self.subcat),
            names.module(&self.ext_pair.p),
            names.module(&self.ext_pair.i),
        ]
    }
}

pub fn ext_pairs(lat: &TorsionLattice, bound: usize) -> Result<Vec<ExtPairRow>> {
    Ok(ie(lat, bound)?
        .into_iter()
        .map(|r| ExtPairRow {
            subcat: r.subcat,
            ext_pair: r.ext_pair,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub subcat: Vec<String>,
    pub flags: Flags,
}

impl Row for ClassifyRow {
    fn headers() -> Vec<&'static str> {
        vec!["C", "torsion", "torsion-free", "ICE", "IKE"]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        vec![
            names.subcat(&self.subcat),
            flag(self.flags.is_torsion),
            flag(self.flags.is_torsionfree),
            flag(self.flags.is_ice),
            flag(self.flags.is_ike),
        ]
    }
}

pub fn classify_all(lat: &TorsionLattice, bound: usize) -> Result<Vec<ClassifyRow>> {
    Ok(ie(lat, bound)?
        .into_iter()
        .map(|r| ClassifyRow {
            subcat: r.subcat,
            flags: r.flags,
        })
        .collect())
}

/// `0 -> sub -> middle -> quotient -> 0`, as label multisets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sequence {
    pub sub: Vec<String>,
    pub middle: Vec<String>,
    pub quotient: Vec<String>,
}

impl Sequence {
    pub fn show(&self, names: &Names) -> String {
        format!(
            "0 -> {} -> {} -> {} -> 0",
            names.module(&self.sub),
            names.module(&self.middle),
            names.module(&self.quotient)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalizeRecord {
    pub input: TwinLabels,
    pub canonical: bool,
    pub subcat: Vec<String>,
    pub m_sequence: Sequence,
    pub n_sequence: Sequence,
    pub output: TwinLabels,
    pub ext_pair: ExtPairLabels,
}

impl Row for CanonicalizeRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "M",
            "N",
            "canonical",
            "C",
            "M-sequence",
            "N-sequence",
            "M*",
            "N*",
            "P",
            "I",
        ]
    }

    fn cells(&self, names: &Names) -> Vec<String> {
        vec![
            names.module(&self.input.m),
            names.module(&self.input.n),
            flag(self.canonical),
            names.subcat(&self.subcat),
            self.m_sequence.show(names),
            self.n_sequence.show(names),
            names.module(&self.output.m),
            names.module(&self.output.n),
            names.module(&self.ext_pair.p),
            names.module(&self.ext_pair.i),
        ]
    }
}

impl CanonicalizeRecord {
    /// Two-column layout for terminal output.
    pub fn key_values(&self, names: &Names) -> Vec<Vec<String>> {
        let pair = |a: &[String], b: &[String]| format!("({}, {})", names.module(a), names.module(b));
        vec![
            vec!["input".into(), pair(&self.input.m, &self.input.n)],
            vec!["canonical".into(), flag(self.canonical)],
            vec!["Fac M ∩ Sub N".into(), names.subcat(&self.subcat)],
            vec!["sequence of M".into(), self.m_sequence.show(names)],
            vec!["sequence of N".into(), self.n_sequence.show(names)],
            vec!["canonical twin".into(), pair(&self.output.m, &self.output.n)],
            vec!["Ext-pair".into(), pair(&self.ext_pair.p, &self.ext_pair.i)],
        ]
    }
}

fn basic(multiset: Vec<usize>, what: &str) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = multiset.iter().copied().collect();
    if set.len() != multiset.len() {
        return Err(Error::Parse(format!(
            "{what} must be basic (no repeated summands)"
        )));
    }
    Ok(set)
}

pub fn canonicalize_cmd(lat: &TorsionLattice, m: &str, n: &str) -> Result<CanonicalizeRecord> {
    let cat = lat.catalog();
    let m = basic(parse_module_expr(m, cat)?, "--m")?;
    let n = basic(parse_module_expr(n, cat)?, "--n")?;
    let t = TwinPair::from_sets(lat, &m, &n).map_err(|e| match e {
        Error::Consistency(msg) => Error::Parse(msg),
        e => e,
    })?;
    let sm = lat.canonical_ses(&m, &n, SesSide::M)?;
    let sn = lat.canonical_ses(&m, &n, SesSide::N)?;
    let sequence = |s: &twintau_core::torsion::CanonicalSes| Sequence {
        sub: labels(lat, s.torsion_summands.iter().copied()),
        middle: labels(lat, s.middle_summands.iter().copied()),
        quotient: labels(lat, s.free_summands.iter().copied()),
    };
    let star = canonicalize(lat, &t)?;
    let e = ext_pair(lat, &t)?;
    Ok(CanonicalizeRecord {
        input: TwinLabels::of(lat, &t),
        canonical: is_canonical(lat, &t)?,
        subcat: labels(lat, phi(lat, &t)?.iter()),
        m_sequence: sequence(&sm),
        n_sequence: sequence(&sn),
        output: TwinLabels::of(lat, &star),
        ext_pair: ExtPairLabels {
            p: labels(lat, e.p.iter().copied()),
            i: labels(lat, e.i.iter().copied()),
        },
    })
}
