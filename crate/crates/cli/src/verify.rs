//! Comparison of computed tables against the bundled golden data.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use twintau_core::ieclosed::{enumerate_ie, is_canonical, verify_bijections_with, TwinPair};
use twintau_core::tautheory::enumerate_stt;
use twintau_core::torsion::SesSide;
use twintau_core::{interval_catalog, Catalog, Result, Side, TorsionLattice};

use crate::input::{parse_add_subcat, parse_concat_module, Fixture};
use crate::render::{from_json, Names, Row};

pub const NAKAYAMA_A3_GOLDEN: &str = include_str!("../data/nakayama_a3_golden.json");
pub const HEREDITARY_A2_GOLDEN: &str = include_str!("../data/hereditary_a2_golden.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SupportRow {
    pub support: Vec<String>,
    pub stt: Vec<String>,
    pub stt_minus: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoldenIeRow {
    pub subcat: String,
    pub twin: [String; 2],
    pub ext_pair: [String; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NonCanonicalExample {
    pub m: String,
    pub n: String,
    pub canonical: bool,
    pub u_m: String,
    pub p_m: String,
    pub i_n: String,
    pub v_n: String,
    pub subcat: String,
    pub canonical_twin: [String; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NakayamaGolden {
    pub fixture: String,
    pub stt_count: usize,
    pub stt_minus_count: usize,
    pub stt_by_support: Vec<SupportRow>,
    pub equal_support_twins: usize,
    pub ie_closed_rows: Vec<GoldenIeRow>,
    pub non_canonical: NonCanonicalExample,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HereditaryGolden {
    pub fixture: String,
    pub torsion_classes: usize,
    pub ie_closed: usize,
    pub twin_rigid: GoldenIeRow,
}

#[derive(Clone, Debug)]
pub struct Golden {
    pub nakayama: NakayamaGolden,
    pub hereditary: HereditaryGolden,
}

impl Golden {
    pub fn bundled() -> Result<Self> {
        Ok(Golden {
            nakayama: from_json(NAKAYAMA_A3_GOLDEN)?,
            hereditary: from_json(HEREDITARY_A2_GOLDEN)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub fixture: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Row for Check {
    fn headers() -> Vec<&'static str> {
        vec!["result", "fixture", "check", "detail"]
    }

    fn cells(&self, _: &Names) -> Vec<String> {
        vec![
            if self.passed { "PASS" } else { "FAIL" }.into(),
            self.fixture.clone(),
            self.name.clone(),
            self.detail.clone(),
        ]
    }
}

struct Checks {
    fixture: String,
    out: Vec<Check>,
}

impl Checks {
    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.out.push(Check {
            fixture: self.fixture.clone(),
            name: name.into(),
            passed,
            detail,
        });
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, name: &str, got: T, want: T) {
        let passed = got == want;
        let detail = if passed {
            format!("{got}")
        } else {
            format!("got {got}, expected {want}")
        };
        self.push(name, passed, detail);
    }
}

fn show(cat: &Catalog, set: &BTreeSet<usize>) -> String {
    concat(cat, &set.iter().copied().collect::<Vec<_>>())
}

fn concat(cat: &Catalog, idx: &[usize]) -> String {
    if idx.is_empty() {
        return "0".into();
    }
    idx.iter().map(|&i| cat.label(i)).collect()
}

fn pair(cat: &Catalog, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> String {
    format!("({}, {})", show(cat, a), show(cat, b))
}

fn subcat_name(cat: &Catalog, set: &BTreeSet<usize>) -> String {
    let names = Names { cat, concat: true };
    names.subcat(&set.iter().map(|&i| cat.label(i).to_string()).collect::<Vec<_>>())
}

fn concat_set(text: &str, cat: &Catalog) -> Result<BTreeSet<usize>> {
    Ok(parse_concat_module(text, cat)?.into_iter().collect())
}

fn lattice(fixture: Fixture, p: u32) -> Result<TorsionLattice> {
    TorsionLattice::new(interval_catalog(&fixture.algebra(Some(p))?)?)
}

/// Runs the full pipeline on both fixtures over `GF(p)` and compares with
/// `golden`.
pub fn verify_golden(golden: &Golden, p: u32) -> Result<Vec<Check>> {
    let mut all = verify_nakayama(&golden.nakayama, p)?;
    all.extend(verify_hereditary(&golden.hereditary, p)?);
    Ok(all)
}

type Triple = (
    BTreeSet<usize>,
    (BTreeSet<usize>, BTreeSet<usize>),
    (BTreeSet<usize>, BTreeSet<usize>),
);

fn golden_triple(row: &GoldenIeRow, cat: &Catalog) -> Result<Triple> {
    Ok((
        parse_add_subcat(&row.subcat, cat)?.into_iter().collect(),
        (concat_set(&row.twin[0], cat)?, concat_set(&row.twin[1], cat)?),
        (
            concat_set(&row.ext_pair[0], cat)?,
            concat_set(&row.ext_pair[1], cat)?,
        ),
    ))
}

fn verify_nakayama(g: &NakayamaGolden, p: u32) -> Result<Vec<Check>> {
    let lat = lattice(Fixture::NakayamaA3, p)?;
    let cat = lat.catalog();
    let mut c = Checks {
        fixture: format!("{} (p={p})", g.fixture),
        out: Vec::new(),
    };

    let plus = enumerate_stt(cat, Side::Plus)?;
    let minus = enumerate_stt(cat, Side::Minus)?;
    c.eq("support τ-tilting count", plus.len(), g.stt_count);
    c.eq("support τ⁻-tilting count", minus.len(), g.stt_minus_count);
    for (side, list) in [("τ", &plus), ("τ⁻", &minus)] {
        let mut got: BTreeMap<Vec<String>, BTreeSet<BTreeSet<usize>>> = BTreeMap::new();
        for pair in list.iter() {
            let supp = pair
                .support
                .iter()
                .map(|&v| cat.algebra().vertex_label(v).to_string())
                .collect();
            got.entry(supp).or_default().insert(pair.module.clone());
        }
        let mut want: BTreeMap<Vec<String>, BTreeSet<BTreeSet<usize>>> = BTreeMap::new();
        for row in &g.stt_by_support {
            let mods = if side == "τ" { &row.stt } else { &row.stt_minus };
            let mut supp = row.support.clone();
            supp.sort();
            let entry = want.entry(supp).or_default();
            for m in mods {
                entry.insert(concat_set(m, cat)?);
            }
        }
        let keys: BTreeSet<&Vec<String>> = got.keys().chain(want.keys()).collect();
        let mut bad = Vec::new();
        for k in keys {
            let a = got.get(k).cloned().unwrap_or_default();
            let b = want.get(k).cloned().unwrap_or_default();
            if a != b {
                let fmt = |s: &BTreeSet<BTreeSet<usize>>| {
                    s.iter().map(|m| show(cat, m)).collect::<Vec<_>>().join(", ")
                };
                bad.push(format!(
                    "support {{{}}}: got [{}], expected [{}]",
                    k.join(","),
                    fmt(&a),
                    fmt(&b)
                ));
            }
        }
        let name = format!("support {side}-tilting modules by support");
        let detail = if bad.is_empty() {
            format!("{} support sets", want.len())
        } else {
            bad.join("; ")
        };
        c.push(&name, bad.is_empty(), detail);
    }

    let records = enumerate_ie(&lat)?;
    let report = verify_bijections_with(&lat, &records)?;
    c.eq(
        "twin pairs with supp M = supp N",
        report.equal_support_twins,
        g.equal_support_twins,
    );
    c.eq("IE-closed subcategories", records.len(), g.ie_closed_rows.len());

    let got: BTreeSet<Triple> = records
        .iter()
        .map(|r| {
            (
                r.subcat.indices().clone(),
                (r.twin.m.module.clone(), r.twin.n.module.clone()),
                (r.extpair.p.clone(), r.extpair.i.clone()),
            )
        })
        .collect();
    let mut bad = Vec::new();
    let mut want = BTreeSet::new();
    for row in &g.ie_closed_rows {
        let t = golden_triple(row, cat)?;
        if !got.contains(&t) {
            bad.push(format!(
                "row {} | ({}, {}) | ({}, {}) not produced",
                row.subcat, row.twin[0], row.twin[1], row.ext_pair[0], row.ext_pair[1]
            ));
        }
        want.insert(t);
    }
    for t in got.difference(&want) {
        bad.push(format!(
            "unexpected row {} | ({}, {}) | ({}, {})",
            subcat_name(cat, &t.0),
            show(cat, &t.1 .0),
            show(cat, &t.1 .1),
            show(cat, &t.2 .0),
            show(cat, &t.2 .1)
        ));
    }
    let detail = if bad.is_empty() {
        format!("{} rows", want.len())
    } else {
        bad.join("; ")
    };
    c.push(
        "IE-closed subcategories, canonical twins and Ext-pairs",
        bad.is_empty(),
        detail,
    );
    c.push(
        "bijection round-trips",
        report.passed(),
        if report.violations.is_empty() {
            format!(
                "{} = {} = {}",
                report.ie_closed, report.canonical_twins, report.ext_pairs
            )
        } else {
            report.violations.join("; ")
        },
    );

    let w = &g.non_canonical;
    let m = concat_set(&w.m, cat)?;
    let n = concat_set(&w.n, cat)?;
    let t = TwinPair::from_sets(&lat, &m, &n)?;
    c.eq(
        "non-canonical pair: canonical",
        is_canonical(&lat, &t)?,
        w.canonical,
    );
    let sm = lat.canonical_ses(&m, &n, SesSide::M)?;
    let sn = lat.canonical_ses(&m, &n, SesSide::N)?;
    let seq = |sub: &[usize], mid: &BTreeSet<usize>, quot: &[usize]| {
        format!(
            "0 -> {} -> {} -> {} -> 0",
            concat(cat, sub),
            concat(cat, &mid.iter().copied().collect::<Vec<_>>()),
            concat(cat, quot)
        )
    };
    c.eq(
        "non-canonical pair: sequence of M",
        seq(&sm.torsion_summands, &m, &sm.free_summands),
        seq(
            &parse_concat_module(&w.u_m, cat)?,
            &m,
            &parse_concat_module(&w.p_m, cat)?,
        ),
    );
    c.eq(
        "non-canonical pair: sequence of N",
        seq(&sn.torsion_summands, &n, &sn.free_summands),
        seq(
            &parse_concat_module(&w.i_n, cat)?,
            &n,
            &parse_concat_module(&w.v_n, cat)?,
        ),
    );
    let star = twintau_core::ieclosed::canonicalize(&lat, &t)?;
    c.eq(
        "non-canonical pair: canonical twin",
        pair(cat, &star.m.module, &star.n.module),
        pair(
            cat,
            &concat_set(&w.canonical_twin[0], cat)?,
            &concat_set(&w.canonical_twin[1], cat)?,
        ),
    );
    c.eq(
        "non-canonical pair: Fac M ∩ Sub N",
        subcat_name(cat, twintau_core::ieclosed::phi(&lat, &t)?.indices()),
        subcat_name(cat, &parse_add_subcat(&w.subcat, cat)?.into_iter().collect()),
    );
    Ok(c.out)
}

fn verify_hereditary(g: &HereditaryGolden, p: u32) -> Result<Vec<Check>> {
    let lat = lattice(Fixture::HereditaryA2, p)?;
    let cat = lat.catalog();
    let mut c = Checks {
        fixture: format!("{} (p={p})", g.fixture),
        out: Vec::new(),
    };
    c.eq("torsion classes", lat.torsion_classes().len(), g.torsion_classes);
    let records = enumerate_ie(&lat)?;
    c.eq("IE-closed subcategories", records.len(), g.ie_closed);
    let report = verify_bijections_with(&lat, &records)?;
    c.push(
        "bijection round-trips",
        report.passed(),
        if report.violations.is_empty() {
            format!(
                "{} = {} = {}",
                report.ie_closed, report.canonical_twins, report.ext_pairs
            )
        } else {
            report.violations.join("; ")
        },
    );
    let want = golden_triple(&g.twin_rigid, cat)?;
    let got = records
        .iter()
        .find(|r| r.subcat.indices() == &want.0)
        .map(|r| {
            format!(
                "{} / {}",
                pair(cat, &r.twin.m.module, &r.twin.n.module),
                pair(cat, &r.extpair.p, &r.extpair.i)
            )
        })
        .unwrap_or_else(|| "no such subcategory".into());
    let want = format!(
        "{} / {}",
        pair(cat, &want.1 .0, &want.1 .1),
        pair(cat, &want.2 .0, &want.2 .1)
    );
    c.eq(
        &format!("{}: canonical twin and Ext-pair", g.twin_rigid.subcat),
        got,
        want,
    );
    Ok(c.out)
}
