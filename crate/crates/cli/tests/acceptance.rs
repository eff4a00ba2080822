//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use std::collections::BTreeSet;
use std::process::ExitCode;

use twintau_cli::commands;
use twintau_cli::input::Fixture;
use twintau_cli::verify::{verify_golden, Check, Golden};
use twintau_core::catalog::bruteforce_indecomposables;
use twintau_core::ieclosed::{
    all_twins, enumerate_ie, is_canonical, phi, phi_prime, psi, psi_prime, verify_bijections_with,
};
use twintau_core::tautheory::{enumerate_stt, is_tau_rigid_sum, supp_of};
use twintau_core::torsion::{closure_subcat, Closure};
use twintau_core::{interval_catalog, ClassSide, Result, Side, Subcat, TorsionLattice};

const FIXTURES: [Fixture; 2] = [Fixture::NakayamaA3, Fixture::HereditaryA2];
const PRIMES: [u32; 3] = [2, 3, 5];

fn lattice(fixture: Fixture, p: u32) -> Result<TorsionLattice> {
    TorsionLattice::new(interval_catalog(&fixture.algebra(Some(p))?)?)
}

fn subsets(n: usize) -> impl Iterator<Item = Subcat> {
    (0u32..1 << n).map(move |bits| Subcat::new((0..n).filter(|i| bits >> i & 1 == 1)))
}

/// Outcome of one criterion: `Ok(detail)` or `Err(reason)`.
type Outcome = std::result::Result<String, String>;

fn from_checks(checks: &[Check], select: impl Fn(&Check) -> bool) -> Outcome {
    let chosen: Vec<&Check> = checks.iter().filter(|c| select(c)).collect();
    if chosen.is_empty() {
        return Err("no matching checks".into());
    }
    let failed: Vec<String> = chosen
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if failed.is_empty() {
        Ok(chosen
            .iter()
            .map(|c| c.detail.as_str())
            .collect::<Vec<_>>()
            .join("; "))
    } else {
        Err(failed.join("; "))
    }
}

fn nakayama(c: &Check) -> bool {
    c.fixture.starts_with("nakayama")
}

fn census(checks: &[Check]) -> Outcome {
    from_checks(checks, |c| nakayama(c) && c.name.contains("tilting"))
}

fn twin_census(checks: &[Check]) -> Outcome {
    from_checks(checks, |c| nakayama(c) && c.name.starts_with("twin pairs"))
}

fn ie_closed_rows(checks: &[Check]) -> Outcome {
    from_checks(checks, |c| nakayama(c) && c.name.starts_with("IE-closed"))
}

fn non_canonical(checks: &[Check]) -> Outcome {
    from_checks(checks, |c| c.name.starts_with("non-canonical pair"))
}

fn twin_rigid(checks: &[Check]) -> Outcome {
    from_checks(checks, |c| {
        !nakayama(c) && c.name.ends_with("canonical twin and Ext-pair")
    })
}

fn criteria_1_to_5(p: u32) -> Result<[Outcome; 5]> {
    let checks = verify_golden(&Golden::bundled()?, p)?;
    let lat = lattice(Fixture::NakayamaA3, p)?;
    let mut first = census(&checks);
    // the subcommand itself must agree with the enumeration
    let plus = commands::stt(&lat, Side::Plus)?.len();
    let minus = commands::stt(&lat, Side::Minus)?.len();
    if first.is_ok() && (plus, minus) != (12, 12) {
        first = Err(format!("stt command returned {plus} and {minus} rows"));
    }
    Ok([
        first,
        twin_census(&checks),
        ie_closed_rows(&checks),
        non_canonical(&checks),
        twin_rigid(&checks),
    ])
}

fn round_trips() -> Result<Outcome> {
    let mut details = Vec::new();
    for fixture in FIXTURES {
        let lat = lattice(fixture, 2)?;
        let records = enumerate_ie(&lat)?;
        let report = verify_bijections_with(&lat, &records)?;
        if !report.passed() {
            return Ok(Err(report.violations.join("; ")));
        }
        for r in &records {
            if phi(&lat, &psi(&lat, &r.subcat)?)? != r.subcat {
                return Ok(Err(format!("Φ∘Ψ moves {}", r.subcat)));
            }
            if phi_prime(&lat, &psi_prime(&lat, &r.subcat)?)? != r.subcat {
                return Ok(Err(format!("Φ′∘Ψ′ moves {}", r.subcat)));
            }
        }
        let mut canonical = 0;
        for t in all_twins(&lat) {
            if is_canonical(&lat, &t)? {
                canonical += 1;
                if psi(&lat, &phi(&lat, &t)?)? != t {
                    return Ok(Err(format!("Ψ∘Φ moves ({:?}, {:?})", t.m.module, t.n.module)));
                }
            }
        }
        if canonical != records.len() {
            return Ok(Err(format!(
                "{canonical} canonical twins for {} subcategories",
                records.len()
            )));
        }
        details.push(format!("{fixture:?}: {} subcategories", records.len()));
    }
    Ok(Ok(details.join(", ")))
}

fn closure_oracle() -> Result<Outcome> {
    let mut cases = 0;
    for fixture in FIXTURES {
        let lat = lattice(fixture, 2)?;
        for c in subsets(lat.catalog().len()) {
            for side in [ClassSide::Torsion, ClassSide::TorsionFree] {
                let lattice_route = &lat.smallest_closure(&c, side)?.subcat;
                let oracle = lat.filt_closure_oracle(&c, side)?;
                if *lattice_route != oracle {
                    return Ok(Err(format!(
                        "{fixture:?} {side:?} of {c}: {lattice_route} vs {oracle}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(Ok(format!("{cases} closures agree")))
}

fn rigidity() -> Result<Outcome> {
    let mut cases = 0;
    for fixture in FIXTURES {
        let lat = lattice(fixture, 2)?;
        let cat = lat.catalog();
        for m in subsets(cat.len()) {
            let hom_test = is_tau_rigid_sum(cat, m.indices(), Side::Plus)?;
            let fac = closure_subcat(cat, m.indices(), Closure::Fac)?;
            let ext_test = m.iter().all(|x| fac.iter().all(|y| lat.ext1(x, y) == 0));
            if hom_test != ext_test {
                return Ok(Err(format!(
                    "{fixture:?} {m}: Hom test {hom_test}, Ext test {ext_test}"
                )));
            }
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} subsets agree")))
}

fn completeness() -> Result<Outcome> {
    let mut details = Vec::new();
    for (fixture, dims) in [
        (Fixture::NakayamaA3, vec![1, 1, 1]),
        (Fixture::HereditaryA2, vec![1, 1]),
    ] {
        let alg = fixture.algebra(Some(2))?;
        let brute = bruteforce_indecomposables(&alg, &dims)?;
        let intervals = interval_catalog(&alg)?;
        if brute.labels() != intervals.labels() {
            return Ok(Err(format!(
                "{fixture:?}: {:?} vs {:?}",
                brute.labels(),
                intervals.labels()
            )));
        }
        details.push(format!("{fixture:?}: {}", brute.labels().join(",")));
    }
    Ok(Ok(details.join("; ")))
}

fn field_robustness(per_prime: &[[Outcome; 5]]) -> Result<Outcome> {
    for (outcomes, p) in per_prime.iter().zip(PRIMES) {
        if let Some((k, Err(e))) = outcomes.iter().enumerate().find(|(_, o)| o.is_err()) {
            return Ok(Err(format!("p={p}, criterion {}: {e}", k + 1)));
        }
    }
    let mut reference = None;
    for p in PRIMES {
        let mut records = Vec::new();
        for fixture in FIXTURES {
            let lat = lattice(fixture, p)?;
            records.push(serde_json::to_value(commands::ie(&lat, 2)?).expect("records serialize"));
            records.push(serde_json::to_value(commands::stt(&lat, Side::Plus)?).expect("records serialize"));
            records.push(serde_json::to_value(commands::stt(&lat, Side::Minus)?).expect("records serialize"));
        }
        match &reference {
            None => reference = Some(records),
            Some(r) if *r != records => return Ok(Err(format!("records at p={p} differ from p=2"))),
            Some(_) => {}
        }
    }
    Ok(Ok("p = 2, 3, 5 identical".into()))
}

fn support_invariants() -> Result<Outcome> {
    let mut cases = 0;
    for fixture in FIXTURES {
        let lat = lattice(fixture, 2)?;
        let cat = lat.catalog();
        for side in [Side::Plus, Side::Minus] {
            for pair in enumerate_stt(cat, side)? {
                let kind = if side == Side::Plus {
                    Closure::Fac
                } else {
                    Closure::Sub
                };
                let closed = closure_subcat(cat, &pair.module, kind)?;
                if supp_of(cat, closed.indices()) != pair.support {
                    return Ok(Err(format!("{fixture:?}: supp of {kind:?} {:?}", pair.module)));
                }
                cases += 1;
            }
        }
        let mut objects: BTreeSet<Subcat> = subsets(cat.len()).collect();
        objects.extend(enumerate_ie(&lat)?.into_iter().map(|r| r.subcat));
        for c in objects {
            let supp = supp_of(cat, c.indices());
            let t = supp_of(
                cat,
                lat.smallest_closure(&c, ClassSide::Torsion)?.subcat.indices(),
            );
            let f = supp_of(
                cat,
                lat.smallest_closure(&c, ClassSide::TorsionFree)?.subcat.indices(),
            );
            if t != supp || f != supp {
                return Ok(Err(format!(
                    "{fixture:?}: supports of T({c}), {c}, F({c}) differ"
                )));
            }
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} objects")))
}

fn run() -> Result<Vec<Outcome>> {
    let per_prime = PRIMES
        .iter()
        .map(|&p| criteria_1_to_5(p))
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<Outcome> = per_prime[0].to_vec();
    out.push(round_trips()?);
    out.push(closure_oracle()?);
    out.push(rigidity()?);
    out.push(completeness()?);
    out.push(field_robustness(&per_prime)?);
    out.push(support_invariants()?);
    Ok(out)
}

const TITLES: [&str; 11] = [
    "support τ-tilting census",
    "twin-pair census",
    "IE classification",
    "canonicalization of a non-canonical pair",
    "hereditary twin rigid pair",
    "bijection round-trips",
    "closure oracle equivalence",
    "τ-rigidity cross-check",
    "catalog completeness oracle",
    "field robustness",
    "support invariants",
];

fn main() -> ExitCode {
    let outcomes = match run() {
        Ok(o) => o,
        Err(e) => {
            println!("FAIL acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ok = true;
    for (k, (title, outcome)) in TITLES.iter().zip(&outcomes).enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail}", k + 1),
            Err(reason) => {
                ok = false;
                println!("FAIL {:>2} {title}: {reason}", k + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
