use std::io::Write;
use std::process::Command;

use twintau_cli::commands::IeRow;
use twintau_cli::input::{parse_module_expr, AlgebraFile, Fixture};
use twintau_cli::render::{from_json, render, to_json, Format, Names, Output};
use twintau_cli::verify::{verify_golden, Golden};
use twintau_cli::{run, EXIT_OK, EXIT_USAGE};
use twintau_core::{interval_catalog, Error};

fn twintau(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["twintau"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_records(args: &[&str]) -> Vec<serde_json::Value> {
    let mut argv = args.to_vec();
    argv.extend(["--format", "json"]);
    let (code, out, err) = twintau(&argv);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    v["records"].as_array().unwrap().clone()
}

#[test]
fn module_expressions() {
    let cat = interval_catalog(&Fixture::NakayamaA3.algebra(None).unwrap()).unwrap();
    let idx = |l: &str| cat.index_of(l).unwrap();
    let mut want = vec![idx("S1"), idx("S3"), idx("P1")];
    want.sort();
    assert_eq!(parse_module_expr("S1+S3+P1", &cat).unwrap(), want);
    assert_eq!(parse_module_expr("P1 + S3 + S1", &cat).unwrap(), want);
    assert_eq!(parse_module_expr("S1+S1", &cat).unwrap(), vec![idx("S1"); 2]);
    assert!(parse_module_expr("0", &cat).unwrap().is_empty());
    assert_eq!(parse_module_expr("S2+0", &cat).unwrap(), vec![idx("S2")]);
    assert!(matches!(parse_module_expr("S1+S9", &cat), Err(Error::UnknownLabel(l)) if l == "S9"));
    assert!(matches!(parse_module_expr("S1++S2", &cat), Err(Error::Parse(_))));
}

#[test]
fn algebra_files() {
    let bad = r#"{"vertices": ["1","2","3"],
        "arrows": [{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}],
        "relations": [["b","a"]]}"#;
    let err = AlgebraFile::parse(bad).unwrap().build(None).unwrap_err();
    assert!(matches!(err, Error::NonComposableRelation(_)), "{err}");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(bad.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let (code, _, err) = twintau(&["--algebra", path, "catalog"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"), "{err}");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(
        br#"{"vertices": ["1","2"], "arrows": [{"name":"a","from":"2","to":"1"}], "field": {"p": 3}}"#,
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let (code, out, _) = twintau(&["--algebra", path, "--format", "csv", "catalog"]);
    assert_eq!(code, EXIT_OK);
    let labels: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(labels, ["S1", "S2", "P2"]);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"{"vertices": ["1"], "field": {"p": 4}}"#)
        .unwrap();
    let (code, _, err) = twintau(&["--algebra", file.path().to_str().unwrap(), "catalog"]);
    assert_eq!(code, EXIT_USAGE, "{err}");

    let (code, _, _) = twintau(&["--algebra", "/nonexistent/algebra.json", "catalog"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn json_round_trip() {
    let lat = twintau_core::TorsionLattice::new(
        interval_catalog(&Fixture::NakayamaA3.algebra(None).unwrap()).unwrap(),
    )
    .unwrap();
    let (code, text, _) = twintau(&["ie", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let parsed: Output<IeRow> = from_json(&text).unwrap();
    assert_eq!(parsed.records.len(), 21);
    assert_eq!(to_json(&parsed).unwrap(), text);
    let names = Names {
        cat: lat.catalog(),
        concat: false,
    };
    assert_eq!(render(&parsed, Format::Json, &names).unwrap(), text);

    let first = &json_records(&["ie"])[0];
    for key in ["subcat", "twin", "ext_pair", "flags"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert!(first["twin"].get("M").is_some() && first["ext_pair"].get("I").is_some());
}

#[test]
fn deterministic_output() {
    for args in [["ie", "--format", "table"], ["twins", "--format", "csv"]] {
        let (_, a, _) = twintau(&args);
        let (_, b, _) = twintau(&args);
        assert_eq!(a, b);
    }
}

#[test]
fn canonical_twins_match_ie() {
    for fixture in ["nakayama_a3", "hereditary_a2"] {
        let twins = json_records(&["--fixture", fixture, "twins", "--canonical-only"]);
        let ie = json_records(&["--fixture", fixture, "ie"]);
        assert_eq!(twins.len(), ie.len(), "{fixture}");
    }
    assert_eq!(json_records(&["twins"]).len(), 144);
    assert_eq!(json_records(&["stt"]).len(), 12);
    assert_eq!(json_records(&["stt", "--minus"]).len(), 12);
    assert_eq!(json_records(&["ext-pairs"]).len(), 21);
    assert_eq!(json_records(&["classify"]).len(), 21);
}

#[test]
fn canonicalize_non_canonical_pair() {
    let (code, out, err) = twintau(&["canonicalize", "--m", "S1+S3+P1", "--n", "S1+S3+P2"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("0 -> S2 -> S1+S3+P1 -> S1+S1+S3 -> 0"), "{out}");
    assert!(out.contains("0 -> S1+S3+S3 -> S1+S3+P2 -> S2 -> 0"), "{out}");
    assert!(out.contains("(S1+S3, S1+S3)"), "{out}");

    let (code, _, err) = twintau(&["canonicalize", "--m", "S1+S2", "--n", "0"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
    let (code, _, _) = twintau(&["canonicalize", "--m", "S1+S1", "--n", "0"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn concatenated_names() {
    let (_, out, _) = twintau(&["ie", "--paper-names"]);
    assert!(out.contains("add{S1,S3}"), "{out}");
    assert!(out.contains("DΛ"), "{out}");
    assert!(out.contains("S1S3"), "{out}");
}

#[test]
fn csv_output() {
    let (code, out, _) = twintau(&["stt", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    assert!(lines[1..].iter().any(|l| l.contains("S1+S3+P1")), "{out}");
    // concatenated names never reach CSV
    let (_, concat, _) = twintau(&["stt", "--format", "csv", "--paper-names"]);
    assert_eq!(concat, out);
}

#[test]
fn golden_checks_pass_and_detect_perturbation() {
    let golden = Golden::bundled().unwrap();
    for p in [2, 3] {
        let checks = verify_golden(&golden, p).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    let mut perturbed = golden.clone();
    let row = &mut perturbed.nakayama.ie_closed_rows[3];
    let name = row.subcat.clone();
    row.ext_pair[0] = "S2".into();
    let checks = verify_golden(&perturbed, 2).unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert!(
        failed[0].detail.contains(&format!("row {name}")),
        "{}",
        failed[0].detail
    );
}

#[test]
fn exit_codes() {
    let bin = env!("CARGO_BIN_EXE_twintau");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["verify-paper"]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.lines().skip(2).all(|l| l.starts_with("PASS")), "{text}");

    assert_eq!(status(&["no-such-command"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(
        status(&["stt", "--format", "xml"]).status.code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(status(&["--p", "4", "stt"]).status.code(), Some(EXIT_USAGE));
    let bad = status(&["canonicalize", "--m", "S9", "--n", "0"]);
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("S9"));
    assert!(bad.stdout.is_empty());
    assert_eq!(status(&["--help"]).status.code(), Some(EXIT_OK));
}

#[test]
fn user_catalogs() {
    let alg = Fixture::NakayamaA3.algebra(None).unwrap();
    let cat = interval_catalog(&alg).unwrap();
    let full = twintau_core::catalog::CatalogFile::from_catalog(&cat);
    let write = |file: &twintau_core::catalog::CatalogFile| {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(serde_json::to_string(file).unwrap().as_bytes())
            .unwrap();
        f
    };

    let f = write(&full);
    let (code, out, err) = twintau(&["--catalog", f.path().to_str().unwrap(), "stt"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.is_empty(), "{err}");
    assert_eq!(out, twintau(&["stt"]).1);

    let mut partial = full.clone();
    partial.entries.retain(|e| e.label != "P1");
    let f = write(&partial);
    let (code, _, err) = twintau(&["--catalog", f.path().to_str().unwrap(), "stt"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning: incomplete"), "{err}");

    let mut wrong = full.clone();
    wrong.algebra_hash = "0".repeat(64);
    let f = write(&wrong);
    let (code, _, _) = twintau(&["--catalog", f.path().to_str().unwrap(), "stt"]);
    assert_eq!(code, EXIT_USAGE);
}
