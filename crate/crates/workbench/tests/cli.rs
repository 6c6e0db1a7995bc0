use std::path::PathBuf;
use std::process::{Command, Output};

use artin_core::poly::IntPolynomial;
use num_bigint::BigInt;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    manifest_dir().join("tests/data").join(name).display().to_string()
}

fn bundle(name: &str) -> String {
    manifest_dir().join("bundles").join(name).display().to_string()
}

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn builtin_s3_structured_report() {
    let o = artin(&["run", "builtin:s3", "--format", "structured", "--bound", "200", "--zeta-bound", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["summary"]["verified"], 10);
    assert_eq!(report["options"]["bound"], 200);
    let remark = report["checks"].as_array().unwrap().iter().find(|c| c["statement"] == "s3-remark").unwrap();
    assert_eq!(remark["verdict"], "verified");
    assert_eq!(remark["bound"], 200);
    assert!(remark["timing"]["primes"].as_u64().unwrap() > 0);
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        &["run", "thm5"][..],
        &["run", "thm7", "x.json"],
        &["run", "builtin:a5"],
        &["run", "builtin:s3", "--bogus"],
        &["run", "all", "/nonexistent/bundle.json"],
        &["export-prefix", "builtin:s3/chi4"],
        &[],
    ] {
        let o = artin(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(artin(&["--help"]).status.code(), Some(0));
}

#[test]
fn refuted_bundle_exits_with_two() {
    let o = artin(&["run", "corollary", &data("refuted.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("refuted: a_31: 3 ≠ 0"), "{}", stdout(&o));
}

#[test]
fn inconclusive_bundle_exits_with_three() {
    let o = artin(&["run", "all", &data("inconclusive.json"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["checks"][0]["verdict"], "inconclusive");
    assert_eq!(report["options"]["bound"], 3);
    // a flag overrides the bundle's bound
    let o = artin(&["run", "all", &data("inconclusive.json"), "--bound", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bundle_errors_name_their_location() {
    let o = artin(&["run", "all", &data("unknown_setup.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/checks/0/setup: unknown setup 'missing'"), "{}", stderr(&o));
    let o = artin(&["run", "all", &data("syntax.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 5, column 3"), "{}", stderr(&o));
}

#[test]
fn example_bundles_verify() {
    let o = artin(&["run", "all", &bundle("s3.json"), "--bound", "200", "--zeta-bound", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("summary: 10 verified, 0 refuted"));
    let o = artin(&["run", "prop4", &bundle("octic.json"), "--bound", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("summary: 2 verified, 0 refuted"));
}

#[test]
fn bundle_and_builtin_agree_on_verdicts() {
    let from_bundle = artin(&["run", "thm6", &bundle("octic.json"), "--bound", "300", "--format", "structured"]);
    let from_builtin =
        artin(&["run", "builtin:octic", "--bound", "300", "--zeta-bound", "300", "--format", "structured"]);
    let a: serde_json::Value = serde_json::from_slice(&from_bundle.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&from_builtin.stdout).unwrap();
    let thm6: Vec<_> = b["checks"].as_array().unwrap().iter().filter(|c| c["statement"] == "thm6").collect();
    assert_eq!(a["checks"].as_array().unwrap().len(), thm6.len());
    for (x, y) in a["checks"].as_array().unwrap().iter().zip(thm6) {
        assert_eq!(x["verdict"], y["verdict"]);
        assert_eq!(x["certificates"], y["certificates"]);
    }
}

#[test]
fn export_prefix_matches_golden_table() {
    let o = artin(&["export-prefix", "builtin:s3/zeta", "--bound", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::fs::read_to_string(data("s3_zeta_50.txt")).unwrap();
    assert_eq!(stdout(&o), golden);
    assert_eq!(golden.lines().count(), 50);

    let o = artin(&["export-prefix", "builtin:s3/zeta", "--bound", "1"]);
    assert_eq!(stdout(&o), "1: 1\n");

    // the same table from a bundle, written to a file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeta.txt");
    let o = artin(&[
        "export-prefix",
        "zeta:cubic",
        &bundle("s3.json"),
        "--bound",
        "50",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);
}

#[test]
fn export_prefix_chi2_and_chi3_are_identical() {
    let a = artin(&["export-prefix", "builtin:s3/chi2", "--bound", "300"]);
    let b = artin(&["export-prefix", "builtin:s3/chi3", "--bound", "300"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = artin(&["export-prefix", "setup:chi3", &bundle("s3.json"), "--bound", "300"]);
    assert_eq!(c.stdout, b.stdout);
}

#[test]
fn discriminants_match_golden_values() {
    let golden = std::fs::read_to_string(data("discriminants.txt")).unwrap();
    let mut seen = 0;
    for line in golden.lines().filter(|l| !l.starts_with('#')) {
        let (coeffs, disc) = line.split_once('|').unwrap();
        let coeffs: Vec<i64> = coeffs.split_whitespace().map(|c| c.parse().unwrap()).collect();
        let expected: BigInt = disc.trim().parse().unwrap();
        assert_eq!(IntPolynomial::from_i64(&coeffs).unwrap().discriminant(), expected, "{line}");
        seen += 1;
    }
    assert_eq!(seen, 7);
}
