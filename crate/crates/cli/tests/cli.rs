//! End-to-end runs of the `logmaj` binary: exit codes, report schema,
//! replay, CSV output and the registry dump.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn logmaj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logmaj"))
        .args(args)
        .env_remove("LOGMAJ_THREADS")
        .output()
        .expect("spawn logmaj")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn manifest_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn schema_validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(manifest_path("schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(report: &Value) {
    let v = schema_validator();
    let errors: Vec<String> = v.iter_errors(report).map(|e| e.to_string()).take(5).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

#[test]
fn verify_report_matches_schema() {
    let o = logmaj(&[
        "verify",
        "--ids",
        "all-theorems,all-conjectures",
        "--trials",
        "3",
        "--dims",
        "2,3",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid(&report);
    assert_eq!(report["outcomes"].as_array().unwrap().len() % 6, 0);
}

#[test]
fn replay_is_identical_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let p = path.to_str().unwrap();
    let o = logmaj(&[
        "verify",
        "--ids",
        "ZOU-1,THM-3.1",
        "--trials",
        "5",
        "--seed",
        "3",
        "--out",
        p,
    ]);
    assert_eq!(code(&o), 0);

    let again = dir.path().join("again.json");
    let o = logmaj(&["verify", "--replay", p, "--out", again.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let (a, b): (Value, Value) = (
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap(),
        serde_json::from_str(&std::fs::read_to_string(&again).unwrap()).unwrap(),
    );
    assert_eq!(a["outcomes"], b["outcomes"]);
    assert_eq!(b["config"]["replay_of"], p);

    let mut tampered = a.clone();
    tampered["outcomes"][0]["min_margin"] = Value::from(123.0);
    std::fs::write(&path, serde_json::to_string(&tampered).unwrap()).unwrap();
    let o = logmaj(&["verify", "--replay", p, "--out", again.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn csv_summary_has_one_row_per_selector() {
    let o = logmaj(&[
        "verify",
        "--ids",
        "all-refutations,LEM-3.1",
        "--trials",
        "4",
        "--format",
        "csv-summary",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "id,trials,failures,worst_margin,status");
    assert_eq!(lines.len(), 1 + 3);
    assert!(lines
        .iter()
        .any(|l| l.starts_with("EX-2.1,") && l.ends_with(",refuted")));
}

#[test]
fn invalid_arguments_exit_with_error() {
    for args in [
        &["verify", "--tol", "-1"][..],
        &["verify", "--ids", "NO-SUCH-ID"],
        &["verify", "--dims", "2,99"],
        &["verify", "--trials", "many"],
        &["search", "ZOU-1", "--budget", "5"],
        &["reproduce", "CONJ-1.1"],
    ] {
        assert_eq!(code(&logmaj(args)), 2, "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_logmaj"))
        .args(["registry", "dump"])
        .env("LOGMAJ_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn registry_dump_lists_catalog() {
    let a = logmaj(&["registry", "dump"]);
    let b = logmaj(&["registry-dump"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let dump: Value = serde_json::from_slice(&a.stdout).unwrap();
    let text = dump.to_string();
    for id in ["ZOU-1", "EX-2.1", "CONJ-4.1", "FINAL-CHAIN"] {
        assert!(text.contains(&format!("\"{id}\"")), "missing {id}");
    }
}

#[test]
fn search_exit_follows_domain_grade() {
    // Known refutations must be found; the proven domain must survive.
    assert_eq!(code(&logmaj(&["search", "EX-2.1", "--budget", "50", "--dims", "2"])), 0);
    assert_eq!(
        code(&logmaj(&["search", "CONJ-1.2", "--budget", "50", "--dims", "2"])),
        0
    );
    assert_eq!(
        code(&logmaj(&["search", "CONJ-1.2:proven", "--budget", "50", "--dims", "2"])),
        0
    );
    // Too few restarts to hit the RMK-3.1 counterexample at this seed is still well-formed.
    let o = logmaj(&["search", "RMK-3.1", "--budget", "1", "--dims", "2", "--hill-steps", "0"]);
    assert!(matches!(code(&o), 0 | 1));
}

#[test]
fn reproduce_from_fixture() {
    let fx = manifest_path("tests/fixtures/EX-2.1.search.json");
    let o = logmaj(&["reproduce", "EX-2.1", "--fixture", fx.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("violation = true"));
    assert!(text.contains("per-k margins"));
    // A fixture for another entry is refused.
    assert_eq!(
        code(&logmaj(&["reproduce", "RMK-3.1", "--fixture", fx.to_str().unwrap()])),
        2
    );
}
