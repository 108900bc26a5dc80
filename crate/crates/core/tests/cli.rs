//! End-to-end tests of the `lcmbetti` binary: exit codes, golden text
//! output and JSON schemas.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn corpus(f: &str) -> String {
    root().join("corpus").join(f).to_string_lossy().into_owned()
}

fn golden(f: &str) -> String {
    std::fs::read_to_string(root().join("tests").join("golden").join(f)).unwrap()
}

fn run_in(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lcmbetti"));
    c.args(args).env_remove("LCMBETTI_CACHE_DIR");
    if let Some(dir) = cache {
        c.env("LCMBETTI_CACHE_DIR", dir);
    }
    c.output().unwrap()
}

fn run(args: &[&str]) -> Output {
    run_in(args, None)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(root().join("schemas").join(name)).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(s: &jsonschema::JSONSchema, v: &Value) {
    if let Err(errors) = s.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
}

#[test]
fn dunce_cap_ideal_matches_corpus_bytes() {
    let out = ok(&["construct", "dunce-cap", "--p", "3", "--emit", "ideal"]);
    assert_eq!(out, std::fs::read_to_string(corpus("dunce_cap_3.ideal")).unwrap());
    assert_eq!(out.lines().count(), 28);
}

#[test]
fn betti_json_has_two_tables_and_a_difference() {
    let out = ok(&["betti", "--ideal", &corpus("rp2.ideal"), "--field", "Q", "--field", "F2", "--output", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let tables = v["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 2);
    let s = schema("betti-v1.schema.json");
    for t in tables {
        assert_valid(&s, t);
    }
    assert!(!v["diff"].as_array().unwrap().is_empty());
}

#[test]
fn golden_text_outputs() {
    assert_eq!(ok(&["betti", "--construct", "rp2", "--field", "Q", "--field", "F2"]), golden("betti_rp2.txt"));
    assert_eq!(
        ok(&["scan", "--construct", "rp2", "--field", "F2", "--max-power", "2"]),
        golden("scan_rp2.txt")
    );
    assert_eq!(
        ok(&["homology", "--construct", "dunce-cap", "--p", "3", "--field", "Q", "--field", "F3", "--integer"]),
        golden("homology_dunce_cap_3.txt")
    );
    assert_eq!(
        ok(&["formula", "--construct", "rp2", "--w", "y1 y2", "--power", "2", "--field", "Q", "--field", "F2"]),
        golden("formula_rp2.txt")
    );
}

#[test]
fn formula_verdict_equal() {
    let out = ok(&["formula", "--ideal", &corpus("rp2.ideal"), "--w", "y1 y2", "--power", "2", "--field", "F2"]);
    assert!(out.trim_end().ends_with("EQUAL"), "{out}");
}

#[test]
fn scan_report_matches_schema() {
    let out = ok(&["scan", "--construct", "rp2", "--field", "F2", "--field", "F3", "--max-power", "3", "--output", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_valid(&schema("report-v1.schema.json"), &v);
    let probe = ok(&[
        "scan", "--construct", "klein-bottle", "--field", "F2", "--max-power", "2", "--probes-only", "--output", "json",
    ]);
    let v: Value = serde_json::from_str(&probe).unwrap();
    assert_valid(&schema("report-v1.schema.json"), &v);
    assert_eq!(v["probe_diffs"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_three() {
    for args in [&["frobnicate"][..], &["betti", "--bogus"], &[]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn error_classes_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "x^0 y\n").unwrap();
    assert_eq!(run(&["betti", "--ideal", bad.to_str().unwrap()]).status.code(), Some(3));
    let missing = dir.path().join("missing.ideal");
    assert_eq!(run(&["betti", "--ideal", missing.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["betti", "--construct", "rp2", "--field", "F4"]).status.code(), Some(1));
    assert_eq!(run(&["construct", "moebius"]).status.code(), Some(1));
    let o = run(&["power", "--construct", "rp2", "--power", "3", "--max-generators", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource"));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["betti", "--construct", "kty", "--field", "F2", "--output", "json"];
    let first = run_in(&args, Some(dir.path()));
    assert_eq!(first.status.code(), Some(0));
    let cached: Vec<_> = std::fs::read_dir(dir.path().join("betti-v1")).unwrap().collect();
    assert_eq!(cached.len(), 1);
    let second = run_in(&args, Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn scan_results_are_persisted_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["scan", "--construct", "rp2", "--field", "F2", "--max-power", "2", "--results-dir", d, "--output", "json"];
    let a = ok(&args);
    let b = ok(&args);
    assert_eq!(a, b);
    let files: Vec<_> = std::fs::read_dir(dir.path().join("reports")).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert_eq!(std::fs::read_to_string(&files[0]).unwrap(), a);
}

#[test]
fn jobs_and_routes_do_not_change_results() {
    let base = ok(&["betti", "--construct", "rp2", "--field", "F2", "--output", "json"]);
    assert_eq!(ok(&["betti", "--construct", "rp2", "--field", "F2", "--output", "json", "--jobs", "1"]), base);
    for route in ["lattice", "hochster"] {
        let other = ok(&["betti", "--construct", "rp2", "--field", "F2", "--output", "json", "--route", route]);
        assert_eq!(other, base, "{route}");
    }
}

#[test]
fn quotient_flag_shifts_indices() {
    let out = ok(&["betti", "--construct", "rp2", "--quotient"]);
    assert!(out.contains("total: 1 10 15 6\n"), "{out}");
}

#[test]
fn betti_at_a_multidegree() {
    let out = ok(&["betti", "--construct", "kty", "--power", "2", "--at", "x1^2 x2^2 x3 x4 x5 x6 x7 x8^2 x9^2 x10^2", "--field", "Q", "--field", "F2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    assert!(lines[0].starts_with("alpha: "));
}

#[test]
fn random_splitting_is_seeded() {
    let a = ok(&["splitting", "--construct", "rp2", "--random", "--seed", "7", "--field", "Q", "--output", "json"]);
    let b = ok(&["splitting", "--construct", "rp2", "--random", "--seed", "7", "--field", "Q", "--output", "json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let (j, k) = (v["j"].as_array().unwrap().len(), v["k"].as_array().unwrap().len());
    assert_eq!(j + k, 10);
}

#[test]
fn dual_polarize_power_and_regularity() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("i.ideal");
    std::fs::write(&f, "x^2\nx y\n").unwrap();
    let fs = f.to_str().unwrap();
    assert_eq!(ok(&["polarize", "--ideal", fs]), "vars: x1_1 x1_2 x2_1\nx1_1 x1_2\nx1_1 x2_1\n");
    assert_eq!(ok(&["power", "--ideal", fs, "--power", "2"]), "vars: x y\nx^4\nx^3 y\nx^2 y^2\n");
    let dual = ok(&["dual", "--construct", "dunce-cap", "--p", "2"]);
    assert!(dual.starts_with("vertices: 1 2 3 4 5 6 7\n"));
    let tri = dir.path().join("t.ideal");
    std::fs::write(&tri, "x y\ny z\n").unwrap();
    assert_eq!(ok(&["dual", "--ideal", tri.to_str().unwrap()]), "vars: x y z\ny\nx z\n");
    let reg = ok(&["regularity", "--construct", "katzman", "--field", "Q", "--field", "F2", "--max-power", "1"]);
    assert!(reg.contains("Q: reg 3\n") && reg.contains("F2: reg 4\n"), "{reg}");
}

#[test]
fn bounds_command() {
    let out = ok(&["bounds", "--construct", "rp2", "--w", "y1 y2", "--max-power", "1", "--field", "F2"]);
    assert!(out.starts_with("bound: spreading\n"));
    assert!(!out.contains("margin -"));
}
