use std::io::Write;
use std::process::{Command, Output, Stdio};

use interlace::graphs::Graph;
use interlace::select::SelectionCertificate;
use serde_json::Value;
use tempfile::NamedTempFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_interlace"))
}

fn file_with(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const BASIS3: &str = r#"{"dim":3,"vectors":[[1,0,0],[0,1,0],[0,0,1]]}"#;
const K33: &str = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";

#[test]
fn ri_basis_system() {
    let f = file_with(BASIS3);
    let out = run(&["ri", f.path().to_str().unwrap(), "-k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["achieved"].as_f64().unwrap(), 1.0);
    assert_eq!(v["holds"], Value::Bool(true));
    let cert: SelectionCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert!(cert.is_sound());
}

#[test]
fn ri_preconditions() {
    let f = file_with(r#"{"dim":2,"vectors":[[2,0],[0,1]]}"#);
    assert_eq!(run(&["ri", f.path().to_str().unwrap(), "-k", "1"]).status.code(), Some(3));
    let f = file_with(BASIS3);
    assert_eq!(run(&["ri", f.path().to_str().unwrap(), "-k", "3"]).status.code(), Some(3));
    let f = file_with("{not json");
    assert_eq!(run(&["ri", f.path().to_str().unwrap(), "-k", "1"]).status.code(), Some(2));
}

#[test]
fn ri_reads_stdin() {
    let mut child = bin()
        .args(["ri", "-", "-k", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(BASIS3.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["subset"].as_array().unwrap().len(), 2);
}

#[test]
fn weaver_duplicated_basis() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let f = file_with(&format!(r#"{{"dim":2,"vectors":[[{s},0],[{s},0],[0,{s}],[0,{s}]]}}"#));
    let out = run(&["weaver", f.path().to_str().unwrap(), "--alpha", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bound"].as_f64().unwrap(), 2.0);
    for n in v["norms"].as_array().unwrap() {
        assert!((n.as_f64().unwrap() - 0.5).abs() < 1e-12);
    }
}

#[test]
fn weaver_preconditions() {
    let f = file_with(r#"{"dim":2,"vectors":[]}"#);
    assert_eq!(run(&["weaver", f.path().to_str().unwrap()]).status.code(), Some(2));
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let f = file_with(&format!(r#"{{"dim":1,"vectors":[[{s}],[{s}]]}}"#));
    assert_eq!(
        run(&["weaver", f.path().to_str().unwrap(), "--alpha", "0.25"]).status.code(),
        Some(3)
    );
}

#[test]
fn lift_k33_twice() {
    let f = file_with(K33);
    let out = run(&["lift", f.path().to_str().unwrap(), "--iterations", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["n"], 12);
    assert_eq!(steps[1]["n"], 24);
    for s in steps {
        assert_eq!(s["ramanujan"], Value::Bool(true));
        assert!(s["lambda_max_signed"].as_f64().unwrap() <= 8f64.sqrt() + 1e-7);
        let g: Graph = serde_json::from_value(s["graph"].clone()).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
    }
}

#[test]
fn lift_preconditions() {
    let f = file_with("0 1\n");
    assert_eq!(run(&["lift", f.path().to_str().unwrap()]).status.code(), Some(3));
    let f = file_with("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    assert_eq!(run(&["lift", f.path().to_str().unwrap()]).status.code(), Some(3));
    let f = file_with(K33);
    assert_eq!(
        run(&["--budget", "16", "lift", f.path().to_str().unwrap()]).status.code(),
        Some(4)
    );
    let f = file_with("0 1\n1 zz\n");
    assert_eq!(run(&["lift", f.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn mixedchar_identity() {
    let f = file_with(r#"[{"n":2,"entries":[[1,0],[0,1]]}]"#);
    for mode in ["float", "exact"] {
        let out = run(&["--mode", mode, "mixedchar", f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["display"], "x^2 - 2x");
        assert_eq!(v["coefficients"], serde_json::json!([0.0, -2.0, 1.0]));
    }
}

#[test]
fn mixedchar_preconditions() {
    let f = file_with("[]");
    assert_eq!(run(&["mixedchar", f.path().to_str().unwrap()]).status.code(), Some(2));
    let f = file_with(r#"[{"n":2,"entries":[[-1,0],[0,1]]}]"#);
    assert_eq!(run(&["mixedchar", f.path().to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn out_flag_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&["--seed", "7", "--out", p.to_str().unwrap(), "check", "--count", "10"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn exact_check_suite() {
    let out = run(&["--mode", "exact", "check", "--count", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_flags() {
    let f = file_with(BASIS3);
    let path = f.path().to_str().unwrap();
    assert_eq!(run(&["--tol", "0", "ri", path, "-k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--budget", "0", "ri", path, "-k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--mode", "fuzzy", "ri", path, "-k", "1"]).status.code(), Some(2));
}
