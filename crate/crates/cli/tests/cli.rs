use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use truss_core::brace::truss_from_brace;
use truss_core::catalog::s3_left_brace;
use truss_core::json::{to_pretty, truss_doc};

fn truss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_truss")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn catalog(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["catalog"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = truss(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

fn json_report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn validate_accepts_a_catalog_truss() {
    let dir = TempDir::new().unwrap();
    let z4 = catalog(dir.path(), "z4.json", &["zn", "4"]);
    let o = truss(&["validate", z4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("pass  right distributivity"));
}

#[test]
fn corrupted_multiplication_fails_with_a_witness() {
    let dir = TempDir::new().unwrap();
    let z4 = catalog(dir.path(), "z4.json", &["zn", "4"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&z4).unwrap()).unwrap();
    doc["mul"][2][3] = Value::from(1);
    std::fs::write(&z4, doc.to_string()).unwrap();
    let o = truss(&["--format", "json", "validate", z4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report = json_report(&o);
    let claim = &report["claims"][0];
    assert_eq!(claim["passed"], Value::Bool(false));
    assert!(claim["witness"].as_str().unwrap().contains('['));
    let failed: Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(failed["failed"][0], claim["id"]);
}

#[test]
fn parse_errors_report_a_byte_offset_and_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"truss\",\n \"order\": 2, \"mul\": [[0,0],[0,1]] oops }").unwrap();
    let o = truss(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte "), "{}", stderr(&o));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn left_truss_skips_right_laws() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s3.json");
    let t = truss_from_brace(&s3_left_brace()).unwrap();
    std::fs::write(&path, to_pretty(&truss_doc(&t))).unwrap();
    let o = truss(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("skip  right distributivity"), "{}", stdout(&o));
}

#[test]
fn scan_units_to_16() {
    let o = truss(&["--format", "json", "scan-units", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json_report(&o);
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 15);
    let paragons: Vec<usize> = claims
        .iter()
        .filter(|c| c["description"].as_str().unwrap().contains("paragon = true"))
        .map(|c| c["id"].as_str().unwrap()[2..].parse().unwrap())
        .collect();
    assert_eq!(paragons, vec![2, 4, 8, 16]);
    assert_eq!(truss(&["scan-units", "65"]).status.code(), Some(2));
}

#[test]
fn quotient_of_z4_by_its_units_is_z2() {
    let dir = TempDir::new().unwrap();
    let z4 = catalog(dir.path(), "z4.json", &["zn", "4"]);
    let out = dir.path().join("q.json");
    let o = truss(&["quotient", z4.to_str().unwrap(), "1,3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("isomorphic to T(Z2)"));
    let q: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(q["order"], Value::from(2));
    // {0,1} is not a paragon: exit 1, nothing written
    let o = truss(&["quotient", z4.to_str().unwrap(), "0,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extension_of_za4_is_the_order_16_brace() {
    let dir = TempDir::new().unwrap();
    let za = catalog(dir.path(), "za.json", &["za", "2", "4"]);
    let ext = dir.path().join("ext.json");
    let o = truss(&["extend", za.to_str().unwrap(), "regular", "0", "--out", ext.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("D8xC2"), "{}", stdout(&o));
    let id = truss(&["identify", ext.to_str().unwrap()]);
    assert!(stdout(&id).contains("D8xC2"), "{}", stdout(&id));
    // validate rebuilds the extension block and compares tables
    let v = truss(&["validate", ext.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn brace_of_za8_passes_every_claim() {
    let dir = TempDir::new().unwrap();
    let za = catalog(dir.path(), "za.json", &["za", "2", "8"]);
    let o = truss(&["brace", za.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("multiplicative C2xC4, additive C8"));
    let z4 = catalog(dir.path(), "z4.json", &["zn", "4"]);
    assert_eq!(truss(&["brace", z4.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn unknown_catalog_family_is_a_usage_error() {
    let o = truss(&["catalog", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown family"));
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let za = catalog(dir.path(), "za.json", &["za", "2", "16"]);
    let run = || stdout(&truss(&["--seed", "7", "--samples", "300", "--format", "json", "brace", za.to_str().unwrap()]));
    assert_eq!(run(), run());
}
