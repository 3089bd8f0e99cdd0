use std::path::Path;
use std::process::{Command, Output};

use rhl_core::format::{parse_coloring, write_coloring};

fn rhl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhl")).args(args).output().expect("spawn rhl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_check_certify_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("apex.txt");
    let cert = dir.path().join("cert.json");

    let o = rhl(&["gen", "--sample", "TWO_APEX", "--n", "8", "--seed", "7", "-o", p(&col)]);
    assert_eq!(o.status.code(), Some(0));

    let o = rhl(&["check", "--pattern", "L", p(&col)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("rainbow: none"));

    let o = rhl(&["certify", "--theorem", "loose-plus", "--cert-out", p(&cert), p(&col)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: CERTIFIED"));
    assert!(stdout(&o).contains("case: TWO_APEX"));

    let o = rhl(&["verify", "--certificate", p(&cert), p(&col)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified: true"));
}

#[test]
fn gen_output_reserializes_byte_for_byte() {
    let o = rhl(&["gen", "--construction", "LOOSE_LB", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let c = parse_coloring(&text).unwrap();
    assert_eq!(c.palette_size(), 6);
    assert_eq!(write_coloring(&c), text);
}

#[test]
fn rainbow_copy_is_a_negative_finding() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("k6.txt");
    assert_eq!(rhl(&["gen", "--construction", "MESSY_K6", "-o", p(&col)]).status.code(), Some(0));
    assert_eq!(rhl(&["check", "--pattern", "M", p(&col)]).status.code(), Some(0));
    let o = rhl(&["check", "--pattern", "T", p(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("rainbow: found"));
    let o = rhl(&["certify", "--theorem", "tight", p(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("PRECONDITION_FAILED"));
}

#[test]
fn tampered_certificate_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("apex.txt");
    let cert = dir.path().join("bad.json");
    rhl(&["gen", "--sample", "TWO_APEX", "--n", "8", "--seed", "7", "-o", p(&col)]);
    std::fs::write(&cert, r#"{"case":"TWO_APEX","u":0,"v":6,"base_color":0}"#).unwrap();
    let o = rhl(&["verify", "--certificate", p(&cert), p(&col)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verified: false"));
}

#[test]
fn ar_reports_json_and_budget_exhaustion() {
    let o = rhl(&["--format", "json", "ar", "--n", "6", "--pattern", "T"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 4);
    assert_eq!(v["status"], "PROVED");

    let o = rhl(&["ar", "--n", "7", "--pattern", "L", "--budget-nodes", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn usage_and_file_errors_exit_3() {
    assert_eq!(rhl(&["check", "--pattern", "T", "/nonexistent/file"]).status.code(), Some(3));
    assert_eq!(rhl(&["ar", "--n", "6", "--pattern", "NOPE"]).status.code(), Some(3));
    assert_eq!(rhl(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(rhl(&["--help"]).status.code(), Some(0));
}

#[test]
fn ramsey_and_constrained_values() {
    let o = rhl(&["ramsey2", "--n", "7", "--target", "M2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("avoiding_coloring: none"));
    let o = rhl(&["ramsey2", "--n", "6", "--target", "M2"]);
    assert!(stdout(&o).contains("avoiding_coloring: found"));
    let o = rhl(&["constrained", "--target", "M2", "--path", "M"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("r2: 7") && out.contains("f: 7"), "{out}");
}
