//! Integration tests for the binary: output formats, stdin handling, and the
//! error reporting contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sparseroots"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin writable");
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn gen_field_prints_canonical_context() {
    let out = run(&["gen-field", "-n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"n\":2,\"modulus_hex\":\"07\"}\n");

    let out = run(&["gen-field", "-n", "1"]);
    assert_eq!(stdout(&out), "{\"n\":1,\"modulus_hex\":\"02\"}\n");
}

#[test]
fn gen_field_is_deterministic() {
    let a = run(&["gen-field", "-n", "11"]);
    let b = run(&["gen-field", "-n", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_field_usage_error() {
    let out = run(&["gen-field", "-n", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least 1"));
}

#[test]
fn gen_field_degree_guard() {
    let out = run(&["gen-field", "-n", "4000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_reads_stdin_and_reports_summary() {
    let out = run_with_stdin(&["reduce"], "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
    assert!(out.status.success());
    // v=2, m=4 pads to n=6
    assert!(stderr(&out).contains("n=6"));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["field"]["n"], 6);
    assert_eq!(value["provenance"]["s"], 2);
}

#[test]
fn reduce_parse_error_carries_line_number() {
    let out = run_with_stdin(&["reduce"], "p cnf 2 1\n1 2 -1 2 0\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));
    assert!(stderr(&out).contains("width 4"));
}

#[test]
fn reduce_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cnf_path = dir.path().join("f.cnf");
    let out_path = dir.path().join("out.json");
    std::fs::write(&cnf_path, "p cnf 3 1\n1 -2 3 0\n").unwrap();
    let out = run(&[
        "reduce",
        cnf_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&out_path).unwrap();
    let parsed: sparse_roots::ReductionOutput = serde_json::from_str(&written).unwrap();
    assert_eq!(parsed.field.n(), 3);
}

#[test]
fn count_roots_accepts_reduce_output_and_bare_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = sparse_roots::Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap();
    let output = sparse_roots::reduce(&cnf).unwrap();

    let full = dir.path().join("full.json");
    std::fs::write(&full, serde_json::to_string(&output).unwrap()).unwrap();
    let out = run(&["count-roots", full.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");

    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, serde_json::to_string(&output.poly).unwrap()).unwrap();
    let out = run(&["count-roots", bare.to_str().unwrap()]);
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn count_sat_counts_models() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.cnf");
    std::fs::write(&path, "p cnf 3 1\n1 2 3 0\n").unwrap();
    let out = run(&["count-sat", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn count_sat_guard() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.cnf");
    std::fs::write(&path, "p cnf 25 0\n").unwrap();
    let out = run(&["count-sat", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2^25"));
}

#[test]
fn verify_reports_both_counts_and_parity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.cnf");
    std::fs::write(&path, "p cnf 2 0\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("models=4 roots=4 PASS"));
    assert!(text.contains("models≡roots (mod 2): PASS"));
}

#[test]
fn verify_unsat_instance_counts_zero_on_both_sides() {
    // one variable, contradicting unit clauses; pads to n=3
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unsat.cnf");
    std::fs::write(&path, "p cnf 1 2\n1 0\n-1 0\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("models=0 roots=0 PASS"));
}

#[test]
fn verify_generates_an_instance_when_no_file_given() {
    let a = run(&["verify", "--seed", "7"]);
    let b = run(&["verify", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("PASS"));
    assert!(stderr(&a).contains("seed=7"));
}

#[test]
fn verify_guard_on_large_padded_formulas() {
    // v=3, m=11 pads to 3 + 2·8 = 19 > 16
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.cnf");
    let clauses: String = "1 2 3 0\n".repeat(11);
    std::fs::write(&path, format!("p cnf 3 11\n{clauses}")).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_a_parse_error() {
    let out = run(&["count-sat", "/nonexistent/path.cnf"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
