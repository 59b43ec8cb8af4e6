//! End-to-end tests of the command-line binary: exit codes, output
//! determinism, and the documented failure modes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = run(&["verify", "tq", "--n", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\"suite\": \"tq\""));
    assert!(text.contains("\"passed\": true"));
}

#[test]
fn verify_trivial_charge_cap_passes() {
    let out = run(&["verify", "ybe", "--cmax", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such-suite"));
}

#[test]
fn fusion_table_is_byte_deterministic() {
    let a = run(&["fusion", "--n", "3", "--k", "1"]);
    let b = run(&["fusion", "--n", "3", "--k", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    // The rank-3 level-1 ring is the cyclic group of order three: six
    // nonzero structure constants, stored once per unordered pair.
    assert_eq!(stdout(&a).matches("\"coefficient\": 1").count(), 6);
}

#[test]
fn fusion_single_product_row() {
    let out = run(&["fusion", "--n", "3", "--k", "1", "--lhs", "1", "--rhs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["products"][0]["result"], "1,1");
}

#[test]
fn fusion_formal_twist_output() {
    let out = run(&[
        "fusion", "--n", "3", "--k", "1", "--lhs", "1,1", "--rhs", "1,1", "--z", "formal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["products"][0]["coefficient"], "z");
}

#[test]
fn invalid_label_is_a_usage_error_naming_the_label() {
    let out = run(&["fusion", "--n", "3", "--k", "1", "--lhs", "9,9", "--rhs", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("9,9"));
}

#[test]
fn malformed_label_is_a_usage_error() {
    let out = run(&["fusion", "--n", "3", "--k", "1", "--lhs", "1,x", "--rhs", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1,x"));
}

#[test]
fn crystal_graph_dot_output() {
    let out = run(&["crystal-graph", "--n", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    // Three states linked in a single hopping cycle.
    assert_eq!(text.matches("->").count(), 3);

    let empty = run(&["crystal-graph", "--n", "3", "--k", "0"]);
    let text = stdout(&empty);
    assert_eq!(text.matches("label=").count(), 1, "one vertex at level zero");
    assert_eq!(text.matches("->").count(), 0);
}

#[test]
fn partition_function_reports_polynomial_and_expansion() {
    let out = run(&[
        "partition-function", "--n", "3", "--k", "1", "--lhs", "1", "--rhs", "1,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["polynomial"], "u1 + u2");
    assert_eq!(doc["expansion"][0]["label"], "1");
}

#[test]
fn partition_function_rejects_oversized_labels() {
    let out = run(&[
        "partition-function", "--n", "3", "--k", "2", "--lhs", "3", "--rhs", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains('3'));
}

#[test]
fn partition_function_is_twist_one_only() {
    let out = run(&[
        "partition-function", "--n", "3", "--k", "1", "--lhs", "1", "--rhs", "1", "--z", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guards_enforced_without_force() {
    let out = run(&["crystal-graph", "--n", "7", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--force"));

    let forced = run(&["crystal-graph", "--n", "7", "--k", "0", "--force"]);
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn failing_suite_exits_one() {
    // The tableau oracle cap turns this into a reported (not crashed)
    // failure: exit code 1 with the diagnostic in the JSON report.
    let out = run(&["verify", "grassmannian", "--n", "5", "--k", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"passed\": false"));
}

#[test]
fn verify_report_is_byte_deterministic() {
    let a = run(&["verify", "commutativity", "--n", "3", "--k", "2"]);
    let b = run(&["verify", "commutativity", "--n", "3", "--k", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let to_file = run(&[
        "fusion", "--n", "3", "--k", "2", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    let direct = run(&["fusion", "--n", "3", "--k", "2", "--format", "csv"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&direct));
}
