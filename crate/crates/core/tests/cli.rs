//! End-to-end tests against the compiled binary: pinned output strings,
//! exit codes, and JSON shape.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_poisson-poincare"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn hypertoric_pinned_example() {
    let o = run(&["hypertoric", "--matrix", "[[1,0,1],[0,1,1]]", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^4*y^-4 + x^2*y^-4 + 1\n");
}

#[test]
fn kostka_pinned_example() {
    let o = run(&["kostka", "--lambda", "2,1", "--mu", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t^2 + t\n");
}

#[test]
fn verify_single_suite_on_named_corpus() {
    let o = run(&["verify", "laplacian", "--corpus", "graphic:K4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS laplacian\n"));
}

#[test]
fn tutte_of_a_triangle() {
    let o = run(&["tutte", "--matrix", "graphic:cycle_3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^2 + x + y\n");
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["kostka", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(2), "missing required flag");
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2), "unknown subcommand");
    let o = run(&["coxeter", "--type", "E8", "--op", "flag"]);
    assert_eq!(o.status.code(), Some(2), "unsupported Cartan type");
}

#[test]
fn computation_errors_exit_1() {
    let o = run(&["kostka", "--lambda", "2", "--mu", "1,1,1"]);
    assert_eq!(o.status.code(), Some(1), "partition sizes differ");
    let o = run(&["s3", "--lambda", "1,1", "--mu", "2"]);
    assert_eq!(o.status.code(), Some(1), "mu must be dominated by lambda");
    let o = run(&["tutte", "--matrix", "file:/nonexistent/matrix.json"]);
    assert_eq!(o.status.code(), Some(1), "unreadable matrix file");
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--help"]).status.code(), Some(0));
}

#[test]
fn json_output_shape_and_status() {
    let o = run(&["hypertoric", "--matrix", "[[1,0,1],[0,1,1]]", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid json");
    assert_eq!(v["command"], "hypertoric");
    assert_eq!(v["status"], "theorem");
    assert_eq!(v["polynomial"]["vars"], serde_json::json!(["x", "y"]));
    let terms = v["polynomial"]["terms"].as_array().expect("terms array");
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["exp"], serde_json::json!([4, -4]));
    assert_eq!(terms[0]["coef"], "1");

    let o = run(&["s3", "--lambda", "2,1", "--mu", "1,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid json");
    assert_eq!(v["status"], "conditional");
}

#[test]
fn cone_rank_two_pinned_polynomial() {
    let o = run(&["cone", "--type", "B2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x^8*y^-8 + x^6*y^-2 + x^6*y^-6 + 2*x^4*y^-4 + x^2*y^-2 + x^2*y^-6 + 1\n"
    );
}

#[test]
fn cone_verify_modes() {
    let o = run(&["cone", "--type", "G2", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("PASS\n"));
    let o = run(&["cone", "--type", "A3", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn kostka_oracle_agrees() {
    let o = run(&["kostka", "--lambda", "3,2", "--mu", "2,2,1", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn s3_matches_cone_for_the_full_pair() {
    let cone = run(&["cone", "--type", "A2"]);
    let pair = run(&["s3", "--lambda", "3", "--mu", "1,1,1"]);
    assert_eq!(stdout(&cone), stdout(&pair));
}

#[test]
fn verify_all_on_a_small_corpus() {
    let o = run(&[
        "verify",
        "all",
        "--corpus",
        "graphic:K4",
        "--corpus",
        "graphic:cycle_4",
        "--corpus",
        "dual:graphic:cycle_4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 11);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "gale", "--corpus", "graphic:K4", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}
