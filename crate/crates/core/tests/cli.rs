use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycount")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn automaton_count() {
    let out = run(&["automaton", "--field", "2", "--poly", "1+x", "--n", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["counts"]["1"], "8");
}

#[test]
fn qpow_profile() {
    let out = run(&["qpow", "--field", "2", "--g", "1+x^2+x^5", "--c", "1", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["u"][0], "80/31");
}

#[test]
fn oracle_census() {
    let out = run(&["oracle", "--field", "3", "--poly", "1+x+x^2", "--n", "10"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["automaton", "--field", "4", "--poly", "1+x"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["automaton", "--field", "2", "--poly", "1+(x"]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_1() {
    let out = run(&["--budget-terms", "10", "oracle", "--field", "2", "--poly", "1+x1+x2+x3", "--n", "200"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn minimal_suite_passes() {
    let out = run(&["verify", "--suite", "minimal"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}
