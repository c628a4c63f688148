use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2verify")).args(args).env_remove("G2_JSON_PRETTY").output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_slice(&run(&full).stdout).expect("valid JSON")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "octonion"]), 0);
    assert_eq!(code(&["verify", "octonion", "--corrupt", "1,2"]), 1);
    assert_eq!(code(&["verify", "octonion", "--corrupt", "9,2"]), 2);
    assert_eq!(code(&["verify", "hodge"]), 0);
    assert_eq!(code(&["verify", "hodge", "--orientation", "-1"]), 1);
    assert_eq!(code(&["verify", "hodge", "--orientation", "2"]), 2);
    assert_eq!(code(&["verify", "case", "t7"]), 0);
    assert_eq!(code(&["verify", "case", "no-such-case"]), 2);
    assert_eq!(code(&["verify", "nk-product", "--lambda", "3/2"]), 0);
    assert_eq!(code(&["verify", "nk-product", "--lambda", "0"]), 2);
    assert_eq!(code(&["verify", "nk-product", "--lambda", "x"]), 2);
    assert_eq!(code(&["weights", "aloff-wallach", "1", "-1"]), 0);
    assert_eq!(code(&["weights", "aloff-wallach", "0", "0"]), 2);
    assert_eq!(code(&["check", "qklm", "2", "1", "1"]), 0);
    assert_eq!(code(&["check", "qklm", "1", "2", "3"]), 2);
    assert_eq!(code(&["enumerate", "--dim-h", "5"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn unknown_case_lists_names() {
    let out = run(&["verify", "case", "no-such-case"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("su2su2-u1-t2") && err.contains("q111"), "{err}");
}

#[test]
fn corrupt_flag_is_hidden() {
    let help = String::from_utf8(run(&["verify", "octonion", "--help"]).stdout).unwrap();
    assert!(!help.contains("corrupt"));
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["verify", "hodge"][..],
        &["verify", "case", "su2su2-u1-t2"],
        &["check", "qklm", "1", "1", "1"],
        &["enumerate", "--dim-h", "8"],
        &["verify", "all"],
    ] {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        assert_eq!(run(&full).stdout, run(&full).stdout, "{args:?}");
    }
}

#[test]
fn envelope_fields() {
    let raw = String::from_utf8(run(&["--json", "check", "qklm", "1", "1", "1"]).stdout).unwrap();
    let pos: Vec<usize> = ["\"command\"", "\"inputs\"", "\"status\"", "\"body\"", "\"engine_version\""]
        .iter()
        .map(|k| raw.find(k).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{raw}");
    let v = json(&["check", "qklm", "1", "1", "1"]);
    assert_eq!(v["command"], "check qklm");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["body"]["admits"], true);
    assert_eq!(json(&["check", "qklm", "2", "1", "1"])["body"]["admits"], false);
}

#[test]
fn case_report_contents() {
    let v = json(&["verify", "case", "su2su2-u1-t2"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["body"]["cosymplectic"], true);
    assert_eq!(v["body"]["matched_label"], "u(1)");
    let v = json(&["verify", "case", "q111"]);
    assert_eq!(v["body"]["matched_label"], "2u(1)");
    let v = json(&["verify", "nk-product", "--lambda", "1"]);
    assert_eq!(v["body"]["cosymplectic"], true);
}

#[test]
fn pretty_printing_switch() {
    let out = Command::new(env!("CARGO_BIN_EXE_g2verify"))
        .args(["--json", "verify", "hodge"])
        .env("G2_JSON_PRETTY", "1")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("{\n  \"command\""));
    let compact = String::from_utf8(run(&["--json", "verify", "hodge"]).stdout).unwrap();
    assert_eq!(compact.lines().count(), 1);
}

#[test]
fn text_output() {
    let out = String::from_utf8(run(&["check", "qklm", "1", "1", "1"]).stdout).unwrap();
    assert!(out.starts_with("true\n"));
    let out = String::from_utf8(run(&["enumerate", "--dim-h", "0"]).stdout).unwrap();
    assert!(out.contains("survivors: 2su(2)+u(1), su(2)+4u(1), 7u(1)"));
}
