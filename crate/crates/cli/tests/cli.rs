//! End-to-end checks of the binary: JSON output of the worked examples and
//! the exit-code contract of the verify commands.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (Value, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf8 output");
    let value = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (value, out.status.success())
}

#[test]
fn di_emits_the_worked_trace() {
    let (v, ok) = run(&["di", "--n", "6", "--seq", "3 2 5"]);
    assert!(ok);
    assert_eq!(v["shape"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["vt_index"], 3);
    assert_eq!(v["p"]["rows"], serde_json::json!([[1, 2, 5], [3, 6], [4]]));
    assert_eq!(v["gamma"]["steps"][1], serde_json::json!([5]));
}

#[test]
fn psi_maps_the_eight_letter_example() {
    let (v, ok) = run(&["psi", "--n", "8", "--seq", "3 2 6 2"]);
    assert!(ok);
    assert_eq!(v["w"], serde_json::json!([4, 5, 7, 8, 3, 1, 6, 2]));
    assert_eq!(v["q_star"]["rows"], serde_json::json!([[1, 3], [2, 4]]));
}

#[test]
fn algo_b_reports_failures_distinctly() {
    let (v, ok) = run(&["algo-b", "--n", "4", "--seq", "4 4"]);
    assert!(ok);
    assert_eq!(v["outcome"], "step2-overflow");
    assert_eq!(v["t"], serde_json::json!([5, 6]));

    let (v, _) = run(&["algo-b", "--n", "4", "--seq", "1 1"]);
    assert_eq!(v["outcome"], "step3-underflow");
    assert_eq!(v["a"], serde_json::json!([0, 1]));
}

#[test]
fn cossz_uses_empty_brackets_for_empty_cells() {
    let (v, ok) = run(&["cossz", "--n", "6", "--seq", "3 2 6 2"]);
    assert!(ok);
    assert_eq!(
        v["t"]["rows"],
        serde_json::json!([[[], [], [], [3]], [[1]], [[2, 4]]])
    );
    assert_eq!(v["max_shape"], false);
}

#[test]
fn shape_test_classifies_and_decomposes() {
    let (v, ok) = run(&[
        "shape-test",
        "--n",
        "15",
        "--k",
        "7",
        "--seq",
        "2 4 4 9 11 11 11",
    ]);
    assert!(ok);
    assert_eq!(v["shape_class"], "two-row");
    assert_eq!(v["v"], serde_json::json!([2, 3, 3, 6, 7, 7, 7]));
    assert_eq!(v["eps"], serde_json::json!([0, 1, 1, 3, 4, 4, 4]));
    assert_eq!(v["path"], "EENENNEEENENNNE");
}

#[test]
fn verify_exits_zero_only_without_violations() {
    let (v, ok) = run(&["verify", "identity", "--n", "4", "--k", "2"]);
    assert!(ok);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["total"], 16);
    assert_eq!(v["violations"], serde_json::json!([]));

    let (v, ok) = run(&["verify", "theorem", "--name", "cor5.3", "--n", "5", "--k", "2"]);
    assert!(ok);
    assert_eq!(v["violations"], serde_json::json!([]));

    // unknown theorem names fail
    let (_, ok) = run(&["verify", "theorem", "--name", "thm0.0", "--n", "4", "--k", "2"]);
    assert!(!ok);
}

#[test]
fn budget_env_var_caps_sweeps() {
    let out = Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(["verify", "identity", "--n", "6", "--k", "4"])
        .env("TABLEAUX_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "stderr: {err}");
}

#[test]
fn malformed_input_fails_cleanly() {
    let (_, ok) = run(&["di", "--n", "4", "--seq", "5 1"]);
    assert!(!ok);
    let (_, ok) = run(&["repark", "--n", "5", "--cars", "2 2", "--dir", "right"]);
    assert!(!ok);
    let (_, ok) = run(&["repark", "--n", "5", "--cars", "2 3", "--dir", "sideways"]);
    assert!(!ok);
}
