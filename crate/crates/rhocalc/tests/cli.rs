//! End-to-end tests of the rhocalc binary: output formats, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn rhocalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhocalc"))
        .args(args)
        .env_remove("RHOCALC_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_the_delta_height_with_17_digits() {
    let out = rhocalc(&["eval", "--expr", "delta(x)", "--at", "x=0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5.6418958354775628e-1*s^-1 + O(s^10)\n");
}

#[test]
fn eval_emits_series_json() {
    let out = rhocalc(&["eval", "--expr", "delta(x)", "--at", "x=0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["order"], serde_json::json!([10, 1]));
    assert_eq!(v["terms"][0]["exp"], serde_json::json!([-1, 1]));
    let c = v["terms"][0]["re"].as_f64().unwrap();
    assert!((c - 0.5641895835477563).abs() < 1e-15);
}

#[test]
fn eval_respects_the_order_flag_and_env() {
    let out = rhocalc(&["eval", "--expr", "s^8", "--order", "6"]);
    assert_eq!(stdout(&out), "O(s^6)\n");

    let out = Command::new(env!("CARGO_BIN_EXE_rhocalc"))
        .args(["eval", "--expr", "s^8"])
        .env("RHOCALC_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "O(s^7)\n");

    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_rhocalc"))
        .args(["eval", "--expr", "s^8", "--order", "12"])
        .env("RHOCALC_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1.0000000000000000e0*s^8 + O(s^12)\n");
}

#[test]
fn scalar_detects_the_trig_identity() {
    let out = rhocalc(&["scalar", "--expr", "sin(x)^2+cos(x)^2", "--domain", "box(-2,2)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "SCALAR C = 1.0000000000000000e0 + O(s^10)\n");
}

#[test]
fn scalar_rejects_the_identity_with_exit_2() {
    let out = rhocalc(&["scalar", "--expr", "x", "--domain", "box(-2,2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("NOT A SCALAR"));
}

#[test]
fn limit_prints_the_witness_table() {
    let out = rhocalc(&[
        "limit", "--expr", "x^2", "--at", "x=3", "--mode", "differential", "--nmax", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for n in 1..=5 {
        assert!(text.contains(&format!("n={n} m={n}")), "missing witness for n={n}");
    }
    assert!(text.ends_with("verdict: holds\n"));
}

#[test]
fn limit_beyond_the_order_is_indistinguishable() {
    // targets past the knowledge order cannot be certified
    let out = rhocalc(&[
        "limit", "--expr", "x^2", "--at", "x=3", "--mode", "continuity", "--nmax", "12",
        "--order", "6",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quotient_matches_the_sine_series() {
    let out = rhocalc(&["quotient", "--expr", "sin(x)", "--at", "x=0", "--h", "s"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("1.0000000000000000e0 + -1.6666666666666666e-1*s^2"));
}

#[test]
fn diff_output_reparses() {
    let out = rhocalc(&["diff", "--expr", "heaviside(x)", "--wrt", "x"]);
    assert_eq!(out.status.code(), Some(0));
    let printed = stdout(&out);
    // feeding the derivative back evaluates like delta at 0
    let out = rhocalc(&["eval", "--expr", printed.trim(), "--at", "x=0"]);
    assert_eq!(stdout(&out), "5.6418958354775628e-1*s^-1 + O(s^10)\n");
}

#[test]
fn syntax_errors_exit_1_with_position() {
    let out = rhocalc(&["eval", "--expr", "exp(x)+s^1/2"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(msg.contains("syntax error at 1:11"));
    assert!(msg.contains("^(p/q)"));
}

#[test]
fn usage_errors_exit_64() {
    let out = rhocalc(&["eval"]);
    assert_eq!(out.status.code(), Some(64));
    let out = rhocalc(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn evaluation_errors_exit_1() {
    let out = rhocalc(&["eval", "--expr", "exp(s^-1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not moderate"));

    let out = rhocalc(&["eval", "--expr", "x", "--at", "x=5", "--domain", "box(0,1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the domain"));
}

#[test]
fn suite_runs_are_byte_deterministic() {
    let a = rhocalc(&["suite", "--name", "distributions", "--seed", "7"]);
    let b = rhocalc(&["suite", "--name", "distributions", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let a = rhocalc(&[
        "limit", "--expr", "delta(x)", "--at", "x=0", "--mode", "continuity", "--nmax", "4",
        "--json",
    ]);
    let b = rhocalc(&[
        "limit", "--expr", "delta(x)", "--at", "x=0", "--mode", "continuity", "--nmax", "4",
        "--json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["check"], "continuity");
    assert_eq!(v["verdict"], "holds");
    assert!(v["witnesses"].as_array().unwrap().len() == 4);
    assert!(v["probes"].as_array().is_some());
    assert!(v["seed"].is_u64());
}

#[test]
fn unknown_suite_exits_1() {
    let out = rhocalc(&["suite", "--name", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scalar_on_a_disconnected_domain_reports_the_hypothesis() {
    let out = rhocalc(&[
        "scalar", "--expr", "1", "--domain", "union(box(0,1)|box(2,3))",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("arcwise connected"));
}

#[test]
fn two_dimensional_evaluation() {
    let out = rhocalc(&[
        "eval", "--expr", "x*y + y^2", "--at", "x=1+1*s, y=2",
        "--domain", "box(-3,3;-3,3)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // (1+s)*2 + 4 = 6 + 2s
    assert_eq!(stdout(&out), "6.0000000000000000e0 + 2.0000000000000000e0*s^1 + O(s^10)\n");
}

#[test]
fn limit_works_at_displaced_points() {
    let out = rhocalc(&[
        "limit", "--expr", "exp(x)", "--at", "x=1+1*s^2", "--mode", "continuity", "--nmax", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
