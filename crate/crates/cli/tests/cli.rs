use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ckspaces")).args(args).env_remove("CK_TOLERANCE").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn classify_minkowski() {
    let r = json(&["classify", "--omega", "0,-1,1,1"]);
    assert_eq!(r["command"], "classify");
    assert_eq!(r["payload"]["rank_one"]["name"], "Minkowskian Spacetime");
    assert_eq!(r["payload"]["rank_two"]["name"], "Minkowskian Phase Space");
    assert_eq!(r["payload"]["rank_two"]["foliation"], "Invariant Foliation");
    assert_eq!(r["payload"]["alias"], "ISO(3,1)");
}

#[test]
fn classify_sphere_and_flag() {
    let r = json(&["classify", "--omega", "1,1"]);
    assert_eq!(r["payload"]["structure"], "SO(3)");
    assert_eq!(r["payload"]["rank_one"]["name"], "Elliptic Space");
    assert!(r["payload"]["rank_two"].is_null());
    let r = json(&["classify", "--omega", "0,0,0"]);
    assert_eq!(r["payload"]["kind"], "flag");
    assert_eq!(r["payload"]["alias"], "IIISO(1)");
}

#[test]
fn malformed_arguments_exit_2() {
    for args in [
        &["classify", "--omega", "1,,2"][..],
        &["classify", "--omega", "a"],
        &["classify", "--omega", "1,nan"],
        &["classify"],
        &["metric", "--omega", "1,1", "--point", "0,0,0"],
        &["metric", "--omega", "1,1,1", "--space", "rank2", "--chart", "parallel"],
        &["verify", "--suite", "nope"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn metric_at_origin_is_the_form() {
    let r = json(&["metric", "--omega", "1,-1,1", "--point", "0,0,0"]);
    let m = &r["payload"]["metric"];
    let diag: Vec<f64> = (0..3).map(|i| f(&m[i][i])).collect();
    assert_eq!(diag, vec![1.0, -1.0, -1.0]);
    let r = json(&["metric", "--omega", "1,-1,1,1", "--space", "rank2"]);
    assert_eq!(r["payload"]["metric"].as_array().unwrap().len(), 6);
    assert_eq!(r["payload"]["degenerate"], false);
}

#[test]
fn galilean_metric_reports_subsidiary() {
    let r = json(&["metric", "--omega", "0,0,1,1", "--point", "0.2,-0.4,1.5,3"]);
    let p = &r["payload"];
    assert_eq!(p["degenerate"], true);
    assert_eq!(p["foliation"][0]["base"], "S^{[0]}");
    let sub = &p["subsidiary"][0]["metric"];
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(f(&sub[i][j]), if i == j { 1.0 } else { 0.0 });
        }
    }
}

#[test]
fn chart_domain_exits_3() {
    assert_eq!(run(&["metric", "--omega", "-1,1", "--point", "1,0"]).status.code(), Some(3));
}

#[test]
fn curvature_examples() {
    let r = json(&["curvature", "--omega", "1,1"]);
    for s in r["payload"]["samples"].as_array().unwrap() {
        assert!((f(&s["value"]) - 1.0).abs() < 1e-4);
    }
    let r = json(&["curvature", "--omega", "1,1,1", "--space", "rank2"]);
    let disjoint: Vec<_> = r["payload"]["samples"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["plane"].as_str().unwrap().ends_with("disjoint-index"))
        .collect();
    assert_eq!(disjoint.len(), 2);
    assert!(disjoint.iter().all(|s| f(&s["value"]).abs() < 1e-4));
    let r = json(&["curvature", "--omega", "1,-1,1,1", "--space", "rank2"]);
    for s in r["payload"]["samples"].as_array().unwrap() {
        if s["plane"].as_str().unwrap().ends_with("same-index") {
            assert!((f(&s["value"]) + 1.0).abs() < 1e-4);
        }
    }
    assert_eq!(run(&["curvature", "--omega", "1,0,1"]).status.code(), Some(4));
}

#[test]
fn verify_suites() {
    let r = json(&["verify", "--suite", "killing", "--n", "3"]);
    assert_eq!(r["payload"]["pass"], true);
    assert_eq!(f(&r["payload"]["suites"][0]["checks"][0]["max_residual"]), 0.0);
    let r = json(&["verify", "--suite", "pluecker", "--n", "4"]);
    assert_eq!(r["payload"]["pass"], true);
    assert!(f(&r["payload"]["suites"][0]["checks"][0]["max_residual"]) <= 1e-9);
    let r = json(&["verify", "--suite", "all", "--n", "2"]);
    assert_eq!(r["payload"]["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn reports_are_deterministic_and_formatted() {
    let args = ["curvature", "--omega", "-1,-1,1,1", "--point", "0.1,0.2,0,-0.1", "--seeds", "7"];
    let a = run(&args).stdout;
    assert_eq!(a, run(&args).stdout);
    assert_ne!(a, run(&["curvature", "--omega", "-1,-1,1,1", "--point", "0.1,0.2,0,-0.1", "--seeds", "8"]).stdout);
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("-1.000000000000e+00"));
    let keys: Vec<String> = serde_json::from_str::<Value>(&text).unwrap().as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "payload", "signature", "version"]);
    let v = run(&["verify", "--suite", "isometry", "--n", "3", "--seeds", "5"]).stdout;
    assert_eq!(v, run(&["verify", "--suite", "isometry", "--n", "3", "--seeds", "5"]).stdout);
}

#[test]
fn tolerance_override() {
    // with a huge chart tolerance every Beltrami point is rejected
    let out = Command::new(env!("CARGO_BIN_EXE_ckspaces"))
        .args(["metric", "--omega", "1,1", "--point", "0.5,0.5"])
        .env("CK_TOLERANCE", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_ckspaces"))
        .args(["classify", "--omega", "1,1"])
        .env("CK_TOLERANCE", "bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pretty_mode_is_text() {
    let out = run(&["classify", "--omega", "1,0,1,1", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("name: Oscillating NH Spacetime"));
    assert!(text.contains("structure: T_6 ⊙ (SO(3) ⊗ SO(2))"));
}
