//! End-to-end runs of the `bcenter` binary.

use bcenter::centers::{b_center, elements_from_json, verify_central};
use bcenter::scalars::QParam;
use bcenter::scenarios::NilpotentSetup;
use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcenter")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

fn tmp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bcenter-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn terms(e: &Value) -> Vec<(String, String)> {
    e["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t[0].as_str().unwrap().to_string(), t[1].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn uqsl2_gamma_one_reports_z() {
    let (v, code) = json(&["uqsl2", "--n", "3", "--gamma", "1", "--degree", "8", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "bcenter.report/1");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let gens = v["results"]["center"]["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 1);
    // z = 1⊗u + q⁻⁴(1−q²) x⊗u² + q⁻¹⁰(1−q²)² x²⊗u³ at q = ζ₃
    let qp = QParam::canonical(3).unwrap();
    let (q, fmt) = (&qp.q, qp.format());
    let c = qp.field.one().sub(&q.pow(2));
    let expect = vec![
        ("1 ⊗ u".to_string(), "1".to_string()),
        ("x ⊗ u^2".to_string(), fmt.render(&q.pow(-4).mul(&c))),
        ("x^2 ⊗ u^3".to_string(), fmt.render(&q.pow(-10).mul(&c).mul(&c))),
    ];
    assert_eq!(terms(&gens[0]), expect);
    assert_eq!(v["results"]["comparison"]["result"]["verdict"], "distinguishable");
    assert_eq!(v["conclusion"], "centers distinguishable ⇒ not Morita equivalent");
}

#[test]
fn uqsl2_gamma_zero_text() {
    let out = run(&["uqsl2", "--n", "3", "--gamma", "0", "--degree", "8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] center is H ⊗ k[u^n] up to the certified degree"), "{text}");
    assert!(text.contains("generator c1 = x ⊗ 1"));
    assert!(text.contains("generator c2 = 1 ⊗ u^3"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn weyl_one_variable() {
    let (v, code) = json(&["weyl", "--vars", "1", "--degree", "8", "--json"]);
    assert_eq!(code, 0);
    let gens = v["results"]["center"]["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(terms(&gens[0]), vec![("d ⊗ 1".to_string(), "1".to_string())]);
    assert_eq!(v["results"]["center"]["window"], 7);
}

#[test]
fn json_is_deterministic_across_runs_and_thread_counts() {
    let args = ["uqsl2", "--n", "3", "--gamma", "2", "--json"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    let c = run(&[&args[..], &["--jobs", "1"]].concat()).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn report_basis_reverifies() {
    let (v, _) = json(&["uqsl2", "--n", "3", "--gamma", "1", "--degree", "8", "--json", "--checks", "center"]);
    let s = NilpotentSetup::canonical(3, 1, 8).unwrap();
    let bc = b_center(&s.a).unwrap();
    let elems = elements_from_json(&bc.rb.alg, &v["results"]["center"]["basis"], &s.qp.format()).unwrap();
    assert_eq!(elems.len(), 7);
    let all: Vec<_> = (0..bc.rb.alg.dim()).map(|i| bcenter::linspace::Vector::unit(i, bc.rb.alg.one())).collect();
    assert!(verify_central(&bc.rb, &elems, &all, bcenter::centers::Side::Left).unwrap() > 0);
}

#[test]
fn custom_round_trip_reproduces_builtin() {
    for gamma in ["0", "1"] {
        let emitted = run(&["uqsl2", "--n", "3", "--gamma", gamma, "--emit-input"]);
        assert!(emitted.status.success());
        let path = tmp(&format!("nilpotent-{gamma}.json"), std::str::from_utf8(&emitted.stdout).unwrap());
        let (custom, code) = json(&["custom", path.to_str().unwrap(), "--json"]);
        assert_eq!(code, 0);
        let (builtin, _) = json(&["uqsl2", "--n", "3", "--gamma", gamma, "--json"]);
        let (c, b) = (&custom["results"]["center"], &builtin["results"]["center"]);
        for key in ["basis", "generators", "window", "safe_degree", "verified_pairs"] {
            assert_eq!(c[key], b[key], "{key}, γ = {gamma}");
        }
    }
}

#[test]
fn custom_non_coassociative_coproduct_aborts() {
    let emitted = run(&["uqsl2", "--n", "3", "--gamma", "1", "--emit-input"]);
    let mut input: Value = serde_json::from_slice(&emitted.stdout).unwrap();
    input["h"]["coproduct"]["x"] = serde_json::json!([["1", "x ⊗ x"], ["1", "1 ⊗ x"]]);
    let path = tmp("bad-coproduct.json", &input.to_string());
    let out = run(&["custom", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("abort: axiom check"), "{err}");
    assert!(err.contains("witness:"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn custom_trivial_data_has_trivial_center() {
    let text = r#"{
  "schema": "bcenter.input/1",
  "conductor": 1,
  "k": {"presentation": {"generators": []}, "coproduct": {}, "counit": {}, "antipode": {}, "r": [["1", "1 ⊗ 1"]]},
  "h": {"presentation": {"generators": []}, "k_action": {}, "coproduct": {}, "counit": {}, "antipode": {}},
  "a": {"presentation": {"generators": []}, "k_action": {}, "h_action": {}}
}"#;
    let path = tmp("trivial.json", text);
    let (v, code) = json(&["custom", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let basis = v["results"]["center"]["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 1);
    assert_eq!(terms(&basis[0]), vec![("1 ⊗ 1".to_string(), "1".to_string())]);
}

#[test]
fn sweedler_parameters_agree() {
    let mut first: Option<Value> = None;
    for xi in ["0", "1", "2"] {
        for g in ["0", "1", "2"] {
            let (v, code) = json(&["sweedler", "--xi", xi, "--gamma", g, "--degree", "8", "--json"]);
            assert_eq!(code, 0, "ξ = {xi}, γ = {g}");
            let c = v["results"]["center"]["basis"].clone();
            match &first {
                None => first = Some(c),
                Some(f) => assert_eq!(&c, f),
            }
        }
    }
}

#[test]
fn double_and_axioms_pass() {
    assert!(run(&["double", "--n", "3", "--gamma", "1"]).status.success());
    let out = run(&["axioms", "--n", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn invalid_configurations_are_rejected() {
    for args in [
        vec!["uqsl2", "--n", "2"],
        vec!["uqsl2", "--n", "3", "--degree", "4"],
        vec!["uqsl2", "--n", "3", "--q", "3:3"],
        vec!["uqsl2", "--checks", "nonsense"],
        vec!["double", "--gamma", "0"],
        vec!["weyl", "--vars", "3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn explicit_q_is_honoured() {
    // q = ζ₆ also has ord(q²) = 3
    let (v, code) = json(&["uqsl2", "--n", "3", "--q", "6:1", "--gamma", "1", "--json", "--checks", "center,closed-form"]);
    assert_eq!(code, 0);
    assert_eq!(v["config"]["q"], "zeta_6^1");
    assert_eq!(v["results"]["center"]["field"], "Q(zeta_6)");
}
