//! Custom `(K, R, H, A)` input: round trips, axiom failures, trivial data.

use bcenter::centers::b_center;
use bcenter::custom::{CustomInput, INPUT_SCHEMA};
use bcenter::scenarios::{NilpotentSetup, SweedlerSetup};
use bcenter::scalars::{field_new, ScalarFormat};
use bcenter::Error;

fn center_json(a: &bcenter::braided_hopf::ModuleAlgebra, fmt: &ScalarFormat) -> serde_json::Value {
    let mut j = b_center(a).unwrap().center.to_json(fmt);
    j["ambient"]["name"] = serde_json::Value::Null;
    j
}

#[test]
fn nilpotent_data_round_trips() {
    for gamma in [0, 1] {
        let s = NilpotentSetup::canonical(3, gamma, 8).unwrap();
        let input = CustomInput::export(&s.a, Some(s.qp.root)).unwrap();
        let text = serde_json::to_string_pretty(&input).unwrap();
        let back = CustomInput::from_json_str(&text).unwrap();
        assert_eq!(back, input);
        let built = back.build().unwrap();
        assert_eq!(built.a.alg.dim(), s.a.alg.dim());
        let fmt = s.qp.format();
        assert_eq!(center_json(&built.a, &fmt), center_json(&s.a, &fmt), "γ = {gamma}");
    }
}

#[test]
fn sweedler_data_round_trips() {
    let f = field_new(1).unwrap();
    let s = SweedlerSetup::new(&f.int(2), &f.int(1), 6).unwrap();
    let input = CustomInput::export(&s.a, None).unwrap();
    let built = CustomInput::from_json_str(&serde_json::to_string(&input).unwrap()).unwrap().build().unwrap();
    let fmt = ScalarFormat::plain();
    assert_eq!(center_json(&built.a, &fmt), center_json(&s.a, &fmt));
}

#[test]
fn non_coassociative_coproduct_aborts_with_witness() {
    let s = NilpotentSetup::canonical(3, 1, 6).unwrap();
    let mut input = CustomInput::export(&s.a, Some(s.qp.root)).unwrap();
    // Δx = x ⊗ x + 1 ⊗ x is not coassociative
    input.h.coproduct.insert("x".into(), vec![("1".into(), "x ⊗ x".into()), ("1".into(), "1 ⊗ x".into())]);
    match input.build() {
        Err(Error::AxiomFailure { check, witness }) => {
            assert!(!check.is_empty() && !witness.is_empty());
        }
        other => panic!("expected an axiom failure, got {other:?}"),
    }
}

#[test]
fn unknown_generator_and_schema_are_rejected() {
    let s = NilpotentSetup::canonical(3, 1, 6).unwrap();
    let mut input = CustomInput::export(&s.a, Some(s.qp.root)).unwrap();
    input.h.counit.insert("w".into(), "0".into());
    assert!(matches!(input.build(), Err(Error::InvalidArgument(_))));
    let mut input = CustomInput::export(&s.a, Some(s.qp.root)).unwrap();
    input.schema = "other/1".into();
    let text = serde_json::to_string(&input).unwrap();
    assert!(CustomInput::from_json_str(&text).is_err());
}

#[test]
fn trivial_data_has_trivial_center() {
    let text = format!(
        r#"{{
  "schema": "{INPUT_SCHEMA}",
  "conductor": 1,
  "k": {{"presentation": {{"generators": []}}, "coproduct": {{}}, "counit": {{}}, "antipode": {{}}, "r": [["1", "1 ⊗ 1"]]}},
  "h": {{"presentation": {{"generators": []}}, "k_action": {{}}, "coproduct": {{}}, "counit": {{}}, "antipode": {{}}}},
  "a": {{"presentation": {{"generators": []}}, "k_action": {{}}, "h_action": {{}}}}
}}"#
    );
    let built = CustomInput::from_json_str(&text).unwrap().build().unwrap();
    let bc = b_center(&built.a).unwrap();
    assert_eq!(bc.rb.alg.dim(), 1);
    assert_eq!(bc.center.dim(), 1);
    assert_eq!(bc.center.basis[0], bc.rb.alg.unit().clone());
}
