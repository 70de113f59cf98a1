mod common;

use std::path::PathBuf;

use common::{json, FCC3, FCC4};

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&value).unwrap_or_else(|e| panic!("{name} schema: {e}"))
}

fn assert_valid(name: &str, args: &[&str]) {
    let instance = json(args);
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(&instance).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{args:?} against {name}: {errors:#?}");
}

#[test]
fn check_output_matches_schema() {
    assert_valid("check", &["check", FCC3]);
    assert_valid("check", &["check", "[1,0.6;1]"]);
    assert_valid("check", &["check", "[1.0,0.25,0.1;1.2,-0.3;1.5]", "--tol", "1e-9"]);
}

#[test]
fn angle_output_matches_schema() {
    assert_valid("angle", &["angle", FCC4]);
    assert_valid("angle", &["angle", "[2,1;3]"]);
    assert_valid("angle", &["angle", FCC3, "--min-over-signs"]);
}

#[test]
fn extremal_outputs_match_schemas() {
    assert_valid("mindet", &["mindet", "1,1,1,1"]);
    assert_valid("vertices", &["vertices"]);
    assert_valid("vertices", &["vertices", "--system", "diagonal", "--diagonal", "1,2"]);
    assert_valid("scan", &["scan", "--grid", "4", "--points", "12"]);
    assert_valid("edge", &["edge", "--grid", "4", "--points", "12"]);
    assert_valid("edge", &["edge", "--b2", "0.1", "--grid", "4", "--points", "12"]);
}

#[test]
fn oracle_and_reproduce_outputs_match_schemas() {
    assert_valid("oracle", &["oracle", FCC3, "--mc-samples", "10000"]);
    assert_valid("oracle", &["oracle", FCC4, "--mc-samples", "10000"]);
    for table in ["lemma43", "lemma44", "dim4", "vertices23", "vertices24"] {
        assert_valid("reproduce", &["reproduce", "--table", table]);
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let v = schema("reproduce");
    assert!(!v.is_valid(&serde_json::json!({"table": "lemma45", "rows": [], "pass": true})));
    let v = schema("check");
    assert!(!v.is_valid(&serde_json::json!({"n": 5})));
}
