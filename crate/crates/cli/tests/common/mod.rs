#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

pub fn kb(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../kb").join(name)
}

pub fn ppl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppl"))
        .args(args)
        .output()
        .expect("run ppl")
}

pub fn query(file: &str, alg: &str, formula: &str, json: bool) -> Output {
    let path = kb(file);
    let mut args = vec!["query", path.to_str().unwrap(), "--alg", alg, formula];
    if json {
        args.push("--json");
    }
    ppl(&args)
}

pub fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

pub fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/query-result.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Schema violations of a query document, empty when valid.
pub fn schema_errors(doc: &Value) -> Vec<String> {
    let schema = schema();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator.iter_errors(doc).map(|e| e.to_string()).collect()
}

/// `(alg, proofValue, truthValue)` rows of a query document.
pub fn rows(doc: &Value) -> Vec<(String, i64, String)> {
    doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["alg"].as_str().unwrap().to_string(),
                r["proofValue"].as_i64().unwrap(),
                r["truthValue"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}
