//! Shared helpers for the CLI test targets.
#![allow(dead_code)]

use nipval_cli::{run, Output};
use serde_json::Value;
use std::path::PathBuf;

/// Example 5.2 style corpus: descriptor text and expected NIP case label.
pub const GOLDEN: [(&str, &str); 9] = [
    ("hahn(triv(ACF0),Q)", "a"),
    ("hahn(triv(RCF),lex(Z,Z))", "a"),
    ("hahn(triv(Falg(5)),Q)", "a"),
    ("Qp(5,1,1)", "b"),
    ("Qp(5,2,3)", "b"),
    ("cohen(abstract{res=Falg(3),group=Q,field=SCF(3,1),hens=T,sdl=T,sam=T})", "b"),
    ("hahn(Qp(5,1,1),Q)", "b"),
    ("tame(Falg(5),Q,1)", "c"),
    ("hahn(tame(Falg(5),Q,1),Q)", "c"),
];

/// Descriptors that are not NIP and the clause each must report as failed.
pub const NEGATIVE: [(&str, &str); 3] = [
    ("hahn(triv(Falg(5)),Z)", "2a.ii"),
    ("abstract{res=F(5),group=Q,vp=1,hens=T,am=T}", "3"),
    ("hahn(hahn(triv(SCF(3,1)),Z),Z)", "audit"),
];

pub fn nipval(args: &[&str]) -> Output {
    run(std::iter::once("nipval").chain(args.iter().copied()))
}

pub fn json_of(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

pub fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"))
}

/// Validates against `schemas/<name>.schema.json`, returning the messages.
pub fn schema_errors(name: &str, doc: &Value) -> Vec<String> {
    let text = std::fs::read_to_string(schema_path(name)).expect("schema file");
    let schema: Value = serde_json::from_str(&text).expect("schema is JSON");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator
        .iter_errors(doc)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect()
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
