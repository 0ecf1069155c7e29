#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::{Draft, JSONSchema};
use serde_json::Value;

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_noether-forge"));
    cmd.env_remove("NOETHER_CAP");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn noether-forge")
}

pub fn schema_for(command: &str) -> &'static str {
    match command {
        "classify" => "report",
        "invariants" => "invariants",
        "act" => "act",
        "audit" => "audit",
        "witnesses" => "witnesses",
        other => panic!("no schema for {other}"),
    }
}

pub fn load_schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file")).expect("schema json")
}

/// Validates `instance` against the schema published for `command`.
pub fn validate(command: &str, instance: &Value) -> Result<(), Vec<String>> {
    let schema = load_schema(schema_for(command));
    let compiled = JSONSchema::options()
        .with_draft(Draft::Draft7)
        .compile(&schema)
        .expect("schema compiles");
    let result = compiled
        .validate(instance)
        .map_err(|errs| errs.map(|e| format!("{} at {}", e, e.instance_path)).collect());
    result
}

/// Every documented CLI example that exits 0, as (command, args).
pub fn documented_examples() -> Vec<Vec<&'static str>> {
    vec![
        vec!["classify", "--n", "3", "--group", r#"[{"perm":[2,3,1]}]"#],
        vec!["classify", "--n", "2", "--vertical", "[2,2]", "--field", "Q"],
        vec!["classify", "--n", "4", "--group", r#"[{"perm":"(1 2)"},{"perm":"(1 2 3 4)"}]"#],
        vec!["classify", "--vertical", "[2,2,2]", "--group", r#"[{"perm":"(1 2)"},{"perm":"(1 2 3)"}]"#],
        vec!["classify", "--n", "2", "--vertical", "[3,4]", "--field", "Fp:13"],
        vec!["invariants", "--n", "2", "--fn", "t1^2+t2^2"],
        vec!["invariants", "--n", "3"],
        vec!["act", "--aut", r#"{"perm":[2,3,1]}"#, "--fn", "t1/(t2+t3)"],
        vec!["act", "--n", "2", "--aut", r#"{"reciprocal":true}"#, "--fn", "5"],
        vec!["audit", "--checks", "all"],
        vec!["audit", "--checks", "sym-free-rank", "--m", "3"],
        vec!["witnesses", "--n", "3"],
    ]
}
