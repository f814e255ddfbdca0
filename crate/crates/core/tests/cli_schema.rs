use std::process::Command;

use serde_json::Value;

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn hp(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hp"))
        .args(args)
        .env_remove("HP_MUTATE")
        .env_remove("HP_SYMBOLIC_CAP")
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

const COMMANDS: &[&[&str]] = &[
    &["eig", "--n", "3", "--lambda", "1,1,0", "--m", "2", "--theta", "1"],
    &["eig", "--n", "3", "--lambda", "2,1,0", "--m", "2", "--tau", "1,1,1"],
    &["series", "--n", "3", "--lambda", "2,1", "--m", "4"],
    &["spectrum", "--n", "3", "--lambda", "2,1,0", "--m", "2", "--theta", "1"],
    &["spectrum", "--n", "3", "--lambda", "3,1,0", "--m", "3"],
    &["spectrum", "--n", "4", "--lambda", "2,1,1,0", "--m", "2", "--theta", "1/2"],
    &["trace", "--n", "3", "--lambda", "2,1,0", "--tau", "1,1,1", "--m", "1"],
    &["jack", "--n", "3", "--lambda", "2,1", "--m", "1,2,3"],
    &["basis", "--n", "3", "--lambda", "2,1,0"],
    &["basis", "--n", "3", "--lambda", "2,1,0", "--joint", "--theta", "1"],
    &["basis", "--n", "3", "--lambda", "1,1,0", "--joint", "--full", "--theta", "2"],
    &["char", "--n", "5", "--tau", "3,2", "--class", "2"],
    &["avgchar", "--tau", "2,1", "--blocks", "2,1", "--subset", "1,2"],
    &["catalog3", "--lambda", "2,1,0", "--m", "2"],
    &["catalog3", "--lambda", "2,2,1", "--m", "3", "--theta", "1", "--check"],
    &["verify", "cms", "--n", "2", "--maxdeg", "3"],
];

#[test]
fn every_report_validates_and_round_trips() {
    let validator = schema();
    for args in COMMANDS {
        let (code, out) = hp(args);
        assert_eq!(code, 0, "{args:?}: {out}");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 1, "{args:?} printed {} lines", lines.len());
        let v: Value = serde_json::from_str(lines[0]).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
        assert!(validator.is_valid(&again));
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let validator = schema();
    let (_, out) = hp(COMMANDS[0]);
    let mut v: Value = serde_json::from_str(out.trim()).unwrap();
    assert!(validator.is_valid(&v));
    v["unexpected"] = Value::Bool(true);
    assert!(!validator.is_valid(&v));
    let (_, out) = hp(COMMANDS[3]);
    let mut v: Value = serde_json::from_str(out.trim()).unwrap();
    v["eigenvalues"][0]["mult"] = Value::from(0);
    assert!(!validator.is_valid(&v));
}

#[test]
fn documented_values() {
    let (_, out) = hp(COMMANDS[0]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["eigenvalue"], "4");
    let (_, out) = hp(&["eig", "--n", "3", "--lambda", "1,1,0", "--m", "2"]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["eigenvalue"], "2*θ + 2");
    let (_, out) = hp(COMMANDS[6]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["closed"], "6*θ + 3");
    assert_eq!(v["equal"], true);
}

#[test]
fn csv_and_pretty_formats() {
    let (code, out) = hp(&["spectrum", "--n", "3", "--lambda", "1,1,0", "--m", "2", "--theta", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["n", "lambda", "tau", "m", "theta", "value", "mult", "provenance"]);
    assert!(reader.records().count() >= 2);
    let (code, out) = hp(&["char", "--n", "3", "--tau", "2,1", "--class", "3", "--format", "pretty"]);
    assert_eq!(code, 0);
    assert!(out.contains("-1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hp(&["eig", "--n", "2", "--lambda", "1,1,1", "--m", "1"]).0, 2);
    assert_eq!(hp(&["eig", "--n", "3", "--lambda", "x", "--m", "1"]).0, 2);
    assert_eq!(hp(&["nonsense"]).0, 2);
}
