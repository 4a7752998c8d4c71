//! End-to-end tests of the command-line surface: exit-code contract,
//! golden CSV bytes, report schema, and gamma-set input handling.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// Minimal structural validator for the subset of JSON Schema the
/// committed report schema uses (type, required, properties, items,
/// enum, minLength).
fn validate(schema: &Value, value: &Value, path: &str, errors: &mut Vec<String>) {
    if let Some(expected) = schema.get("type").and_then(Value::as_str) {
        let ok = match expected {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "number" => value.is_number(),
            "integer" => value.is_u64() || value.is_i64(),
            "boolean" => value.is_boolean(),
            other => panic!("unsupported schema type {other}"),
        };
        if !ok {
            errors.push(format!("{path}: expected {expected}"));
            return;
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            errors.push(format!("{path}: {value} not in {options:?}"));
        }
    }
    if let Some(min) = schema.get("minLength").and_then(Value::as_u64) {
        if value.as_str().is_some_and(|s| (s.len() as u64) < min) {
            errors.push(format!("{path}: shorter than {min}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required.iter().filter_map(Value::as_str) {
            if value.get(key).is_none() {
                errors.push(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, subschema) in props {
            if let Some(sub) = value.get(key) {
                validate(subschema, sub, &format!("{path}.{key}"), errors);
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (i, item) in array.iter().enumerate() {
                validate(items, item, &format!("{path}[{i}]"), errors);
            }
        }
    }
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "--k", "1", "--l", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("H(2)"), "{text}");
    assert!(text.contains("mod 8: 6"), "{text}");

    let out = run(&["classify", "--k", "0", "--l", "0"]);
    assert!(stdout(&out).contains("R(1)"));

    let out = run(&["classify", "--k", "3", "--l", "3"]);
    assert!(stdout(&out).contains("R(8)"));

    // Invalid arguments exit 2.
    let out = run(&["classify", "--k", "-1", "--l", "3"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["classify", "--l", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn recover_examples() {
    let out = run(&["recover", "--n", "4", "--theta-sq", "+1", "--omega-sq", "-1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("nu mod 8: 6"), "{text}");
    assert!(text.contains("(1, 3)"), "{text}");

    let out = run(&["recover", "--n", "2", "--theta-sq", "-1", "--omega-sq", "-1"]);
    assert!(stdout(&out).contains("(0, 2)"));

    let out = run(&["recover", "--n", "2", "--theta-sq", "+1", "--omega-sq", "+1"]);
    let text = stdout(&out);
    assert!(text.contains("nu mod 8: 0"), "{text}");
    assert!(text.contains("(1, 1)"), "{text}");

    // The s entry point matches omega^2 = n1 s: for n = 4, n1 = +1.
    let via_s = run(&["recover", "--n", "4", "--theta-sq", "+1", "--s", "-1"]);
    let via_omega = run(&["recover", "--n", "4", "--theta-sq", "+1", "--omega-sq", "-1"]);
    assert_eq!(stdout(&via_s).lines().last(), stdout(&via_omega).lines().last());

    // Odd n and missing sign flags exit 2.
    let out = run(&["recover", "--n", "3", "--theta-sq", "+1", "--omega-sq", "-1"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["recover", "--n", "4", "--theta-sq", "+1"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["recover", "--n", "4", "--theta-sq", "2", "--omega-sq", "-1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_csv_matches_golden_bytes() {
    let golden = include_str!("../src/data/table1_golden.csv");
    let out = run(&["table", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), golden);
}

#[test]
fn table_truncation_and_bounds() {
    let out = run(&["table", "--max-n", "2"]);
    let text = stdout(&out);
    // Four populated cells: R, 2R, R(2), R(2).
    assert_eq!(text.matches('R').count(), 4, "{text}");

    let out = run(&["table", "--max-n", "9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn cube_json_has_eight_vertices() {
    let out = run(&["cube", "--format", "json"]);
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vertices = value["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 8);
    assert_eq!(vertices[3]["division"], "C");
    assert_eq!(vertices[5]["division"], "2H");
}

#[test]
fn verify_small_passes_and_carries_named_checks() {
    let out = run(&["verify", "--max-n", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let s2 = checks
        .iter()
        .find(|c| c["name"] == "s2_eq_minus1_pow_r")
        .expect("s2 check present");
    assert_eq!(s2["status"], "pass");
}

#[test]
fn verify_report_validates_against_committed_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let out = run(&["verify", "--max-n", "2", "--format", "json"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut errors = Vec::new();
    validate(&schema, &report, "$", &mut errors);
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn verify_usage_errors() {
    for args in [
        &["verify", "--max-n", "9"][..],
        &["verify", "--max-n", "14"],
        &["verify", "--max-n", "10", "--with-matrix"],
        &["verify", "--max-n", "0"],
    ] {
        let out = run(args);
        assert_eq!(exit_code(&out), 2, "{args:?}");
    }
}

#[test]
fn verify_fails_with_impossible_tolerance() {
    // An absurdly tight tolerance makes the matrix identities fail, which
    // must surface as exit 1 (verification failure, not usage error).
    let out = Command::new(env!("CARGO_BIN_EXE_cliffordlab"))
        .args(["verify", "--max-n", "2", "--with-matrix", "--format", "json"])
        .env("CLIFFORDLAB_TOL", "1e-30")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["summary"]["failures"].as_u64().unwrap() > 0);
}

#[test]
fn reduce_builtin_signatures() {
    let out = run(&["reduce", "--k", "0", "--l", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("kind: quaternionic"));

    let out = run(&["reduce", "--k", "1", "--l", "1"]);
    assert!(stdout(&out).contains("kind: real"));

    let out = run(&["reduce", "--k", "1", "--l", "2"]);
    assert_eq!(exit_code(&out), 2);

    let out = run(&["reduce", "--k", "1", "--l", "1", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn reduce_external_dirac_like_set() {
    // An externally supplied (1,3) gamma set in the interchange format
    // reduces to the quaternionic kind.
    let dir = tempfile::tempdir().unwrap();
    let rep = cliffordlab::matrep::MatrixRep::build(cliffordlab_core::Signature::new(1, 3))
        .unwrap();
    let file = cliffordlab::gamma_json::GammaSetFile::from_rep(&rep);
    let path = dir.path().join("diracset.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

    let out = run(&["reduce", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["kind"], "quaternionic");
    assert_eq!(value["m"], 2);
    assert!(value["basis_change"].is_array());
    assert_eq!(value["gammas"].as_array().unwrap().len(), 4);
}

#[test]
fn reduce_real_output_round_trips_as_input() {
    // A real-kind reduction emits all-real gammas, which pass validation
    // when fed back through --input (the interchange keys are embedded
    // in the reduce output).
    let dir = tempfile::tempdir().unwrap();
    let emitted = dir.path().join("reduced22.json");
    let out = run(&[
        "reduce",
        "--k",
        "2",
        "--l",
        "2",
        "--format",
        "json",
        "--output",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let value: Value =
        serde_json::from_str(&std::fs::read_to_string(&emitted).unwrap()).unwrap();
    assert_eq!(value["kind"], "real");

    let out = run(&["reduce", "--input", emitted.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("kind: real"));
}

#[test]
fn reduce_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();

    // Malformed JSON exits 2.
    let malformed = dir.path().join("broken.json");
    std::fs::write(&malformed, "{ not json").unwrap();
    let out = run(&["reduce", "--input", malformed.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // Structurally fine JSON that is not a Clifford set exits 1 and the
    // diagnostic names the failed anticommutator.
    let non_clifford = dir.path().join("non_clifford.json");
    std::fs::write(
        &non_clifford,
        r#"{"m": 1, "gammas": [
            [[[0.0,0.0],[1.0,0.0]],[[1.0,0.0],[0.0,0.0]]],
            [[[0.0,0.0],[1.0,0.0]],[[1.0,0.0],[0.0,0.0]]]
        ]}"#,
    )
    .unwrap();
    let out = run(&["reduce", "--input", non_clifford.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("anticommutator"), "{}", stderr(&out));

    let missing = Path::new("does_not_exist.json");
    let out = run(&["reduce", "--input", missing.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn outputs_can_be_written_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = run(&["table", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        include_str!("../src/data/table1_golden.csv")
    );
}
