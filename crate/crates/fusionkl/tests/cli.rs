//! End-to-end checks of the command-line interface through the built binary.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fusionkl"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn tensor_tokens() {
    let (code, stdout, _) = run(&["tensor", "--level", "3/1", "V2", "V3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["terms"],
        serde_json::json!([{"kind": "Proj", "r": 4, "mult": 1}])
    );
    // emitted JSON re-parses as an input payload
    let (code2, stdout2, _) = run(&["tensor", "--level", "3/1", stdout.trim(), "V1"]);
    assert_eq!(code2, 0);
    assert_eq!(stdout, stdout2);
}

#[test]
fn tensor_json_payload() {
    let payload = r#"{"terms":[{"kind":"Verma","r":2,"mult":1}]}"#;
    let (code, stdout, _) = run(&["tensor", "--level", "3/1", payload, payload]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["terms"],
        serde_json::json!([
            {"kind": "Verma", "r": 1, "mult": 1},
            {"kind": "Simple", "r": 3, "mult": 1}
        ])
    );
}

#[test]
fn tensor_unsupported_pair_is_a_computation_error() {
    let (code, _, stderr) = run(&["tensor", "--level", "3/1", "L2", "V4"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(stderr.trim()).unwrap();
    assert!(v["error"].as_str().unwrap().contains("L2"));
}

#[test]
fn classify_reports_variant() {
    let (code, stdout, _) = run(&["classify", "--level", "3/7"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["canonical"], serde_json::json!({"p": 3, "q": 1}));
    assert_eq!(v["variant"], "twisted");
    assert_eq!(v["twist"], "-");
}

#[test]
fn tl_delta_vanishes_at_p2() {
    let (code, stdout, _) = run(&["tl", "--level", "2/1", "delta"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["delta"], "0");
}

#[test]
fn quantum_tensor_and_hom() {
    let (code, stdout, _) = run(&["tensor", "--level", "3/1", "T3", "T3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["terms"],
        serde_json::json!([
            {"kind": "ProjQ", "lambda": 0, "mult": 2},
            {"kind": "SimpleQ", "lambda": 2, "mult": 4},
            {"kind": "ProjQ", "lambda": 4, "mult": 1}
        ])
    );
    let (code, stdout, _) = run(&["hom", "--level", "3/1", "T3", "T3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dim"], 2);
}

#[test]
fn functor_image() {
    let (code, stdout, _) = run(&["functor", "--level", "3/1", "P4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["tilting"]["terms"],
        serde_json::json!([{"kind": "ProjQ", "lambda": 1, "mult": 1}])
    );
}

#[test]
fn loewy_and_factors() {
    let (code, stdout, _) = run(&["loewy", "--level", "3/1", "P5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["layers"], serde_json::json!([[5], [1, 7], [5]]));
    let (code, stdout, _) = run(&["factors", "--level", "3/1", "2*P4 + L1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!([
            {"r": 1, "mult": 1},
            {"r": 2, "mult": 2},
            {"r": 4, "mult": 4},
            {"r": 8, "mult": 2}
        ])
    );
}

#[test]
fn kz_reports() {
    let (code, stdout, _) = run(&["kz", "--level", "3/1", "connection"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 2);
    for r in records {
        assert_eq!(r["pass"], true);
        assert!((r["expected"].as_f64().unwrap() + 2.0).abs() < 1e-12);
    }
    // the logarithmic family is rejected, not silently skipped
    let (code, _, stderr) = run(&["kz", "--level", "2/1", "residuals"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("logarithmic"));
}

#[test]
fn selftest_exit_code_reflects_criteria() {
    let (code, stdout, _) = run(&["selftest"]);
    assert_eq!(code, 0);
    let pass_lines = stdout.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(pass_lines, 12);
    assert!(stdout.contains("selftest: 12 passed, 0 failed"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["tensor", "--level", "banana", "V2", "V3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-verb"]);
    assert_eq!(code, 2);
}

#[test]
fn index_cap_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_fusionkl"))
        .args(["factors", "--level", "3/1", "L50"])
        .env("FUSIONKL_MAX_INDEX", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FUSIONKL_MAX_INDEX"));
}

#[test]
fn table_format() {
    let (code, stdout, _) = run(&["tensor", "--level", "3/1", "--format", "table", "P4", "P4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "4*L3 + 2*P5 + P7");
}
