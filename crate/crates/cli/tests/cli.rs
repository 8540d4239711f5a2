use std::process::{Command, Output};

use serde_json::Value;
use weakhopf::report::validate_report_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakhopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_commutator() {
    let o = run(&["--type", "A1", "--dseq", "1|1", "normalize", "E1*F1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "F1*E1 + (q - q^-1)^-1*K1 - (q - q^-1)^-1*Kb1"
    );
}

#[test]
fn normalize_evaluates_at_q() {
    let o = run(&["--type", "A1", "--q", "2", "normalize", "E1*F1"]);
    let text = stdout(&o);
    // 1/(2 - 1/2) = 2/3
    assert!(text.contains("at q = 2: F1*E1 + 2/3*K1 - 2/3*Kb1"), "{text}");
}

#[test]
fn json_and_text_agree() {
    let args = ["--type", "A2", "--dseq", "00|00", "check", "non-hopf"];
    let text = run(&args);
    let mut jargs = args.to_vec();
    jargs.insert(0, "--json");
    let json = run(&jargs);
    assert_eq!(text.status.code(), json.status.code());
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    validate_report_json(&v).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(stdout(&text).ends_with("overall: pass\n"));
    let items = v["items"].as_array().unwrap();
    assert_eq!(stdout(&text).lines().count(), items.len() + 1);
}

#[test]
fn parse_error_exit_code() {
    let o = run(&["--type", "A2", "normalize", "E3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--type", "A2", "normalize", "E1*(F1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--type", "A2", "--dseq", "1|1", "normalize", "E1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn overflow_exit_code() {
    // at L=2 the product E1^2*F1^2 leaves the confluent range
    let o = run(&["--type", "A1", "--bound", "2", "normalize", "E1*E1*F1*F1"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn failed_verification_exit_code() {
    let o = run(&["--type", "A2", "--dseq", "10|11", "check", "automorphism", "--sigma", "2,1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn automorphism_report_passes() {
    let o = run(&["--json", "--type", "A2", "check", "automorphism", "--a", "2,-1/2", "--sigma", "21"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    validate_report_json(&v).unwrap();
}

#[test]
fn delta_counit_antipode() {
    let o = run(&["--type", "A1", "--dseq", "1|1", "delta", "E1"]);
    assert_eq!(stdout(&o).trim(), "E1 ⊗ K1 + 1 ⊗ E1");
    let o = run(&["--type", "A1", "--dseq", "0|0", "delta", "E1"]);
    assert_eq!(stdout(&o).trim(), "E1 ⊗ K1 + J ⊗ E1");
    let o = run(&["--type", "A1", "counit", "2*K1*Kb1 + E1"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["--type", "A1", "antipode", "K1*Kb1"]);
    assert_eq!(stdout(&o).trim(), "J");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"type": "A1", "dseq": "0|0", "json": true}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let o = run(&["--config", c, "normalize", "K1*Kb1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_form"], "J");
    assert_eq!(v["instance"], "A1 0|0");
    let o = run(&["--config", c, "--dseq", "1|1", "normalize", "K1*Kb1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instance"], "A1 1|1");
}

#[test]
fn matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    std::fs::write(&m, "[[2,-1],[-1,2]]").unwrap();
    let o = run(&["--matrix", m.to_str().unwrap(), "check", "rho"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn dims_table() {
    let o = run(&["--json", "--type", "A1", "dims", "--max-len", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // 1, E1, F1, K1, Kb1, J
    assert_eq!(v["total"], 6);
    let o = run(&["--json", "--type", "A1", "dims", "--max-len", "1", "--quotient"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 5);
}

#[test]
fn cache_rebuild_then_info() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["--type", "A1", "--cache-dir", d, "cache", "rebuild"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--json", "--type", "A1", "--cache-dir", d, "cache", "info"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    let o = run(&["--type", "A1", "cache", "info"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn leading_minus_expression() {
    let o = run(&["--type", "A1", "normalize", "-E1*F1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("-F1*E1"));
}
