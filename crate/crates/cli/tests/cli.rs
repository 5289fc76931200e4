use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiver-ext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let tasks = report["tasks"].as_array().unwrap();
    assert_eq!(tasks.len(), 11);
    assert!(tasks.iter().all(|t| t["result"]["passed"] == true));
}

#[test]
fn ext2_uses_both_models() {
    let out = run(&["ext2", "S3", "S1"]);
    assert_eq!(out.status.code(), Some(0));
    let t = &json(&out)["tasks"][0];
    assert_eq!(t["result"], 1);
    assert_eq!(t["certificate"]["omega_model"], 1);
    assert_eq!(t["certificate"]["small_model"], 1);
}

#[test]
fn certify_reports_regular_tangent() {
    let out = run(&["certify", "SES1"]);
    assert_eq!(out.status.code(), Some(0));
    let t = &json(&out)["tasks"][0];
    assert_eq!(t["result"]["verdict"], "regular-tangent");
    assert_eq!(t["result"]["bound"], 3);
    assert_eq!(t["result"]["a_d"], 3);
}

#[test]
fn hom_and_meta() {
    let out = run(&["--field", "F101", "hom", "P2", "P3"]);
    let report = json(&out);
    assert_eq!(report["meta"]["field"], "F101");
    assert_eq!(report["meta"]["truncation"]["level"], 2);
    assert_eq!(report["tasks"][0]["result"], 1);
}

#[test]
fn decoy_witness_exits_one() {
    let out = run(&["witness", "M", "S2", "S1_P3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["tasks"][0]["result"], "none");
}

#[test]
fn gate_failure_exits_two() {
    let out = run(&["certify", "GATE"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("quiver-ext-gate-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gate.quiver");
    let src = format!(
        "{}module S2_S1 : dim 1 1 0\nses SPLIT : S2 -> S2_S1 -> S1\n",
        quiver_ext::fixtures::F2
    );
    std::fs::write(&path, src).unwrap();
    let out = run(&["-w", path.to_str().unwrap(), "certify", "SPLIT"]);
    assert_eq!(out.status.code(), Some(2));
    let t = &json(&out)["tasks"][0];
    assert_eq!(t["result"]["verdict"], Value::Null);
    assert_eq!(t["certificate"]["flags"]["uv_ext1_zero"], false);
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["hom", "X", "P2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("X"));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "F100", "check"]).status.code(), Some(2));
    assert_eq!(run(&["euler", "1,2", "1,0,0"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("quiver-ext-parse-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.quiver");
    std::fs::write(&path, "vertex 1 2\narrow a : 2 = 1\n").unwrap();
    let out = run(&["-w", path.to_str().unwrap(), "check"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("2:13") || err.contains("line 2"), "{err}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [&["certify", "SES1"][..], &["verify", "all"][..], &["-w", "f3", "psi", "SES3"][..]] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn text_format_and_out_file() {
    let path = std::env::temp_dir().join(format!("quiver-ext-out-{}.txt", std::process::id()));
    let out = run(&["--format", "text", "--out", path.to_str().unwrap(), "euler", "0,1,0", "1,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("result: -1"), "{text}");
}

#[test]
fn check_reports_algebra_data() {
    let out = run(&["-w", "f3", "check"]);
    let r = &json(&out)["tasks"][0]["result"];
    assert_eq!(r["acyclic"], true);
    assert_eq!(r["gldim_le2"], true);
    assert_eq!(r["relations"][0]["minimal"], true);
    // 4 idempotents, 4 arrows, one length-2 class since ab = cd.
    assert_eq!(r["algebra_dim"], 4 + 4 + 1);
}
