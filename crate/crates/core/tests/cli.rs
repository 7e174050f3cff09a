//! End-to-end checks of the command-line interface: exit codes, JSON shape,
//! and atomic report output.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multconj"))
}

#[test]
fn check_clean_ideal_exits_zero_with_json() {
    let out = bin()
        .args(["check", "--ideal", "x1^2, x1*x2, x2^3", "-n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["e"], "4");
    assert_eq!(v["s"], 2);
    assert_eq!(v["conj2_holds"], true);
    assert_eq!(v["counterexample_candidate"], false);
}

#[test]
fn parse_error_exits_one() {
    let out = bin()
        .args(["check", "--ideal", "x1^^2", "-n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn variable_out_of_range_exits_one() {
    let out = bin()
        .args(["hilbert", "--ideal", "x5", "-n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hilbert_reports_exact_invariants() {
    let out = bin()
        .args(["hilbert", "--ideal", "x1*x2, x2*x3, x1*x3", "-n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["codim"], 2);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["multiplicity"], "3");
    assert_eq!(v["numerator"][0], "1");
}

#[test]
fn betti_methods_agree_and_bad_method_fails() {
    let oracle = bin()
        .args(["betti", "--ideal", "x1^2, x1*x2, x2^2", "-n", "2", "--method", "oracle"])
        .output()
        .unwrap();
    let ek = bin()
        .args(["betti", "--ideal", "x1^2, x1*x2, x2^2", "-n", "2", "--method", "ek"])
        .output()
        .unwrap();
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(oracle.stdout, ek.stdout);

    let bad = bin()
        .args(["betti", "--ideal", "x1", "-n", "1", "--method", "nope"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn det_requires_one_input_form() {
    let neither = bin().args(["det"]).output().unwrap();
    assert_eq!(neither.status.code(), Some(1));

    let ok = bin().args(["det", "--u", "2,3;2,2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["primal"]["e"], "14");
    assert_eq!(v["primal"]["upper_holds"], true);

    let invalid = bin().args(["det", "--u", "1,1;2,2"]).output().unwrap();
    assert_eq!(invalid.status.code(), Some(1));
}

#[test]
fn regseq_trace_is_reported() {
    let out = bin()
        .args([
            "regseq", "--big-m", "3,5", "--small-m", "2,5", "-s", "2", "-e", "6",
            "--degrees", "4,2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["steps"][0]["profile"]["big_m"], serde_json::json!([4, 7, 9]));
}

#[test]
fn powers_scan_reports_ratios() {
    let out = bin()
        .args(["powers", "--ideal", "x1, x2", "-n", "2", "--kmax", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scan"]["s"], 2);
    assert_eq!(v["ratios"]["all_le_one"], true);
}

#[test]
fn out_flag_writes_atomically() {
    let path = std::env::temp_dir().join("multconj-cli-out.json");
    let _ = std::fs::remove_file(&path);
    let out = bin()
        .args(["hilbert", "--ideal", "x1^2", "-n", "1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["multiplicity"], "2");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn cap_env_override_is_honored() {
    // A tiny lattice cap forces the homology route to refuse the work.
    let out = bin()
        .args(["betti", "--ideal", "x1^2, x1*x2, x2^3", "-n", "2", "--method", "oracle"])
        .env("MULTCONJ_CAP_LCM", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
