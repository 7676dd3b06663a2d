use std::process::{Command, Output};

use kreps_cli::Report;

fn kreps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kreps")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Report {
    let out = kreps(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid report")
}

#[test]
fn knot_json_round_trips() {
    let out = kreps(&["knot", "1^3", "-n", "2", "--json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.determinant.as_deref(), Some("3"));
    assert_eq!(report.alexander_poly.as_deref(), Some("1 - t + t^2"));
    assert_eq!(report.rep_count.as_deref(), Some("1"));
    assert_eq!(report.classes.len(), 1);
    let again: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(again, report);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(value["colorings"].as_array().unwrap().iter().all(|c| c["total"].is_string()));
}

#[test]
fn knot_examples() {
    let r = json(&["knot", "1 -2 1 -2", "-n", "3", "--json"]);
    assert_eq!(r.determinant.as_deref(), Some("5"));
    assert_eq!(r.rep_count.as_deref(), Some("2"));
    let r = json(&["knot", "1", "-n", "2", "--json"]);
    assert_eq!(r.determinant.as_deref(), Some("1"));
    assert_eq!(r.rep_count.as_deref(), Some("0"));
}

#[test]
fn surface_examples() {
    let r = json(&["surface", "1^3", "1^6", "-n", "2", "--json"]);
    assert_eq!((r.determinant.as_deref(), r.rep_count.as_deref()), (Some("3"), Some("1")));
    let r = json(&["surface", "1^3 2^3", "--fulltwist", "2", "-n", "3", "--json"]);
    assert_eq!((r.determinant.as_deref(), r.rep_count.as_deref()), (Some("9"), Some("4")));
    let r = json(&["surface", "1^3", "", "-n", "2", "--json"]);
    assert_eq!(r.determinant.as_deref(), Some("3"));
    let r = json(&["surface", "-1^3", "--fulltwist", "-3", "-n", "2", "--json"]);
    assert_eq!(r.determinant.as_deref(), Some("3"));
}

#[test]
fn family_examples() {
    for (n, p, m, count) in [("2", "3", "1", "1"), ("3", "3", "1", "4"), ("2", "5", "1", "2"), ("3", "3", "-2", "4")] {
        let r = json(&["family", "-n", n, "-p", p, "-m", m, "--json"]);
        assert_eq!(r.rep_count.as_deref(), Some(count));
        assert!(r.all_passed());
    }
    let r = json(&["family", "-n", "3", "-p", "3", "-m", "1", "--signs", "-1,1", "--perm", "2,1", "--json"]);
    assert_eq!(r.rep_count.as_deref(), Some("4"));
}

#[test]
fn table_is_default() {
    let out = kreps(&["knot", "1^3", "-n", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("determinant  3"));
    assert!(text.contains("[PASS]"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| kreps(args).status.code();
    assert_eq!(code(&["knot", "1^x", "-n", "2"]), Some(1));
    assert_eq!(code(&["knot", "5", "-n", "2"]), Some(1));
    assert_eq!(code(&["knot"]), Some(1));
    assert_eq!(code(&["family", "-n", "2", "-p", "4", "-m", "1"]), Some(1));
    assert_eq!(code(&["knot", "1^2", "-n", "2"]), Some(2));
    assert_eq!(code(&["surface", "1 2", "2", "-n", "3"]), Some(3));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn enum_cap_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_kreps"))
        .args(["knot", "1^3", "-n", "2", "--json"])
        .env("KREPS_ENUM_CAP", "1")
        .output()
        .unwrap();
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r.classes.is_empty());
    assert!(r.classes_skipped.is_some());
    assert_eq!(r.rep_count.as_deref(), Some("1"));
    let bad = Command::new(env!("CARGO_BIN_EXE_kreps"))
        .args(["knot", "1^3", "-n", "2"])
        .env("KREPS_ENUM_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--seed", "5", "--trials", "8", "--json"];
    let a = kreps(&args);
    let b = kreps(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
