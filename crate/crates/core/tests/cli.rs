//! The binary end to end: exit codes, determinism, JSON exchange.

use std::process::Command;

use toric_forms::qseries::{QSeries, SeriesJson};

fn toricmf(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toricmf")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn series_weight_one() {
    let (code, text) = toricmf(&["series", "--level", "5", "--weight", "1", "--a", "1", "--order", "5"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("3/10 + q + q^2 + "), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(toricmf(&["series", "--level", "5"]).0, 2);
    assert_eq!(toricmf(&["nonsense"]).0, 2);
    assert_eq!(toricmf(&["verify", "hecke", "--level", "5", "--p", "5"]).0, 2);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["--json", "pairs", "--level", "5", "--weight", "2", "--order", "8"];
    let (c1, a) = toricmf(&args);
    let (c2, b) = toricmf(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let j: SeriesJson = serde_json::from_value(v["series"].clone()).unwrap();
        let s = QSeries::from_json(&j).unwrap();
        assert_eq!(s.to_json(), j);
    }
}

#[test]
fn verify_reports() {
    let (code, text) = toricmf(&["--json", "verify", "main", "--level", "7", "--weight", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["check"], "main");
    assert_eq!(v["verdict"], true);
    assert!(v["elapsed"].is_number());
    assert_eq!(toricmf(&["verify", "abcd", "--pmax", "13"]).0, 0);
    assert_eq!(toricmf(&["verify", "firstapprox", "--dmax", "6"]).0, 0);
}

#[test]
fn verify_all_fast() {
    let (code, text) = toricmf(&["--fast", "--json", "verify", "all"]);
    assert_eq!(code, 0, "{text}");
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 12);
}
