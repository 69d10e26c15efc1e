use std::process::{Command, Output};

use fnc_forge::census::{ArcReport, SuiteItem};
use fnc_forge::sepcurves::FncReport;
use fnc_forge::superelliptic::CorollaryReport;
use fnc_forge::GenusReport;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fnc-forge")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses every line into `T` and checks it serializes back to the same bytes.
fn round_trip<T: DeserializeOwned + Serialize>(text: &str) -> Vec<T> {
    text.lines()
        .map(|line| {
            let v: T = serde_json::from_str(line).unwrap_or_else(|e| panic!("{e}: {line}"));
            let back: serde_json::Value = serde_json::to_value(&v).unwrap();
            assert_eq!(back, serde_json::from_str::<serde_json::Value>(line).unwrap());
            v
        })
        .collect()
}

#[test]
fn fermat_over_f4_is_nonclassical() {
    let out = stdout(&["curve", "fnc", "--field", "2^1:2", "--f", "x^3", "--g", "y^3+1"]);
    let r: Vec<FncReport> = round_trip(&out);
    assert_eq!(r[0].divisibility_verdict, Some(true));
    assert_eq!(r[0].mills_verdict, Some(true));
    assert!(r[0].method_agreement);
}

#[test]
fn classical_curve_reports_false_but_exits_zero() {
    let out = stdout(&["curve", "fnc", "--field", "5", "--f", "x^2", "--g", "y^3", "--method", "divisibility"]);
    let r: Vec<FncReport> = round_trip(&out);
    assert_eq!(r[0].divisibility_verdict, Some(false));
}

#[test]
fn reports_round_trip() {
    let g: Vec<GenusReport> = round_trip(&stdout(&["super", "genus", "--field", "2^1:2", "--n", "3", "--f", "x^2+x"]));
    assert_eq!(g[0].genus, 1);
    let c: Vec<CorollaryReport> = round_trip(&stdout(&["super", "checks", "--field", "2^1:2", "--n", "3", "--f", "x^2+x"]));
    assert!(c[0].all_pass());
    let a: Vec<ArcReport> = round_trip(&stdout(&[
        "arc", "check", "--field", "2^1:3", "--super", "7:x^6+x^5+x^4+x^3+x^2+x+1", "--d", "7",
    ]));
    assert!(a[0].is_arc && !a[0].is_complete);
    assert_eq!(a[0].points.len(), 21);
}

#[test]
fn point_count_inputs_agree() {
    let a = stdout(&["points", "count", "--field", "2^1:2", "--curve", "y^3 = x^2 + x"]);
    let b = stdout(&["points", "count", "--field", "2^1:2", "--super", "3:x^2+x"]);
    assert_eq!(a, b);
    assert_eq!(a.trim(), r#"{"N":9,"affine":8,"infinity":1}"#);
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let a = stdout(&["census", "verify-paper"]);
    let b = stdout(&["--jobs", "1", "census", "verify-paper"]);
    assert_eq!(a, b);
    let items: Vec<SuiteItem> = round_trip(&a);
    assert_eq!(items.len(), 21);
    assert!(items.iter().all(|i| i.passed));
}

#[test]
fn negative_control_fails_only_the_hermitian_item() {
    let out = run(&["--format", "text", "census", "verify-paper", "--hermitian-f", "x^2+x+2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 1, "{text}");
    assert!(failed[0].contains("Hermitian"));
}

#[test]
fn census_is_deterministic() {
    let args = ["--format", "csv", "census", "run", "--field", "5", "--mode", "exhaustive"];
    let a = stdout(&args);
    let b = stdout(&[&["--jobs", "2"], &args[..]].concat());
    assert_eq!(a, b);
    assert!(a.starts_with("N,checks_pass,d,f,genus,hvh_holds,irreducibility,n,q,smooth_plane\n"));
    assert_eq!(a.lines().count(), 1 + 35);
}

#[test]
fn bad_input_exits_two_before_work() {
    for args in [
        &["field", "info", "--field", "6"][..],
        &["field", "info", "--field", "2^0"],
        &["curve", "fnc", "--field", "5", "--f", "x^", "--g", "y"],
        &["census", "run", "--field", "3^1:2", "--mode", "exhaustive"],
        &["points", "count", "--field", "5", "--super", "x^2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
}

#[test]
fn failed_check_exits_one() {
    // the Mills identity fails for (x^3 − x)x over F_3
    let out = run(&["mvsp", "mills", "--field", "3", "--f", "(x^3-x)*x"]);
    assert_eq!(out.status.code(), Some(1));
}
