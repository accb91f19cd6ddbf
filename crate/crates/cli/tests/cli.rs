use std::process::{Command, Output};

use serde_json::Value;

fn fourient(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourient")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn triangle_file() -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("fourient-triangle-{}.g", std::process::id()));
    std::fs::write(&path, "# triangle\n3 3\n0 1\n0 2\n1 2\n").unwrap();
    path
}

#[test]
fn tutte_of_triangle_file() {
    let path = triangle_file();
    let out = fourient(&["tutte", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["text"], "x^2 + x + y");
    assert_eq!(v["oracle_agrees"], true);
    assert!(v["tutte"]["terms"].as_array().unwrap().iter().all(|t| t["c"].is_string()));
}

#[test]
fn count_negative_neutral_on_triangle() {
    let path = triangle_file();
    let out = fourient(&["count", "--graph", path.to_str().unwrap(), "--klm", "1", "0", "1", "--cut", "negative", "--cycle", "neutral"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], "12");
    // every fourientation is good, so the count is (2k + l + m)^3 = (23/15)^3
    let out = fourient(&["count", "--graph", "triangle", "--klm", "1/2", "1/3", "1/5"]);
    assert_eq!(json(&out)["count"], "12167/3375");
}

#[test]
fn verify_main_over_default_corpus() {
    let out = fourient(&["verify-main", "--corpus", "default"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 127);
}

#[test]
fn reports_are_deterministic() {
    let args = ["reliability", "--graph", "theta", "--mc", "2000", "5"];
    let (a, b) = (fourient(&args), fourient(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn subcommands_verify() {
    for args in [
        vec!["class-table", "--graph", "theta"],
        vec!["activity", "--graph", "five-vertex"],
        vec!["equivalence", "--graph", "triangle", "--fourientation", "+u-", "--other", "u+-", "--cocycle"],
        vec!["parking", "--graph", "k4"],
        vec!["subparking", "--graph", "theta", "--tree", "0+,1+"],
        vec!["conjecture", "--graph", "outerplanar", "--walk", "0+,1+,2+,3+,4+,8+,5+,10+,6+,11-"],
        vec!["conjecture", "--graph", "k4"],
        vec!["hilbert", "--graph", "theta"],
        vec!["admissible", "--graph", "five-vertex"],
        vec!["corpus"],
    ] {
        let out = fourient(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn theta_subparking_goldens() {
    let v = json(&fourient(&["conjecture", "--graph", "theta", "--tree", "0+,1+"]));
    assert_eq!(v["aci_count"], 9);
    assert_eq!(v["numerator"], serde_json::json!(["1", "2", "1"]));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(fourient(&["count", "--graph", "triangle", "--cut", "bogus"]).status.code(), Some(2));
    assert_eq!(fourient(&["tutte", "--graph", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(fourient(&["frobnicate"]).status.code(), Some(2));
    let bad = std::env::temp_dir().join(format!("fourient-bad-{}.g", std::process::id()));
    std::fs::write(&bad, "3 1\n0 1\n").unwrap();
    assert_eq!(fourient(&["tutte", "--graph", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fourient(&["activity", "--graph", "triangle", "--fourientation", "++"]).status.code(), Some(2));
}
