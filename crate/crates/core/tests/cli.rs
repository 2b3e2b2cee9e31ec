//! The `kladder` binary against the corpus files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(rel)
}

fn kladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kladder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_reports_each_error_class() {
    let ok = kladder(&["validate", corpus("valid/g1.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    for (file, kind) in [
        ("ambiguous_square", "AmbiguousSquare"),
        ("source_violation", "SourceViolation"),
        ("missing_square", "MissingSquare"),
        ("not_bijective", "NotBijective"),
        ("cube_failure", "CubeFailure"),
    ] {
        let out = kladder(&[
            "validate",
            corpus(&format!("invalid/{file}.json")).to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(1), "{file}");
        assert!(
            stdout(&out).starts_with(&format!("invalid: {kind}")),
            "{file}"
        );
    }
}

#[test]
fn unreadable_input_is_exit_two() {
    let out = kladder(&["validate", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kladder(&[
        "count",
        corpus("valid/g2.json").to_str().unwrap(),
        "--degree",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn counts() {
    for (file, degree, expected) in [("g2", "2,1", "4"), ("g1", "3,3", "1"), ("g4", "1,1", "2")] {
        let out = kladder(&[
            "count",
            corpus(&format!("valid/{file}.json")).to_str().unwrap(),
            "--degree",
            degree,
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expected, "{file}");
    }
}

#[test]
fn verify_json_is_reproducible() {
    let path = corpus("valid/g3.json");
    let args = ["--json", "verify", path.to_str().unwrap(), "--suite", "all"];
    let first = kladder(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, kladder(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["graph"], "g3");
    assert_eq!(v["reports"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_of_a_corrupted_graph_fails_gensys() {
    let path = corpus("invalid/not_bijective.json");
    let out = kladder(&[
        "--json",
        "verify",
        path.to_str().unwrap(),
        "--suite",
        "gensys",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reports"][0]["status"], "fail");
    assert_eq!(v["reports"][0]["failures"][0]["lhs"], "NotBijective");
}

#[test]
fn census_table() {
    let out = kladder(&[
        "census",
        corpus("valid/g2.json").to_str().unwrap(),
        "--m",
        "1",
        "--level",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("census m=1 level=1"));
    let out = kladder(&[
        "census",
        corpus("valid/g2.json").to_str().unwrap(),
        "--level",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_outputs() {
    let args = [
        "--json",
        "fuzz",
        "--k",
        "2",
        "--vertices",
        "1",
        "--edges-per-color",
        "2,2",
        "--seed",
        "7",
    ];
    let first = kladder(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, kladder(&args).stdout);
    let empty = kladder(&["fuzz", "--count", "0"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(empty.stdout.is_empty());
    let exhausted = kladder(&["fuzz", "--vertices", "3", "--edges-per-color", "2,3"]);
    assert_eq!(exhausted.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&exhausted.stderr).contains("generation exhausted"));
}
