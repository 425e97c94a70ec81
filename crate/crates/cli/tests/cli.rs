use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn jlimits(args: &[&str], input: &str, dir: &Path) -> Output {
    let path = dir.join("input.json");
    std::fs::write(&path, input).unwrap();
    Command::new(env!("CARGO_BIN_EXE_jlimits"))
        .args(args.iter().map(|a| a.replace("{input}", path.to_str().unwrap()).replace("{dir}", dir.to_str().unwrap())))
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn classify_rotation_block() {
    let dir = tempfile::tempdir().unwrap();
    let out = jlimits(&["classify", "{input}", "--set", "J"], r#"{"blocks":[{"lambda":{"im":1},"size":3}],"vector":[5,-2,0]}"#, dir.path());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["description"], "ℂ × {2i, -2, -2i, 2} × {0}");
    assert_eq!(r["result"]["factors"][1]["type"], "rotation");
    assert!(r["warnings"][0].as_str().unwrap().contains("odd"));
}

#[test]
fn expanding_block_fills_space() {
    let dir = tempfile::tempdir().unwrap();
    let out = jlimits(&["classify", "{input}"], r#"{"blocks":[{"lambda":2,"size":2}]}"#, dir.path());
    let r = report(&out);
    assert_eq!(r["description"], "ℂ^2");
    let out = jlimits(&["classify", "{input}", "--vector", "[1,0]"], r#"{"blocks":[{"lambda":2,"size":2}]}"#, dir.path());
    assert_eq!(report(&out)["result"], serde_json::json!({"kind": "empty"}));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = jlimits(&["classify", "{input}"], r#"{"blocks":[{"lambda":0.5,"size":1}]}"#, dir.path());
    assert_eq!(bad.status.code(), Some(1));
    let mismatch = jlimits(&["classify", "{input}", "--vector", "[1]"], r#"{"blocks":[{"lambda":1,"size":2}]}"#, dir.path());
    assert_eq!(mismatch.status.code(), Some(1));
    let torus = r#"{"blocks":[{"lambda":{"re":"3/5","im":"4/5"},"size":1},{"lambda":{"re":"5/13","im":"12/13"},"size":1}],"vector":[1,1]}"#;
    let lax = jlimits(&["classify", "{input}", "--set", "L"], torus, dir.path());
    assert_eq!(lax.status.code(), Some(0));
    let warning = report(&lax)["warnings"][0].as_str().unwrap().to_string();
    assert!(warning.contains("3/5+4/5i") && warning.contains("5/13+12/13i"), "{warning}");
    let strict = jlimits(&["classify", "{input}", "--set", "L", "--strict"], torus, dir.path());
    assert_eq!(strict.status.code(), Some(2));
    let not_in = jlimits(&["witness", "{input}", "--target", "[0,1,0]"], r#"{"blocks":[{"lambda":1,"size":3}]}"#, dir.path());
    assert_eq!(not_in.status.code(), Some(1));
}

#[test]
fn witness_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = jlimits(
        &["witness", "{input}", "--steps", "200", "--tol", "0.05", "--out", "{dir}"],
        r#"{"blocks":[{"lambda":2,"size":3}],"target":["1/2",0,"-1/4"]}"#,
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verification"]["passed"], true);
    assert_eq!(r["verification"]["all_exact_hits"], true);
    let csv = std::fs::read_to_string(dir.path().join("witness.csv")).unwrap();
    assert!(csv.starts_with("n,k_n,input_residual,output_residual,error_bound\n"));
    assert_eq!(csv.lines().count(), 1 + 198);
}

#[test]
fn oracle_modes() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"blocks":[{"lambda":1,"size":3}],"target":[0,1,0]}"#;
    let out = jlimits(&["oracle", "{input}", "--max-iter", "1000", "--out", "{dir}"], doc, dir.path());
    let r = report(&out);
    assert_eq!(r["reports"][0]["verdict"], "evidence_no");
    assert!(dir.path().join("scan.csv").exists());
    let cov = jlimits(&["oracle", "{input}", "--mode", "coverage", "--max-iter", "100"], r#"{"blocks":[{"lambda":{"im":1},"size":1}]}"#, dir.path());
    assert_eq!(report(&cov)["reports"][0]["coverage"]["occupied_bins"], 4);
    let ball = jlimits(
        &["oracle", "{input}", "--mode", "ball", "--max-iter", "40", "--delta", "0.1", "--epsilon", "0.1"],
        r#"{"blocks":[{"lambda":{"im":1},"size":1}],"vector":[1],"target":[-1]}"#,
        dir.path(),
    );
    assert_eq!(report(&ball)["reports"][0]["transitivity"]["qualifying_count"], 10);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"blocks":[{"lambda":{"re":"3/5","im":"4/5"},"size":2}],"vector":[1,0],"target":[{"re":"-3/5","im":"4/5"},0]}"#;
    let a = jlimits(&["witness", "{input}", "--steps", "300", "--tol", "0.1"], doc, dir.path());
    let b = jlimits(&["witness", "{input}", "--steps", "300", "--tol", "0.1"], doc, dir.path());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}
