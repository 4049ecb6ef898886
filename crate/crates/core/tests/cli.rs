use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn rblab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rblab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rblab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(rblab(&["--help"]).status.code(), Some(0));
    assert_eq!(rblab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rblab(&["count", "--n", "x"]).status.code(), Some(1));
    assert_eq!(
        rblab(&["count", "--n", "3", "--weight", "1/0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn file_commands() {
    let rb = write(
        "rb.json",
        r#"{"n":3,"weight":"1","matrix":[["0","1","0"],["0","-1","0"],["0","0","-1"]]}"#,
    );
    let out = rblab(&["classify", &rb]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["label"], "splitting");

    let bad = write(
        "bad.json",
        r#"{"n":2,"weight":"1","matrix":[["0","1"],["1","0"]]}"#,
    );
    assert_eq!(rblab(&["verify", &bad]).status.code(), Some(2));
    assert_eq!(rblab(&["tree", &bad]).status.code(), Some(2));

    let garbled = write("garbled.json", "{\"n\":2,");
    assert_eq!(rblab(&["verify", &garbled]).status.code(), Some(1));
    assert_eq!(
        rblab(&["verify", "/nonexistent/op.json"]).status.code(),
        Some(1)
    );
}

#[test]
fn tree_then_matrix() {
    let sample = write(
        "sample.json",
        r#"{"n":5,"weight":"1","matrix":[
            ["0","1","1","1","0"],["0","-1","-1","-1","0"],["0","0","-1","0","0"],
            ["0","0","0","0","0"],["0","0","0","0","-1"]]}"#,
    );
    let tree_path = scratch("tree.json");
    let out = rblab(&["tree", &sample, "--out", tree_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let tree: Value = serde_json::from_str(&std::fs::read_to_string(&tree_path).unwrap()).unwrap();
    assert_eq!(tree["color"], serde_json::json!(["w", "b", "b", "w", "b"]));

    let out = rblab(&["matrix", tree_path.to_str().unwrap(), "--weight", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let op: Value = serde_json::from_slice(&out.stdout).unwrap();
    // the file's own weight wins
    assert_eq!(op["weight"], "1");
    assert_eq!(
        op["matrix"][1],
        serde_json::json!(["0", "-1", "-1", "-1", "0"])
    );
}

#[test]
fn guards() {
    assert_eq!(rblab(&["enumerate", "--n", "8"]).status.code(), Some(2));
    assert_eq!(rblab(&["oracle", "--n", "5"]).status.code(), Some(2));
    let env = Command::new(env!("CARGO_BIN_EXE_rblab"))
        .args(["enumerate", "--n", "3"])
        .env("RBLAB_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn reports_and_streams() {
    let out = rblab(&["enumerate", "--n", "3", "--class", "inner-splitting"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 32);

    let out = rblab(&["count", "--n", "4", "--unlabeled", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4,inner-splitting,,18"));

    let out = rblab(&["conjecture", "splitting-unlabeled", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["results"]["disclaimer"]
        .as_str()
        .unwrap()
        .contains("not a proof"));

    let certs = scratch("certs.jsonl");
    let out = rblab(&[
        "theorem3",
        "--n",
        "2",
        "--certificates",
        certs.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&certs).unwrap().lines().count(), 12);
}
