use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn rlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlat"))
        .args(args)
        .output()
        .unwrap()
}

fn a6() -> String {
    fixture("a6.rlat").display().to_string()
}

fn json(args: &[&str]) -> Value {
    let out = rlat(args);
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rlat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_fixture() {
    let out = rlat(&["validate", &a6()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn filters_json_lists_five_filters() {
    let v = json(&["filters", &a6(), "--json"]);
    assert_eq!(v["schema"], "rlat/1");
    assert_eq!(v["command"], "filters");
    assert_eq!(v["payload"]["count"], 5);
    let sets: Vec<Vec<String>> = v["payload"]["filters"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| serde_json::from_value(f["elements"].clone()).unwrap())
        .collect();
    assert_eq!(sets[0], ["1"]);
    assert_eq!(sets[4], ["0", "a", "b", "c", "d", "1"]);
}

#[test]
fn json_is_byte_stable() {
    for args in [
        vec!["spectrum", "--json"],
        vec!["topology", "--collection", "spec", "--json"],
        vec!["theorems", "--json"],
    ] {
        let mut full = vec![args[0].to_string(), a6()];
        full.extend(args[1..].iter().map(|s| s.to_string()));
        let full: Vec<&str> = full.iter().map(String::as_str).collect();
        assert_eq!(rlat(&full).stdout, rlat(&full).stdout);
    }
}

#[test]
fn max_is_hausdorff() {
    let v = json(&["topology", &a6(), "--collection", "max", "--json"]);
    assert_eq!(v["payload"]["separation"]["hausdorff"], true);
    assert_eq!(v["payload"]["opens"].as_array().unwrap().len(), 4);
}

#[test]
fn collection_forms() {
    let v = json(&["topology", &a6(), "--collection", "minover:d", "--json"]);
    assert_eq!(
        v["payload"]["points"],
        serde_json::json!([["c", "d", "1"], ["a", "b", "d", "1"]])
    );
    let v = json(&[
        "topology",
        &a6(),
        "--collection",
        "list:1;c,d,1",
        "--dual",
        "--json",
    ]);
    assert_eq!(v["payload"]["topology"], "dual");
    assert_eq!(v["payload"]["points"].as_array().unwrap().len(), 2);
    assert_eq!(
        rlat(&["topology", &a6(), "--collection", "list:d,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rlat(&["topology", &a6(), "--collection", "bogus"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn theorems_exit_code_reflects_failures() {
    let out = rlat(&["theorems", &a6()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL topology.max_hausdorff_iff_spec_normal"));
    assert_eq!(out.status.code(), Some(3));
    let chain = temp_file(
        "chain.rlat",
        "size 2\nelements 0 1\nbottom 0\ntop 1\ntable join\n0 1\n1 1\ntable meet\n0 0\n0 1\ntable odot\n0 0\n0 1\n",
    );
    assert_eq!(
        rlat(&["theorems", chain.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        rlat(&["validate", "/nonexistent.rlat"]).status.code(),
        Some(2)
    );
    let bad = temp_file(
        "bad.rlat",
        "size 2\nelements 0 1\nbottom 0\ntop 1\ntable join\n0 1\n",
    );
    let out = rlat(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line"));

    let text = std::fs::read_to_string(fixture("a6.rlat")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let arrow = lines
        .iter()
        .position(|l| l.trim() == "table arrow")
        .unwrap();
    let mut edited: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    let row = arrow + 2;
    let mut cells: Vec<String> = edited[row].split_whitespace().map(String::from).collect();
    cells[0] = if cells[0] == "b" {
        "c".into()
    } else {
        "b".into()
    };
    edited[row] = cells.join(" ");
    let mutated = temp_file("mutated.rlat", &(edited.join("\n") + "\n"));
    let out = rlat(&["validate", mutated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("arrow table cell"));

    let invalid = temp_file(
        "invalid.rlat",
        "size 2\nelements 0 1\nbottom 0\ntop 1\ntable join\n0 1\n1 1\ntable meet\n0 0\n0 1\ntable odot\n1 0\n0 1\n",
    );
    assert_eq!(
        rlat(&["validate", invalid.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn search_writes_census() {
    let dir = std::env::temp_dir().join(format!("rlat-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.jsonl");
    let out = rlat(&[
        "search",
        "--size",
        "4",
        "--upto",
        "--census-out",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let algebras: Vec<u64> = v["payload"]["sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["algebras"].as_u64().unwrap())
        .collect();
    assert_eq!(algebras, [1, 2, 7]);
    let lines = std::fs::read_to_string(&path).unwrap();
    assert_eq!(lines.lines().count(), 10);
}

#[test]
fn search_cap() {
    let out = rlat(&["search", "--size", "5", "--max-algebras", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn export_roundtrip_and_dot() {
    let out = rlat(&["export", &a6(), "--rlat"]);
    assert_eq!(out.status.code(), Some(0));
    let path = temp_file(
        "roundtrip.rlat",
        &String::from_utf8(out.stdout.clone()).unwrap(),
    );
    assert_eq!(
        rlat(&["export", path.to_str().unwrap(), "--rlat"]).stdout,
        out.stdout
    );

    let hasse = String::from_utf8(rlat(&["export", &a6(), "--dot", "hasse"]).stdout).unwrap();
    assert!(hasse.starts_with("digraph hasse"));
    assert_eq!(hasse.matches("->").count(), 6);
    let spec = String::from_utf8(rlat(&["export", &a6(), "--dot", "spec"]).stdout).unwrap();
    assert_eq!(spec.matches("->").count(), 2);
    assert_eq!(rlat(&["export", &a6()]).status.code(), Some(2));
}

#[test]
fn seed_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_rlat"))
        .args(["theorems", &a6()])
        .env("RLAT_SEED", "nonsense")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_rlat"))
        .args(["theorems", &a6(), "--json"])
        .env("RLAT_SEED", "0x1f")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
