use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenbiset")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn groups_lists_the_builtin_catalog() {
    let o = run(&["groups"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("name,order,subgroup_classes\n"));
    assert!(text.contains("S3,6,4\n"));
    assert!(text.contains("V4,4,5\n"));
}

#[test]
fn marks_csv_for_s3() {
    let o = run(&["marks", "--group", "S3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "basis,U0[1],U1[2],U2[3],U3[6]");
    assert_eq!(rows[4], "G/U3[6],1,1,1,1");
}

#[test]
fn out_dir_receives_the_file() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["units", "--group", "C3", "--out", d]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("units-C3.json")).unwrap()).unwrap();
    assert_eq!(v["units"].as_array().unwrap().len(), 2);
}

#[test]
fn custom_catalog_groups_are_usable() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("cat.json");
    std::fs::write(&path, r#"[{"name": "Z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}]"#).unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["--catalog", p, "orth", "--group", "Z3", "--kind", "units"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);

    std::fs::write(&path, r#"[{"name": "Bad", "order": 2, "table": [[0,1],[0,1]]}]"#).unwrap();
    assert_eq!(code(&run(&["--catalog", p, "groups"])), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["marks", "--group", "C99"])), 2);
    assert_eq!(code(&run(&["ring-table", "--group", "C2", "--functor", "X(B)"])), 2);
    assert_eq!(code(&run(&["verify", "nothing"])), 2);
    assert_eq!(code(&run(&["orth", "--group", "C2", "--bound", "0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn verify_small_window_passes() {
    let o = run(&["--window", "1,C2", "--max-order", "2", "verify", "biset-identities"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["maxOrder"], 2);
    assert_eq!(v["window"], serde_json::json!(["1", "C2"]));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS biset-identities/"));
}

#[test]
fn corrupted_star_exits_1_with_witness() {
    let o = run(&["--window", "1,C2", "verify", "star", "--inject-fault", "corrupt-star"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    assert!(String::from_utf8_lossy(&o.stderr).contains("witness:"));
}

#[test]
fn matrix_ring_table() {
    let o = run(&["ring-table", "--group", "1", "--functor", "M2(B)"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["compositionTable"].as_array().unwrap().len(), 4);
}
