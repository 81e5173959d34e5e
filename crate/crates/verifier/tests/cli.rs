use std::process::{Command, Output};

fn dimfox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimfox")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    dimfox(args).status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = dimfox(args);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn group_show() {
    let v = json(&["--json", "group", "show", "dihedral:4"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["center"].as_array().unwrap().len(), 2);
    assert_eq!(code(&["group", "show", "dihedral:0"]), 2);
}

#[test]
fn dim3_exit_codes() {
    assert_eq!(code(&["dim3", "--group", "dihedral:4", "--K", "r"]), 0);
    assert_eq!(code(&["dim3", "--group", "quaternion:8", "--K", "a", "--ring", "Z/4"]), 0);
    assert_eq!(code(&["dim3", "--group", "cyclic:4", "--K", "zzz"]), 2);
    assert_eq!(code(&["dim3", "--group", "cyclic:4", "--ring", "Z/1"]), 2);
    let v = json(&["--json", "dim3", "--group", "dihedral:4", "--K", "s", "--nseries", "stretched"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["case"]["nseries"], "stretched");
}

#[test]
fn fox_and_homology() {
    assert_eq!(code(&["fox", "--group", "dihedral:4", "--H", "s", "--K", "r", "--n", "2", "--ring", "Z/2"]), 0);
    assert_eq!(code(&["fox", "--group", "dihedral:4", "--H", "s", "--n", "3"]), 2);
    assert_eq!(code(&["homology", "wedge-kernel", "--invariants", "2,4", "--sub", "1,0"]), 0);
    assert_eq!(code(&["homology", "lemma2.8", "--invariants", "2,4,8", "--m", "4"]), 0);
    assert_eq!(code(&["homology", "exact-sequence", "--group", "dihedral:4", "--K", "r^2"]), 0);
    assert_eq!(code(&["homology", "polynomial-sequence", "--group", "dihedral:4", "--K", "r^2", "--ring", "Z/2"]), 0);
    // Not normal.
    assert_eq!(code(&["homology", "exact-sequence", "--group", "dihedral:4", "--K", "s"]), 2);
}

#[test]
fn counterexample_and_slow_tier() {
    let v = json(&["--json", "example-2-4", "--p", "2", "--r", "1", "--s", "1"]);
    assert_eq!(v["z_in_d3"], true);
    assert_eq!(v["k2g3"], serde_json::json!(["1"]));
    assert_eq!(v["report"]["counterexample"], true);
    // Order 729 exceeds the default cap.
    assert_eq!(code(&["counterexample", "--p", "3", "--r", "1", "--s", "1"]), 2);
    assert_eq!(code(&["counterexample", "--p", "3", "--r", "1", "--s", "1", "--slow-tier"]), 0);
    assert_eq!(code(&["counterexample", "--p", "2", "--r", "2", "--s", "1"]), 2);
}

#[test]
fn corpus_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.json");
    std::fs::write(&path, r#"{"groups": ["cyclic:6", "symmetric:3"], "moduli": [0, 3], "checks": ["dim3", "fox2"]}"#)
        .unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["--json", "corpus", "--config", p, "--jobs", "2"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["mismatches"], 0);
    assert!(v["total"].as_u64().unwrap() > 0);
    assert_eq!(code(&["corpus", "--config", p]), 0);

    std::fs::write(&path, r#"{"groups": [], "counterexamples": [{"p": 2, "r": 1, "s": 1}], "moduli": [0]}"#).unwrap();
    let v = json(&["--json", "corpus", "--config", p]);
    assert_eq!(v["counterexamples"], 1);

    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(code(&["corpus", "--config", p]), 2);
    assert_eq!(code(&["corpus", "--config", "/nonexistent/corpus.json"]), 2);
}
