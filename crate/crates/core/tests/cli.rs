//! End-to-end runs of the `segre-lab` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let path_str = path.to_str().unwrap();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path_str]);
    let out = lab(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(Path::new(&path).exists());
    path_str.to_string()
}

#[test]
fn generation_and_verification_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = generate(
        &dir,
        "a.json",
        &[
            "--kind", "random", "-n", "2", "-s", "4", "-m", "3", "--seed", "11", "--count", "3",
        ],
    );
    let b = generate(
        &dir,
        "b.json",
        &[
            "--kind", "random", "-n", "2", "-s", "4", "-m", "3", "--seed", "11", "--count", "3",
        ],
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let first = lab(&["verify", &a, "--seed", "11"]);
    let second = lab(&["verify", &a, "--seed", "11", "--sequential"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let report = json(&first);
    assert_eq!(report["instances"].as_array().unwrap().len(), 3);
    assert_eq!(report["totals"]["fail"], 0);
}

#[test]
fn different_seeds_give_different_instances() {
    let dir = TempDir::new().unwrap();
    let a = generate(&dir, "a.json", &["--kind", "random", "--seed", "1"]);
    let b = generate(&dir, "b.json", &["--kind", "random", "--seed", "2"]);
    assert_ne!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn table_and_csv_formats() {
    let dir = TempDir::new().unwrap();
    let x = generate(
        &dir,
        "x.json",
        &[
            "--kind",
            "collinear-cluster",
            "-n",
            "2",
            "-s",
            "3",
            "-m",
            "2",
        ],
    );
    let table = lab(&["verify", &x, "--checks", "main", "--format", "table"]);
    assert_eq!(table.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&table.stdout).contains("pass 1 / fail 0"));
    let csv = lab(&["verify", &x, "--checks", "main", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("row,check,status,detail"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        "{\"field\": \"rational\", \"ambient_dim\": 2",
    );
    assert_eq!(lab(&["verify", &bad]).status.code(), Some(2));
    let zero = write(
        &dir,
        "zero.json",
        r#"{"field":"rational","ambient_dim":1,"points":[{"coords":["0","0"],"mult":"1"}]}"#,
    );
    assert_eq!(lab(&["verify", &zero]).status.code(), Some(2));
    assert_eq!(lab(&["verify"]).status.code(), Some(2));
    assert_eq!(lab(&["reproduce", "9.9"]).status.code(), Some(2));
    assert_eq!(
        lab(&["gen", "--kind", "random", "--field", "prime:4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn guarded_checks_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let x = generate(
        &dir,
        "big.json",
        &[
            "--kind",
            "collinear-cluster",
            "-n",
            "2",
            "-s",
            "6",
            "-m",
            "3",
        ],
    );
    let out = lab(&["verify", &x, "--checks", "cardinality"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["totals"]["skipped"], 1);
}

#[test]
fn parallel_vectors_are_infeasible() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "m.json",
        r#"{"field":"rational","vectors":[["1","0"],["2","0"],["3","0"]]}"#,
    );
    let out = lab(&["partition", &m, "--k", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let report = json(&out);
    assert_eq!(report["outcome"], "infeasible");
    assert_eq!(report["witness"], serde_json::json!([0, 1, 2]));
    assert_eq!(report["witness_rank"], 1);

    let out = lab(&["partition", &m, "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verified"], true);
}

#[test]
fn avoidance_partition_round_trip() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "m.json",
        r#"{"field":"prime:7","vectors":[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"],["1","2","3"]]}"#,
    );
    let out = lab(&[
        "partition",
        &m,
        "--mode",
        "avoidance",
        "--k",
        "3",
        "--p",
        "1",
        "--tail",
        "3",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = json(&out);
    let blocks = report["certificate"]["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 3);
    let mut all: Vec<u64> = blocks
        .iter()
        .flat_map(|b| b.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
        .collect();
    all.sort_unstable();
    assert_eq!(all, vec![0, 1, 2, 3, 4]);
    assert!(!blocks[0]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(3)));
    assert_eq!(report["certificate"]["avoidance"][0]["element"], 3);

    let parallel = write(
        &dir,
        "p.json",
        r#"{"field":"rational","vectors":[["1","0"],["2","0"],["0","1"]]}"#,
    );
    let hyp = lab(&[
        "partition",
        &parallel,
        "--mode",
        "avoidance",
        "--k",
        "2",
        "--p",
        "1",
        "--tail",
        "2",
    ]);
    assert_eq!(hyp.status.code(), Some(4));
    assert_eq!(json(&hyp)["outcome"], "hypothesis-violated");
}

#[test]
fn partition_accepts_instance_files() {
    let dir = TempDir::new().unwrap();
    let x = generate(
        &dir,
        "x.json",
        &["--kind", "example-2.8", "--t", "4", "--k", "3", "--p", "1"],
    );
    let out = lab(&["partition", &x, "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let blocks = report["certificate"]["blocks"].as_array().unwrap();
    assert_eq!(
        blocks
            .iter()
            .map(|b| b.as_array().unwrap().len())
            .sum::<usize>(),
        8
    );
}

#[test]
fn reproduce_scenarios_pass() {
    for args in [
        vec!["reproduce", "2.8"],
        vec!["reproduce", "4.6-sharpness"],
        vec!["reproduce", "5.4-veronese", "-d", "2"],
        vec!["reproduce", "5.6-generic", "--seed", "3"],
    ] {
        let out = lab(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        assert_eq!(json(&out)["totals"]["fail"], 0);
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("r.json");
    let to_file = lab(&["reproduce", "2.8", "--out", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let to_stdout = lab(&["reproduce", "2.8"]);
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}
