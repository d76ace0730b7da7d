//! End-to-end tests of the command-line interface: subcommand output,
//! exit codes, input sniffing, and determinism of machine-readable output.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_catalyxis"))
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json_stdout(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).unwrap()
}

const PAIR_ONE_REGION: &str =
    r#"{"p": ["0.45", "0.35", "0.12", "0.08"], "q": ["0.56", "0.21", "0.17", "0.06"]}"#;

#[test]
fn check_reports_order_and_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);
    let doc = json_stdout(&run(&["check", &file]));
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["order"], "incomparable");
    assert_eq!(doc["violations"]["indices"], serde_json::json!([2]));
    assert_eq!(doc["delta"]["fraction"], "3/50");
    assert_eq!(doc["pmax"]["fraction"], "20/23");
}

#[test]
fn check_equal_pair_and_catalyzed_block() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "problem.json",
        r#"{"p": ["0.5", "0.3", "0.2"], "q": ["0.5", "0.3", "0.2"], "r": ["0.7", "0.3"]}"#,
    );
    let doc = json_stdout(&run(&["check", &file]));
    assert_eq!(doc["order"], "equal");
    assert_eq!(doc["delta"]["fraction"], "0");
    assert_eq!(doc["pmax"]["fraction"], "1");
    assert_eq!(doc["catalyzed"]["is_catalyst"], true);
}

#[test]
fn check_accepts_flat_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "problem.csv",
        "0.45, 0.35, 0.12, 0.08\n0.56, 0.21, 0.17, 0.06\n",
    );
    let doc = json_stdout(&run(&["check", &file]));
    assert_eq!(doc["order"], "incomparable");
}

#[test]
fn validation_failures_exit_2_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let bad_sum = write(
        dir.path(),
        "bad_sum.json",
        r#"{"p": ["0.5", "0.6"], "q": ["0.5", "0.5"]}"#,
    );
    let out = run(&["check", &bad_sum]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("does not sum to one"), "{stderr}");

    let bad_entry = write(
        dir.path(),
        "bad_entry.json",
        r#"{"p": ["0.5", "0.5x"], "q": ["0.5", "0.5"]}"#,
    );
    let out = run(&["check", &bad_entry]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("p[1]"), "{stderr}");

    let out = run(&["check", "/nonexistent/problem.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_reports_window_and_exits_3_on_comparable() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);
    let doc = json_stdout(&run(&["bounds", &file]));
    assert_eq!(doc["qubit_window"]["t_lo"]["fraction"], "3/11");
    assert_eq!(doc["qubit_window"]["t_hi"]["fraction"], "17/38");
    assert_eq!(doc["ratio_bounds"]["a"]["fraction"], "8/3");
    assert_eq!(doc["corollary_excludes"], false);

    let comparable = write(
        dir.path(),
        "comparable.json",
        r#"{"p": ["0.25", "0.25", "0.25", "0.25"], "q": ["0.56", "0.21", "0.17", "0.06"]}"#,
    );
    let out = run(&["bounds", &comparable]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["scan", &comparable]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn curve_writes_csv_with_expected_rows() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);
    let out_path = dir.path().join("curve.csv");
    let out = run(&["curve", &file, "--samples", "11", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "t,pmax,delta,catalytic");
    assert_eq!(lines.len(), 12);
    // the t = 0 product state never catalyzes an incomparable pair
    assert!(lines[1].ends_with(",0"));
    // neither does the uniform t = 1/2 catalyst
    assert!(lines[11].ends_with(",0"));
    assert_eq!(lines[8], "0.350000000000,1.00000000000,0,1");

    // unwritable output path is an I/O failure
    let out = run(&["curve", &file, "--out", "/nonexistent/dir/curve.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_finds_one_region_for_the_reference_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);
    let doc = json_stdout(&run(&["scan", &file, "--resolution", "200"]));
    assert_eq!(doc["region_count"], 1);
    let region = &doc["regions"][0];
    assert_eq!(region["lo_refined"], true);
    assert_eq!(region["hi_refined"], true);
    let lo: f64 = region["lo"]["decimal"].as_str().unwrap().parse().unwrap();
    let hi: f64 = region["hi"]["decimal"].as_str().unwrap().parse().unwrap();
    assert!(lo > 0.29 && lo < 0.31, "lo = {lo}");
    assert!(hi > 0.36 && hi < 0.37, "hi = {hi}");
}

#[test]
fn search_lists_catalysts_and_honors_limits() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);
    let doc = json_stdout(&run(&["search", &file, "--k", "2", "--resolution", "20"]));
    assert_eq!(doc["exhausted"], true);
    let catalysts = doc["catalysts"].as_array().unwrap();
    assert!(catalysts.contains(&serde_json::json!(["7/10", "3/10"])));

    // k = 1 has only the trivial scalar candidate
    let doc = json_stdout(&run(&["search", &file, "--k", "1", "--resolution", "20"]));
    assert_eq!(doc["catalyst_count"], 0);

    let out = run(&["search", &file, "--k", "3", "--resolution", "500", "--limit", "100"]);
    assert_eq!(out.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("100"), "{stderr}");

    let out = bin()
        .args(["search", &file, "--k", "2", "--resolution", "20"])
        .env("CATALYXIS_LIMIT", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // an explicit flag wins over the environment
    let out = bin()
        .args(["search", &file, "--k", "2", "--resolution", "20", "--limit", "1000"])
        .env("CATALYXIS_LIMIT", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn machine_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "problem.json", PAIR_ONE_REGION);

    let first = run(&["scan", &file, "--resolution", "100"]);
    let second = run(&["scan", &file, "--resolution", "100"]);
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout);

    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    run(&["curve", &file, "--samples", "101", "--out", out_a.to_str().unwrap()]);
    run(&["curve", &file, "--samples", "101", "--out", out_b.to_str().unwrap()]);
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());
}
