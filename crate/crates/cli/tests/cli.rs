//! End-to-end tests driving the `r2r` binary.

use serde_json::Value;
use std::process::{Command, Output};

fn r2r(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_r2r"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", stderr(out));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn spectrum_json_n2() {
    let out = r2r(&["spectrum", "--n", "2"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["meta"]["command"], "spectrum");
    assert_eq!(doc["meta"]["parameters"]["n"], 2);
    assert_eq!(
        doc["meta"]["parameters"]["evaluation"],
        serde_json::json!([1, 1])
    );
    let entries = doc["results"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["value"], "1/1");
    assert_eq!(entries[0]["multiplicity"], "1");
    assert_eq!(entries[1]["value"], "0/1");
    assert_eq!(entries[1]["multiplicity"], "1");
    assert_eq!(doc["results"]["states"], "2");
}

#[test]
fn spectrum_csv_golden_n2() {
    let out = r2r(&["spectrum", "--n", "2", "--format", "csv"]);
    assert!(out.status.success());
    let expected = "# command: spectrum\n\
                    # version: 0.1.0\n\
                    # n: 2\n\
                    # evaluation: [1,1]\n\
                    # format: csv\n\
                    lambda,mu,num,den,multiplicity\n\
                    \"[2]\",\"[]\",1,1,1\n\
                    \"[1,1]\",\"[1,1]\",0,1,1\n";
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn evaluation_order_does_not_matter() {
    let a = r2r(&["spectrum", "--evaluation", "1,2"]);
    let b = r2r(&["spectrum", "--evaluation", "2,1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bounds_reports_cutoff_time() {
    let out = r2r(&["bounds", "--n", "1000", "--c", "2", "--t-max", "0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["meta"]["parameters"]["t_star"], 6697.655275757586);
    assert_eq!(doc["results"]["t_star"], 6697.655275757586);
    assert_eq!(doc["results"]["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn bounds_has_exact_column_for_small_decks() {
    let out = r2r(&["bounds", "--n", "5", "--c", "1", "--t-max", "2"]);
    let doc = stdout_json(&out);
    let rows = doc["results"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["l2_exact"], 119.0);
    assert_eq!(rows[0]["largesteig_term"], 16.0);
    assert!(rows[1]["analytic"].as_f64().unwrap() < rows[0]["analytic"].as_f64().unwrap());
}

#[test]
fn bounds_omits_exact_column_for_large_decks() {
    let out = r2r(&[
        "bounds", "--n", "50", "--c", "1", "--t-max", "1", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let row = text.lines().find(|l| l.starts_with("0,")).unwrap();
    assert!(row.starts_with("0,,"), "l2_exact cell must be empty: {row}");
}

#[test]
fn bounds_rejects_tiny_deck() {
    let out = r2r(&["bounds", "--n", "2", "--c", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("cutoff_time"));
}

#[test]
fn profile_matches_frozen_trajectory() {
    let out = r2r(&["profile", "--n", "4", "--t-max", "3"]);
    let doc = stdout_json(&out);
    let rows = doc["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["tv"], 0.9583333333333334);
    assert_eq!(rows[0]["chi2"], 23.0);
    assert_eq!(rows[3]["tv"], 0.17919921875);
    assert_eq!(rows[3]["chi2"], 0.1959991455078125);
}

#[test]
fn profile_multiset_deck() {
    let out = r2r(&["profile", "--evaluation", "2,1", "--t-max", "1"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["meta"]["parameters"]["states"], 3);
    let rows = doc["results"]["rows"].as_array().unwrap();
    assert_eq!(rows[1]["chi2"], 0.2962962962962963);
}

#[test]
fn profile_rejects_excessive_horizon() {
    let out = r2r(&["profile", "--n", "4", "--t-max", "1001"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_all_passes() {
    let out = r2r(&["verify", "--n-max", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("16 checks: 16 passed, 0 failed"), "{text}");
    assert!(!text.contains("fail —"), "{text}");
}

#[test]
fn verify_single_suite() {
    let out = r2r(&["verify", "--suite", "spectra", "--n-max", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("9 checks: 9 passed, 0 failed"), "{text}");
    assert!(!text.contains("bijection"), "{text}");
}

#[test]
fn verify_rejects_zero_n_max() {
    let out = r2r(&["verify", "--n-max", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn simulate_small_deck_compares_to_exact() {
    let out = r2r(&[
        "simulate", "--n", "4", "--t", "6", "--trials", "40000", "--seed", "11",
    ]);
    let doc = stdout_json(&out);
    let comparison = &doc["results"]["comparison"];
    assert!(comparison["tv_empirical_exact"].as_f64().unwrap() < 0.05);
    assert_eq!(doc["results"]["empirical"].as_array().unwrap().len(), 24);
    assert_eq!(doc["results"]["exact"].as_array().unwrap().len(), 24);
}

#[test]
fn simulate_large_deck_keeps_summaries_only() {
    let out = r2r(&[
        "simulate", "--n", "9", "--t", "3", "--trials", "2000", "--seed", "1",
    ]);
    let doc = stdout_json(&out);
    assert!(doc["results"]["empirical"].is_null());
    assert!(doc["results"]["comparison"].is_null());
    assert!(doc["results"]["mean_fixed_points"].as_f64().unwrap() > 0.0);
}

#[test]
fn simulate_rejects_out_of_cap_deck() {
    let out = r2r(&[
        "simulate", "--n", "13", "--t", "1", "--trials", "10", "--seed", "1",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn missing_required_arguments_exit_2() {
    assert_eq!(exit_code(&r2r(&["spectrum"])), 2);
    assert_eq!(exit_code(&r2r(&["bounds", "--n", "5"])), 2);
    assert_eq!(exit_code(&r2r(&["simulate", "--n", "5"])), 2);
}

#[test]
fn mismatched_n_and_evaluation_exit_2() {
    let out = r2r(&["spectrum", "--n", "3", "--evaluation", "2,2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("sums to 4"));
}

#[test]
fn output_file_lands_in_env_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_r2r"))
        .args([
            "spectrum",
            "--n",
            "3",
            "--format",
            "csv",
            "--output",
            "spec3.csv",
        ])
        .env("R2R_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(out.stdout.is_empty(), "file mode must not write stdout");
    let written = std::fs::read_to_string(dir.path().join("spec3.csv")).unwrap();
    assert!(written.starts_with("# command: spectrum\n"));
    assert!(written.ends_with("\"[2,1]\",\"[2,1]\",0,1,2\n"));
}

#[test]
fn absolute_output_path_ignores_env_directory() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("direct.json");
    let out = Command::new(env!("CARGO_BIN_EXE_r2r"))
        .args(["spectrum", "--n", "2", "--output", target.to_str().unwrap()])
        .env("R2R_OUTPUT_DIR", "/nonexistent-should-be-unused")
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let written = std::fs::read_to_string(&target).unwrap();
    let doc: Value = serde_json::from_str(&written).unwrap();
    assert_eq!(doc["meta"]["command"], "spectrum");
}
