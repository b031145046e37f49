//! End-to-end tests for the `satake` binary: exit codes, line formats,
//! JSON schemas, `--expect` handling, and the LK cache round trip.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary should launch")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process should exit normally")
}

#[test]
fn lk_prints_one_json_object_per_line_with_mu_first() {
    let out = run(&["lk", "--n", "3", "--lambda", "2,1,0"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "{\"mu\":[2,1,0],\"P\":[1]}\n{\"mu\":[1,1,1],\"P\":[1,1]}\n"
    );
}

#[test]
fn lk_json_document_has_schema_and_rows() {
    let out = run(&["lk", "--n", "3", "--lambda", "2,1,0", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    // Key order inside each row is part of the format.
    assert!(text.contains("\"mu\":[1,1,1],\"P\":[1,1]"), "got: {text}");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["schema"], "lk/1");
    assert_eq!(doc["rs"], "GL3");
    assert_eq!(doc["lambda"], serde_json::json!([2, 1, 0]));
    assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn satake_json_matches_hecke_elt_schema_exactly() {
    let out = run(&["satake", "--n", "2", "--lambda", "2,0", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"schema":"hecke-elt/1","rs":"GL2","basis":"c","terms":[{"weight":[1,1],"coeff_v":[[-2,1]]},{"weight":[2,0],"coeff_v":[[-2,1]]}]}"#
    );
}

#[test]
fn satake_plain_mode_lists_orbit_coefficients() {
    let out = run(&["satake", "--n", "2", "--lambda", "2,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("c[1, 1]: q^-1"), "got: {text}");
    assert!(text.contains("c[2, 0]: q^-1"), "got: {text}");
}

#[test]
fn check_report_json_has_pinned_keys_in_order() {
    let out = run(&[
        "cs-check", "--n", "2", "--p", "2", "--mu", "1,0", "--nu", "2,1", "--json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.starts_with(r#"{"schema":"report/1","claim":"#),
        "got: {text}"
    );
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["claim", "params", "pass", "lhs", "rhs", "enumerated", "elapsed"] {
        assert!(doc.get(key).is_some(), "missing key {key} in {text}");
    }
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["params"]["rs"], "GL2");
    assert!(doc["elapsed"].as_f64().is_some());
}

#[test]
fn expect_match_exits_zero() {
    let canonical = stdout(&run(&["lk", "--n", "2", "--lambda", "1,0", "--json"]));
    let out = run(&["lk", "--n", "2", "--lambda", "1,0", "--expect", canonical.trim()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn expect_mismatch_exits_one() {
    let out = run(&[
        "satake", "--n", "2", "--lambda", "1,0", "--expect", r#"{"schema":"nope"}"#,
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("expect mismatch"));
}

#[test]
fn missing_group_selector_is_a_usage_error() {
    let out = run(&["lk", "--lambda", "1,0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn conflicting_group_selectors_are_a_usage_error() {
    let out = run(&["lk", "--rs", "A1", "--n", "2", "--lambda", "1,0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_root_system_label_is_a_usage_error() {
    let out = run(&["lk", "--rs", "Z9", "--lambda", "1"]);
    assert_eq!(code(&out), 2);
    assert!(!stderr(&out).is_empty());
}

#[test]
fn composite_p_is_a_usage_error() {
    let out = run(&[
        "local-check", "--n", "2", "--p", "4", "--lambda", "1,0", "--nu", "1,0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn local_check_passes_with_both_signs() {
    let out = run(&[
        "local-check", "--n", "2", "--p", "3", "--lambda", "2,0", "--nu", "1,1",
        "--both-signs",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn local_check_honors_jobs_flag() {
    let out = run(&[
        "local-check", "--n", "2", "--p", "2", "--lambda", "1,0", "--nu", "1,0",
        "--jobs", "2",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn fplus_check_passes() {
    let out = run(&["fplus-check", "--n", "2", "--nu", "2,0", "--p", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn satake_oracle_check_passes() {
    let out = run(&["satake-oracle-check", "--n", "2", "--lambda", "2,0", "--p", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn kostant_check_passes() {
    let out = run(&["kostant-check", "--rs", "A1", "--deg-max", "6", "--precision", "8"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn id1_check_passes() {
    let out = run(&["id1-check", "--n", "2", "--mu", "1,0", "--precision", "6"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn plancherel_check_passes() {
    let out = run(&["plancherel-check", "--rs", "A1", "--precision", "5", "--deg-max", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
}

#[test]
fn stalks_prints_degree_dimension_pairs() {
    let out = run(&["stalks", "--n", "3", "--lambda", "2,1,0"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "{\"mu\":[2,1,0],\"stalk\":[[-4,1]]}\n{\"mu\":[1,1,1],\"stalk\":[[-4,1],[-2,1]]}\n"
    );
}

#[test]
fn lgamma_reports_value_and_model_criterion() {
    let out = run(&[
        "lgamma", "--n", "2", "--gamma", "1,1", "--p", "2", "--s", "1",
        "--pole-bound", "2", "--json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "lgamma/1");
    assert_eq!(doc["value"], "4");
    assert_eq!(doc["pole"], false);
    assert_eq!(doc["whittaker_model"], true);
    assert_eq!(doc["poles_scanned"], serde_json::json!([0]));
}

#[test]
fn lgamma_flags_poles() {
    let out = run(&[
        "lgamma", "--n", "2", "--gamma", "2,1", "--p", "2", "--s", "1",
        "--pole-bound", "2", "--json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], "pole");
    assert_eq!(doc["pole"], true);
    assert_eq!(doc["whittaker_model"], false);
    assert_eq!(doc["poles_scanned"], serde_json::json!([0, 1]));
}

#[test]
fn lk_cache_round_trips_and_survives_corruption() {
    let dir = std::env::temp_dir().join(format!(
        "satake-cli-cache-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    let _ = std::fs::remove_dir_all(&dir);
    let dir_str = dir.to_str().unwrap();
    let args = ["lk", "--n", "2", "--lambda", "3,0"];

    let first = run_with_env(&args, "SATAKE_CACHE_DIR", dir_str);
    assert_eq!(code(&first), 0, "stderr: {}", stderr(&first));

    let entries: Vec<_> = std::fs::read_dir(&dir)
        .expect("cache dir should exist after first run")
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 1, "expected exactly one cache file");
    let cache_file = &entries[0];
    assert_eq!(cache_file.extension().unwrap(), "json");
    let cached = std::fs::read_to_string(cache_file).unwrap();
    assert!(cached.contains("\"schema\":\"lk-cache/1\""), "got: {cached}");
    assert!(cached.contains("\"rs\":\"GL2\""), "got: {cached}");

    let second = run_with_env(&args, "SATAKE_CACHE_DIR", dir_str);
    assert_eq!(code(&second), 0);
    assert_eq!(stdout(&second), stdout(&first), "cache hit must not change output");

    // A damaged cache entry is ignored and the rows are recomputed.
    std::fs::write(cache_file, "{not json").unwrap();
    let third = run_with_env(&args, "SATAKE_CACHE_DIR", dir_str);
    assert_eq!(code(&third), 0);
    assert_eq!(stdout(&third), stdout(&first));

    let _ = std::fs::remove_dir_all(&dir);
}
