//! End-to-end tests of the `idealpower` binary: golden outputs, exit codes,
//! cache behavior and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_idealpower"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("idealpower-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn hilbert_general_two_vars_golden() {
    let out = run(&[
        "hilbert", "--n", "2", "--d", "3", "--k", "2", "--family", "general", "--prime",
        "32003", "--seed", "1", "--format", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,2,3,4,5,6,1 (top=7)");
}

#[test]
fn hilbert_monomial_ci_golden() {
    let out = run(&[
        "hilbert", "--n", "3", "--d", "2", "--k", "2", "--family", "monomial-ci", "--method",
        "monomial", "--format", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,3,6,10,9,3 (top=6)");
}

#[test]
fn hilbert_json_is_byte_deterministic() {
    let args = [
        "hilbert", "--n", "3", "--d", "2", "--k", "2", "--family", "general", "--prime",
        "32003", "--seed", "1", "--seed", "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("\"schema\":1"));
}

#[test]
fn cache_hit_returns_identical_bytes() {
    let dir = temp_dir("cache");
    let dir_str = dir.to_str().unwrap();
    let args = [
        "hilbert", "--n", "2", "--d", "3", "--k", "1", "--family", "general", "--cache-dir",
        dir_str,
    ];
    let first = run(&args);
    assert!(first.status.success());
    let cache_file = dir.join("cache.jsonl");
    assert!(cache_file.exists(), "cache file written");
    let lines_after_first = std::fs::read_to_string(&cache_file).unwrap().lines().count();
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second), "byte-identical replay");
    let lines_after_second = std::fs::read_to_string(&cache_file).unwrap().lines().count();
    assert_eq!(lines_after_first, lines_after_second, "hit does not extend cache");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_env_variable_is_honoured() {
    let dir = temp_dir("cache-env");
    let out = bin()
        .env("IDEALPOWER_CACHE", &dir)
        .args([
            "hilbert", "--n", "2", "--d", "2", "--k", "1", "--family", "monomial-ci",
            "--method", "monomial",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("cache.jsonl").exists());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn scan_emits_csv_with_header() {
    let out = run(&[
        "scan", "--n", "3", "--d", "1:2", "--k", "1:2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,d,k,verdict,predicted,source"));
    assert_eq!(lines.next(), Some("3,1,1,WLP,WLP,computed"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn scan_workers_do_not_change_output() {
    let seq = run(&["scan", "--n", "3", "--d", "2:4", "--k", "1:3", "--format", "csv"]);
    let par = run(&[
        "scan", "--n", "3", "--d", "2:4", "--k", "1:3", "--format", "csv", "--workers", "4",
    ]);
    assert_eq!(stdout(&seq), stdout(&par));
}

#[test]
fn wlp_text_verdicts() {
    let out = run(&["wlp", "--n", "3", "--d", "9", "--k", "3", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fails"), "{text}");
    assert!(text.contains("28"));
}

#[test]
fn isotypic_report_includes_obstruction() {
    let out = run(&["isotypic", "--d", "9", "--k", "3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["obstruction"]["obstructed"], serde_json::json!(true));
    assert_eq!(json["obstruction"]["degrees"], serde_json::json!([28, 29]));
}

#[test]
fn relation_emits_canonical_term_lists() {
    let out = run(&["relation", "--nvars", "2", "--d", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["f"][0]["exponents"], serde_json::json!([2, 0]));
    assert_eq!(json["f"][1]["coefficient"], serde_json::json!("-1"));
    assert_eq!(json["kernel"][0]["exponents"], serde_json::json!([1, 0]));
}

#[test]
fn explicit_family_via_generators_file() {
    let dir = temp_dir("gens");
    let path = dir.join("gens.json");
    // (x^2, y^2, z^2, xy + xz + yz) as term lists.
    let gens = serde_json::json!([
        [{"exponents": [2, 0, 0], "coefficient": "1"}],
        [{"exponents": [0, 2, 0], "coefficient": "1"}],
        [{"exponents": [0, 0, 2], "coefficient": "1"}],
        [
            {"exponents": [1, 1, 0], "coefficient": "1"},
            {"exponents": [1, 0, 1], "coefficient": "1"},
            {"exponents": [0, 1, 1], "coefficient": "1"}
        ]
    ]);
    std::fs::write(&path, serde_json::to_string(&gens).unwrap()).unwrap();
    let out = run(&[
        "hilbert", "--n", "3", "--d", "2", "--k", "2", "--family", "explicit",
        "--generators-file", path.to_str().unwrap(), "--format", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,3,6,10,5 (top=5)");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn invalid_config_exits_2() {
    // Composite modulus.
    let out = run(&[
        "hilbert", "--n", "2", "--d", "3", "--k", "1", "--family", "general", "--prime", "32001",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown claim id.
    let out = run(&["verify", "--claims", "thm-unknown"]);
    assert_eq!(out.status.code(), Some(2));
    // Bad range.
    let out = run(&["scan", "--n", "3", "--d", "4:2", "--k", "1:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_exceeded_exits_3() {
    let out = run(&[
        "hilbert", "--n", "3", "--d", "2", "--k", "2", "--family", "general",
        "--guard-basis", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passing_claim_exits_0_and_failing_exits_1() {
    let out = run(&["verify", "--claims", "lm-binineq", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("lm-binineq [small]: pass"));
    // The reference-table claim reports the published rows' deviations.
    let out = run(&["verify", "--claims", "thm-conjugate", "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("computed -2"));
}
