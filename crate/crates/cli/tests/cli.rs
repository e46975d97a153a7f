//! End-to-end tests of the `boolfun` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn boolfun(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolfun"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("failed to spawn boolfun")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "command failed\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_and2() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&boolfun(dir.path(), &["analyze", "bf:v1:n=2:0x8"]));
    for line in [
        "degree=2",
        "relevant_count=2",
        "W=1/2",
        "h=1",
        "maxonomials={1,2}",
        "check.h_le_deg_cubed=true",
    ] {
        assert!(out.contains(line), "missing `{line}` in:\n{out}");
    }
}

#[test]
fn analyze_reports_parse_offset() {
    let dir = tempfile::tempdir().unwrap();
    let out = boolfun(dir.path(), &["analyze", "bf:v1:n=2:0xZ8"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 12"), "stderr: {err}");
}

#[test]
fn construct_golden_tables() {
    let dir = tempfile::tempdir().unwrap();
    let xi2 = stdout(&boolfun(dir.path(), &["construct", "xi", "--d", "2"]));
    assert_eq!(xi2.trim(), "bf:v1:n=4:0x5c3a");
    let chain2 = stdout(&boolfun(
        dir.path(),
        &["construct", "selector-chain", "--d", "2"],
    ));
    assert_eq!(chain2.trim(), "bf:v1:n=3:0xd8");
}

#[test]
fn construct_xi3_file_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xi3.bf");
    let path_str = path.to_str().unwrap();
    stdout(&boolfun(
        dir.path(),
        &["construct", "xi", "--d", "3", "--out", path_str],
    ));
    let report = stdout(&boolfun(dir.path(), &["analyze", path_str]));
    assert!(report.contains("degree=3"));
    assert!(report.contains("relevant_count=10"));

    // Emitted strings re-parse to the identical table.
    let emitted = fs::read_to_string(&path).unwrap();
    let again = stdout(&boolfun(dir.path(), &["analyze", emitted.trim()]));
    assert_eq!(report, again);
}

#[test]
fn construct_compose() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&boolfun(
        dir.path(),
        &[
            "construct",
            "compose",
            "--f",
            "bf:v1:n=2:0x8",
            "--g",
            "bf:v1:n=2:0x6",
        ],
    ));
    let report = stdout(&boolfun(dir.path(), &["analyze", out.trim()]));
    assert!(report.contains("n=4"));
    assert!(report.contains("degree=4"));
}

#[test]
fn verify_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    for (suite, n) in [
        ("claim-wi", Some("2")),
        ("hcube", Some("3")),
        ("hbs", Some("3")),
        ("lemma1-decomposition", Some("3")),
        ("npn-invariance", Some("3")),
        ("composition-multiplicativity", None),
    ] {
        let mut args = vec!["verify", suite];
        if let Some(n) = n {
            args.extend(["--n", n]);
        }
        let out = stdout(&boolfun(dir.path(), &args));
        assert!(out.contains("result=pass"), "suite {suite}:\n{out}");
        assert!(out.contains("failed=0"));
    }
}

#[test]
fn verify_prop1_reports_distribution() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&boolfun(dir.path(), &["verify", "prop1-weight-report", "--n", "2"]));
    assert!(out.contains("report.equal="));
    assert!(out.contains("report.decreased="));
    assert!(out.contains("result=pass"));
}

#[test]
fn verify_unknown_suite_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = boolfun(dir.path(), &["verify", "no-such-suite"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn search_is_cached_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    let out_c = dir.path().join("c.csv");
    stdout(&boolfun(
        dir.path(),
        &["search", "--n", "3", "--out", out_a.to_str().unwrap()],
    ));
    stdout(&boolfun(
        dir.path(),
        &["search", "--n", "3", "--out", out_b.to_str().unwrap()],
    ));
    stdout(&boolfun(
        dir.path(),
        &[
            "search", "--n", "3", "--jobs", "4", "--no-cache", "--out",
            out_c.to_str().unwrap(),
        ],
    ));
    let a = fs::read(&out_a).unwrap();
    assert_eq!(a, fs::read(&out_b).unwrap(), "cached rerun differs");
    assert_eq!(a, fs::read(&out_c).unwrap(), "jobs=4 differs from jobs=1");

    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("n,degree,maxR,maxW_num,maxW_exp,maxH,witness\n"));
    // Degree-2 row at n=3: maxR = 3 (the selector of two variables).
    assert!(text.lines().any(|l| l.starts_with("3,2,3,")), "{text}");
    assert!(dir.path().join(".boolfun-cache").is_dir());
}

#[test]
fn search_degree_filter() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&boolfun(
        dir.path(),
        &["search", "--n", "2", "--degree", "2", "--no-cache"],
    ));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("2,2,2,"));
}

#[test]
fn bounds_reports_minimum_and_neighbors() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&boolfun(dir.path(), &["bounds", "--table", "--dmax", "30"]));
    assert!(out.contains("11,2047/2048,0.9995,13545/2048,6.614"), "{out}");
    assert!(out.contains("min_d=11"));
    assert!(out.contains("min_value_decimal=6.614"));
    assert!(out.contains("value_d12=13705/2048"));
    assert!(out.contains("value_d12_decimal=6.692"));
    assert!(out.contains("note="));
}

#[test]
fn bounds_rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = stdout(&boolfun(dir.path(), &["bounds", "--table", "--dmax", "20"]));
    let b = stdout(&boolfun(dir.path(), &["bounds", "--table", "--dmax", "20"]));
    assert_eq!(a, b);
}

#[test]
fn nmax_env_var_caps_arity() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_boolfun"))
        .args(["construct", "xi", "--d", "4"])
        .env("BF_NMAX", "8")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds the configured maximum 8"), "{err}");
}
