//! End-to-end checks of the ratsurf binary: exit-code contract, documented
//! output values, file formats, and byte-identical rebuilds.

use std::path::Path;
use std::process::{Command, Output};

fn ratsurf(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratsurf"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    // 0: success.
    assert_eq!(code(&ratsurf(dir, &["bounds", "--q", "9", "--family", "cube"])), 0);
    assert_eq!(code(&ratsurf(dir, &["--help"])), 0);
    assert_eq!(code(&ratsurf(dir, &["--version"])), 0);
    // 3: usage errors — malformed flags and unknown tags.
    assert_eq!(code(&ratsurf(dir, &["bounds", "--q", "9"])), 3);
    assert_eq!(code(&ratsurf(dir, &["bounds", "--q", "9", "--family", "nope"])), 3);
    assert_eq!(code(&ratsurf(dir, &["bounds", "--q", "9", "--family", "homma-kim"])), 3);
    assert_eq!(code(&ratsurf(dir, &["build", "--construction", "nope", "--q", "3"])), 3);
    assert_eq!(code(&ratsurf(dir, &["build", "--construction", "custom", "--q", "3"])), 3);
    assert_eq!(code(&ratsurf(dir, &["frobnicate"])), 3);
    // 1: domain failures — q that is no prime power, q out of a bound's range.
    assert_eq!(code(&ratsurf(dir, &["build", "--construction", "Z-L3", "--q", "6"])), 1);
    assert_eq!(code(&ratsurf(dir, &["bounds", "--q", "4", "--family", "cube"])), 1);
    assert_eq!(code(&ratsurf(dir, &["count", "--curve", "missing.curve"])), 1);
}

#[test]
fn bounds_print_the_documented_values() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let cube = ratsurf(dir, &["bounds", "--q", "9", "--family", "cube"]);
    assert!(stdout(&cube).starts_with("34 "));
    let hk = ratsurf(dir, &["bounds", "--q", "4", "--family", "homma-kim", "--d", "4"]);
    assert!(stdout(&hk).starts_with("14 "));
    assert!(stdout(&hk).contains("exceptional"));
    let cm = ratsurf(dir, &["bounds", "--q", "7", "--family", "cor-major", "--d", "4"]);
    assert!(stdout(&cm).starts_with("23 "));
    let params = ratsurf(dir, &["bounds", "--q", "7", "--family", "quadric-cubic"]);
    assert!(stdout(&params).starts_with("n=50 k=16 delta=22"));
}

#[test]
fn build_writes_matrix_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let out = ratsurf(dir, &["build", "--construction", "Z-L4", "--q", "7"]);
    assert_eq!(code(&out), 0);
    let matrix = std::fs::read_to_string(dir.join("Z-L4-q7.matrix")).unwrap();
    assert!(matrix.starts_with("q=7 n=57 k=12\n"));
    assert_eq!(matrix.lines().count(), 13);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("Z-L4-q7.report.json")).unwrap())
            .unwrap();
    assert_eq!(report["n"], 57);
    assert_eq!(report["k"], 12);
    assert_eq!(report["expected"]["d"]["exact"], 34);
}

#[test]
fn rebuilds_are_byte_identical_end_to_end() {
    let first = tempfile::tempdir().unwrap();
    let second = tempfile::tempdir().unwrap();
    for (construction, q) in [("Z-L4", "7"), ("quadric-m3", "5"), ("Y-F4", "4")] {
        for dir in [first.path(), second.path()] {
            assert_eq!(code(&ratsurf(dir, &["build", "--construction", construction, "--q", q])), 0);
        }
        let name = format!("{construction}-q{q}.matrix");
        let a = std::fs::read(first.path().join(&name)).unwrap();
        let b = std::fs::read(second.path().join(&name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
        let name = format!("{construction}-q{q}.report.json");
        let a = std::fs::read(first.path().join(&name)).unwrap();
        let b = std::fs::read(second.path().join(&name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}

#[test]
fn build_without_a_published_row_still_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = ratsurf(dir.path(), &["build", "--construction", "Z-L3", "--q", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("no published row"));
}

#[test]
fn verify_confirms_published_rows() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    for (construction, q) in [("Z-L3", "4"), ("Y-F4", "3"), ("quadric-m2", "4"), ("Z-L4", "7")] {
        let out = ratsurf(dir, &["verify", "--construction", construction, "--q", q]);
        assert_eq!(code(&out), 0, "{construction} q={q}");
        assert!(stdout(&out).trim_end().ends_with("result: match"));
    }
}

#[test]
fn verify_reports_the_record_improvement() {
    let dir = tempfile::tempdir().unwrap();
    let out = ratsurf(dir.path(), &["verify", "--construction", "Z-L4", "--q", "7"]);
    let report = stdout(&out);
    assert!(report.contains("\"d_exact\": 34"));
    assert!(report.contains("\"improves_best_known\": true"));
}

#[test]
fn verify_handles_custom_systems() {
    let dir = tempfile::tempdir().unwrap();
    let out = ratsurf(
        dir.path(),
        &["verify", "--construction", "custom", "--surface", "quadric", "--degree", "1", "--q", "7"],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("no published row"));
    assert!(text.contains("\"n\": 50"));
    assert!(text.contains("\"k\": 4"));
}

#[test]
fn verify_respects_cap_overrides() {
    let dir = tempfile::tempdir().unwrap();
    // Z-L3 over F_5 resolves at build; caps only bound the engines, so even
    // zeroed-out budgets cannot change a settled verdict.
    let out = ratsurf(
        dir.path(),
        &[
            "verify", "--construction", "Z-L3", "--q", "5", "--exhaustive-cap", "0",
            "--isd-cap", "0", "--witness-cap", "0",
        ],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).trim_end().ends_with("result: match"));
}

#[test]
fn count_reads_curves_and_cross_checks_q() {
    let dir = tempfile::tempdir().unwrap();
    let dir = dir.path();
    let quartic =
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/extremal-quartic-f4.curve");
    let quintic =
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/maximal-quintic-f5.curve");
    let out = ratsurf(dir, &["count", "--curve", quartic]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "14");
    let out = ratsurf(dir, &["count", "--curve", quintic, "--q", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "22");
    let out = ratsurf(dir, &["count", "--curve", quintic, "--q", "7"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn thread_override_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ratsurf"))
        .current_dir(dir.path())
        .env("RATSURF_THREADS", "1")
        .args(["verify", "--construction", "Z-L3", "--q", "3"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
