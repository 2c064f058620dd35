//! End-to-end CLI behavior: exit codes, flag handling, output modes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_segcalc")
}

fn sessions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/sessions")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn segcalc")
}

fn scratch_session(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("segcalc-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn parse_errors_exit_with_2() {
    let bad = scratch_session("inverted.seg", "line A k=1 l=1 dual=A\nA[3,1]\n");
    let out = run(&["order", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("a <= b"), "{stderr}");

    let undeclared = scratch_session("undeclared.seg", "line A k=1 l=1 dual=A\nB[0,0]\n");
    let out = run(&["order", undeclared.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("undeclared line B"));
}

#[test]
fn precondition_errors_exit_with_3() {
    // n * d odd: no embedding
    let odd = scratch_session("odd.seg", "line A k=1 l=1 dual=A\nset d=1\nA[0,0]\n");
    let out = run(&["classify", odd.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not embed"));

    let empty = scratch_session("empty.seg", "line A k=1 l=1 dual=A\n");
    let out = run(&["classify", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    // invalid line data for the transfer
    let bad_jl = scratch_session("badjl.seg", "line A k=2 l=3 dual=A\nset d=2\nA[0,0]\n");
    let out = run(&["jl", bad_jl.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
}

#[test]
fn unknown_command_exits_with_2() {
    let session = sessions().join("pair.seg");
    let out = run(&["frobnicate", session.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_with_1() {
    let out = run(&["order", "/nonexistent/session.seg"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn flags_override_session_context() {
    let session = sessions().join("pair.seg");
    let out = run(&["order", session.to_str().unwrap(), "--d", "5", "--eta", "+1"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"d\": 5"));
    assert!(stdout.contains("\"eta\": \"+1\""));

    let out = run(&["order", session.to_str().unwrap(), "--eta=-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"eta\": \"-1\""));
}

#[test]
fn pretty_renders_text() {
    let session = sessions().join("selfdual.seg");
    let out = run(&["classify", session.to_str().unwrap(), "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("classify"));
    assert!(stdout.contains("Dist(A[-1,1])"));
    assert!(!stdout.contains('{'));
}

#[test]
fn pretty_and_json_conflict() {
    let session = sessions().join("pair.seg");
    let out = run(&["order", session.to_str().unwrap(), "--pretty", "--json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_requires_seed() {
    let session = sessions().join("pair.seg");
    let out = run(&["verify", session.to_str().unwrap(), "--random", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_verify_is_deterministic_and_clean() {
    let session = sessions().join("pair.seg");
    let args = [
        "verify",
        session.to_str().unwrap(),
        "--random",
        "200",
        "--seed",
        "11",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let stdout = String::from_utf8_lossy(&first.stdout);
    assert!(stdout.contains("\"instances\": 201"));
    assert!(stdout.contains("\"counterexamples\": 0"));
}

#[test]
fn oracle_errors_exit_with_2() {
    let session = sessions().join("selfdual.seg");
    let oracle = scratch_session("bad.oracle", "A[-1,1] = maybe\n");
    let out = run(&[
        "classify",
        session.to_str().unwrap(),
        "--oracle",
        oracle.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
