//! End-to-end tests of the binary: spawn it, check exit codes and output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sexpand"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn validate_good_algebra() {
    let out = run(&["validate", fixture("so3.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("dim 3"));
}

#[test]
fn validate_good_semigroup() {
    let out = run(&["validate", fixture("z2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("order 2"));
}

#[test]
fn validate_rejects_nonassociative_table() {
    let out = run(&["validate", fixture("table_b.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // the failing triple is named in the message
    assert!(stderr(&out).contains("associa"), "stderr: {}", stderr(&out));
}

#[test]
fn validate_rejects_garbage_with_io_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"name\": \"x\", \"table\": [[1,").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["validate", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_z2_so3() {
    let out = run(&["expand", "z2", "so3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("dim 6"));
    assert!(text.contains("killing inertia (0, 6, 0)"));
    assert!(text.contains("chi -6"));
}

#[test]
fn expand_reduce_zero() {
    let out = run(&["expand", "--reduce-zero", "semilattice2", "so3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("dim 3"));

    // z2 has no zero element, so reduction is a semantic failure
    let out = run(&["expand", "--reduce-zero", "z2", "so3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn expand_roundtrip_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2so3.json");
    let out = run(&["expand", "z2", "so3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("dim 6"));
}

#[test]
fn killing_so3() {
    let out = run(&["killing", "so3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("inertia (0, 3, 0)"));
    assert!(text.contains("chi -3"));
}

#[test]
fn discover_so3_to_so4() {
    let out = run(&["discover", "--source", "so3", "--target", "so4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("plan (P, H, Q) = (2, 0, 0)"));
    assert!(text.contains("verified = true"));
}

#[test]
fn enumerate_order_two() {
    let out = run(&["enumerate", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6 commutative semigroups of order 2"));
    let out = run(&["enumerate", "2", "--up-to-iso"]);
    assert!(stdout(&out).contains("3 commutative semigroups of order 2 up to isomorphism"));
}

#[test]
fn mk_z2() {
    let out = run(&["mk", "z2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("M_K ="));
    assert!(text.contains("inertia (2, 0, 0)"));
}

#[test]
fn predict_matches_expand() {
    let out = run(&["predict", "so3", "semilattice2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("M_K inertia (2, 0, 0)"));
    assert!(text.contains("predicted inertia (0, 6, 0)"));
    assert!(text.contains("predicted chi -6"));
}

#[test]
fn resonant_z2_so3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dec.json");
    std::fs::write(
        &path,
        r#"{
  "g_partition": [[2], [0, 1]],
  "s_partition": [[0], [1]],
  "targets": [
    {"p": 0, "q": 0, "r": [0]},
    {"p": 0, "q": 1, "r": [1]},
    {"p": 1, "q": 1, "r": [0]}
  ]
}
"#,
    )
    .unwrap();
    let out = run(&["resonant", "z2", "so3", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("resonant: ok"));
    assert!(text.contains("subalgebra dim 3 of 6"));
}

#[test]
fn certify_nonsimple() {
    let out = run(&["certify-nonsimple", "z2", "so3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ideal of dim 3 inside dim 6"));
    assert!(text.contains("full split: 2 ideals"));

    let out = run(&["certify-nonsimple", "null2", "so3"]);
    assert!(stdout(&out).contains("no full split"));
}

#[test]
fn report_suites() {
    let out = run(&["report", "--suite", "table1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 17);

    let out = run(&["report", "--suite", "case-study"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Table B: rejected"));

    let out = run(&["report", "--suite", "signature-matrix", "--max-order", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["report", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_usage_is_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
