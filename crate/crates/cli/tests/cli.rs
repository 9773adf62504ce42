//! End-to-end tests of the `cfp` binary and the batch/check library paths.

use std::fs;
use std::path::Path;
use std::process::Command;

use cfp_cli::{run_batch, run_single, RunOptions};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cfp"))
}

fn write(dir: &Path, name: &str, contents: &str) {
    fs::write(dir.join(name), contents).unwrap();
}

#[test]
fn solve_prints_a_record() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "tiny.txt", "2 2\n1 0\n0 1\n");
    let out = bin()
        .arg("solve")
        .arg(dir.path().join("tiny.txt"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("instance: tiny"));
    assert!(text.contains("size: 2 x 2"));
    assert!(text.contains("efficacy: 1/1 (1.0000)"));
    assert!(text.contains("proven_optimal: true"));
}

#[test]
fn solve_reports_parse_errors_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.txt", "2 2\n1 0\n0 7\n");
    let out = bin()
        .arg("solve")
        .arg(dir.path().join("bad.txt"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("invalid token"), "stderr: {err}");
}

#[test]
fn transposed_instances_report_original_orientation() {
    let dir = tempfile::tempdir().unwrap();
    // 3 machines x 2 parts; solved internally as its 2x3 transpose.
    write(dir.path(), "tall.txt", "3 2\n1 0\n0 1\n0 1\n");
    let out = bin()
        .arg("solve")
        .arg(dir.path().join("tall.txt"))
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("size: 3 x 2"), "stdout: {text}");
    // Three machine labels, two part labels.
    assert!(text.contains("machine_cells: [1, 2, 2]"), "stdout: {text}");
    assert!(text.contains("part_cells: [1, 2]"), "stdout: {text}");
}

#[test]
fn check_agrees_on_small_and_guards_large() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "small.txt", "2 2\n1 0\n0 1\n");
    let out = bin()
        .arg("check")
        .arg(dir.path().join("small.txt"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("agree"));

    let big = format!(
        "20 20\n{}",
        (0..20)
            .map(|i| (0..20)
                .map(|j| if i == j { "1" } else { "0" })
                .collect::<Vec<_>>()
                .join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    );
    write(dir.path(), "big.txt", &big);
    let out = bin()
        .arg("check")
        .arg(dir.path().join("big.txt"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("oracle unavailable (size guard)"));
}

#[test]
fn batch_emits_sorted_csv_and_flags_errors() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "b.txt", "2 2\n1 1\n1 1\n");
    write(dir.path(), "a.txt", "2 2\n1 0\n0 1\n");
    write(dir.path(), "broken.txt", "not an instance\n");
    write(dir.path(), "ignored.csv", "name\nx\n");

    let out = bin().arg("batch").arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "broken.txt must flip the exit");
    let csv = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3, "header + two records: {csv}");
    assert!(lines[1].starts_with("a,2,2,1,1,1.0000,true,"));
    assert!(lines[2].starts_with("b,2,2,1,1,1.0000,true,"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("broken"));
}

#[test]
fn batch_of_only_valid_files_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "2 2\n1 0\n0 1\n");
    let out = bin()
        .arg("batch")
        .arg(dir.path())
        .arg("--output")
        .arg("json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json[0]["name"], "a");
    assert_eq!(json[0]["efficacy_decimal"], "1.0000");
}

#[test]
fn empty_directory_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().arg("batch").arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_incumbent_at_the_optimum_reports_nothing_better() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "tiny.txt", "2 2\n1 0\n0 1\n");
    let out = bin()
        .arg("solve")
        .arg(dir.path().join("tiny.txt"))
        .arg("--seed-incumbent")
        .arg("1.0")
        .arg("--output")
        .arg("csv")
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.lines().nth(1).unwrap().contains(",false,"), "{csv}");
}

#[test]
fn node_limit_flags_unproven_results() {
    let dir = tempfile::tempdir().unwrap();
    let rows: Vec<String> = (0..6).map(|_| "1 1 1 1 1 1 1".to_string()).collect();
    write(
        dir.path(),
        "wide.txt",
        &format!("6 7\n{}\n", rows.join("\n")),
    );
    let (record, _, _) = run_single(
        &dir.path().join("wide.txt"),
        &RunOptions {
            node_limit: Some(2),
            ..RunOptions::default()
        },
    )
    .unwrap();
    assert!(!record.proven_optimal);
    assert_eq!(record.nodes_explored, 2);
}

#[test]
fn batch_library_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "2 3\n1 0 1\n0 1 1\n");
    write(dir.path(), "b.txt", "3 3\n1 1 1\n1 1 1\n1 1 1\n");
    let outcome = run_batch(dir.path(), &RunOptions::default()).unwrap();
    assert!(outcome.errors.is_empty());
    let csv = cfp_cli::render_csv(&outcome.records).unwrap();
    assert_eq!(cfp_cli::parse_csv(&csv).unwrap(), outcome.records);
}
