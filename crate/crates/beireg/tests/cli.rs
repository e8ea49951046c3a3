//! Black-box tests of the command-line interface: exit codes, output
//! shapes, determinism, and environment handling.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const P4: &str = "vertices: 4\n1 2\n2 3\n3 4\n";
const TRIANGLE: &str = "vertices: 3\n1 2\n2 3\n1 3\n";

fn graph_file(content: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beireg"))
        .args(args)
        .env_remove("BEIREG_MAX_VARS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_prints_report_and_exits_zero() {
    let f = graph_file(P4);
    let out = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("spine"), "missing spine line:\n{text}");
    assert!(text.contains("estimate"), "missing estimate line:\n{text}");
}

#[test]
fn analyze_json_round_trips() {
    let f = graph_file(P4);
    let out = run(&["analyze", "--json", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: beireg::AnalyzeReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.n, 4);
    assert_eq!(report.spine_length, 3);
    assert_eq!(report.estimate.exact, Some(3));
}

#[test]
fn oracle_prints_bare_regularity() {
    let f = graph_file(P4);
    let out = run(&["oracle", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn oracle_accepts_general_graphs() {
    let f = graph_file(TRIANGLE);
    let out = run(&["oracle", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn oracle_betti_table_lists_the_top_corner() {
    let f = graph_file(P4);
    let out = run(&["oracle", "--betti", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("3\n"), "got:\n{text}");
    let json = text.split_once('\n').unwrap().1;
    let table: beireg::BettiTable = serde_json::from_str(json).unwrap();
    assert_eq!(table.regularity, 3);
    assert_eq!(
        table.entries.iter().map(|e| e.j - e.i).max(),
        Some(3),
        "table corner must realize the regularity"
    );
}

#[test]
fn analyze_rejects_non_trees_with_exit_three() {
    let f = graph_file(TRIANGLE);
    let out = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unreadable_or_malformed_input_is_exit_two() {
    let f = graph_file("vertices: two\n1 2\n");
    assert_eq!(
        run(&["analyze", f.path().to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["oracle", "/nonexistent/tree.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn composite_characteristic_is_exit_two() {
    let f = graph_file(P4);
    let out = run(&["oracle", "--char", "15", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn variable_cap_is_exit_four() {
    let f = graph_file(P4);
    let out = run(&["oracle", "--max-vars", "4", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn env_cap_applies_and_flag_wins() {
    let f = graph_file(P4);
    let path = f.path().to_str().unwrap();
    let capped = Command::new(env!("CARGO_BIN_EXE_beireg"))
        .args(["oracle", path])
        .env("BEIREG_MAX_VARS", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(4));
    let overridden = Command::new(env!("CARGO_BIN_EXE_beireg"))
        .args(["oracle", "--max-vars", "20", path])
        .env("BEIREG_MAX_VARS", "4")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_beireg"))
        .args(["oracle", path])
        .env("BEIREG_MAX_VARS", "zebra")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn gen_is_seed_deterministic() {
    let a = run(&["gen", "--random", "12", "--seed", "7"]);
    let b = run(&["gen", "--random", "12", "--seed", "7"]);
    let c = run(&["gen", "--random", "12", "--seed", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn gen_prufer_decodes_a_star() {
    let out = run(&["gen", "--prufer", "1 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "vertices: 4\n1 2\n1 3\n1 4\n");
}

#[test]
fn gen_output_feeds_analyze() {
    let out = run(&["gen", "--random", "9", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let f = graph_file(&stdout(&out));
    let analyzed = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(analyzed.status.code(), Some(0));
}

#[test]
fn gen_needs_exactly_one_source() {
    assert_eq!(run(&["gen"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--random", "5", "--prufer", "1 1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn export_dot_emits_graphviz() {
    let f = graph_file("vertices: 3\n1 2\n2 3\n");
    let out = run(&["export-dot", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph tree {"), "got:\n{text}");
    assert!(text.contains("  1 -- 2;"), "got:\n{text}");
    assert!(text.trim_end().ends_with('}'), "got:\n{text}");
}

#[test]
fn verify_small_corpus_is_clean() {
    let out = run(&["verify", "--exhaustive-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checks run"), "got:\n{text}");
    assert!(text.contains("failures            0"), "got:\n{text}");
}

#[test]
fn bare_invocation_shows_usage_with_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
}
