//! End-to-end checks of the `gengraph` binary: exit codes, output formats
//! and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gengraph")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn positive_answers_exit_zero() {
    assert_eq!(stdout(&["adjacent", "lattice", "1,0", "0,1"]), "true\ndet: 1\n");
    assert!(stdout(&["adjacent", "torsion", "--n", "6", "5,1", "-7,2"]).starts_with("true\n"));
    assert!(stdout(&["adjacent", "free", "x1 x2", "x2"]).starts_with("true"));
}

#[test]
fn negative_answers_exit_one() {
    assert_eq!(code(&["adjacent", "lattice", "2,0", "0,1"]), Some(1));
    assert_eq!(code(&["nonisolated", "lattice", "2,4"]), Some(1));
    assert_eq!(code(&["adjacent", "free", "x1 x1", "x2"]), Some(1));
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(code(&["bogus"]), Some(2));
    assert_eq!(code(&["lift", "2,4"]), Some(2));
    assert_eq!(code(&["adjacent", "torsion", "1,0", "0,1"]), Some(2));
    assert_eq!(code(&["adjacent", "lattice", "1;0", "0,1"]), Some(2));
    assert_eq!(code(&["nielsen-reduce", "x3", "x1"]), Some(2));
    let out = run(&["lift", "2,4"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn resource_limits_exit_three() {
    assert_eq!(code(&["distance", "0,1", "3,5", "--box", "100000"]), Some(3));
    assert_eq!(code(&["finite-graph", "40", "40", "--cap", "10"]), Some(3));
}

#[test]
fn help_and_version_exit_zero() {
    assert!(stdout(&["--help"]).contains("fib-pair"));
    assert!(stdout(&["--version"]).contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn json_lines_start_with_command() {
    let text = stdout(&["--json", "lift", "3,5"]);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(value["command"], "lift");
    assert_eq!(value["length"], 8);
    assert!(text.starts_with("{\"command\":\"lift\""));
}

#[test]
fn every_subcommand_runs() {
    let dir = std::env::temp_dir().join(format!("gengraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("g.dot");
    let csv = dir.join("g.csv");
    let ball = dir.join("ball.dot");
    let (dot_s, csv_s, ball_s) = (dot.to_str().unwrap(), csv.to_str().unwrap(), ball.to_str().unwrap());
    for args in [
        vec!["nonisolated", "torsion", "--n", "4", "2,1"],
        vec!["neighbors", "3,5"],
        vec!["common-neighbor", "--n", "2", "1,0", "3,0"],
        vec!["path", "torsion", "--n", "2", "1,0", "3,0"],
        vec!["path", "lattice", "-89,144"],
        vec!["path", "lattice", "2,7", "-5,3"],
        vec!["distance", "0,1", "3,5"],
        vec!["fib-pair", "3"],
        vec!["chain", "144", "89"],
        vec!["factor", "13", "8", "5", "3"],
        vec!["nielsen-reduce", "x1 x2 x1", "x2^-1 x1^-1"],
        vec!["finite-graph", "2", "6", "--diameter", "--dot", dot_s, "--csv", csv_s],
        vec!["export-dot", "0,1", "--out", ball_s],
        vec!["selftest", "--rounds", "20"],
    ] {
        stdout(&args);
    }
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph G {"));
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("a1,b1,a2,b2\n"));
    assert!(std::fs::read_to_string(&ball).unwrap().contains("\"0,1\" -- \"1,0\";"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        vec!["--seed", "11", "selftest", "--rounds", "30"],
        vec!["--json", "path", "lattice", "355,113"],
        vec!["export-dot", "1,1", "--radius", "3", "--box", "4"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
