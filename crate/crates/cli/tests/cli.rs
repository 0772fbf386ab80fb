use std::io::Write;
use std::process::{Command, Output};

use effdom::{parse_dimacs, Graph};
use tempfile::NamedTempFile;

fn effdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effdom"))
        .args(args)
        .env_remove("EFFDOM_VERIFY_BUDGET")
        .output()
        .expect("binary runs")
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const C6_WEIGHTED: &str =
    "c C6 with weights 1..6\np edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n\
n 1 1\nn 2 2\nn 3 3\nn 4 4\nn 5 5\nn 6 6\n";
const P4: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const P7: &str = "p edge 7 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\n";

#[test]
fn solve_weighted_c6() {
    let f = file(C6_WEIGHTED);
    let out = effdom(&["solve", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exists"], true);
    assert_eq!(v["set"], serde_json::json!([1, 4]));
    assert_eq!(v["weight"], 5);
    assert_eq!(v["path"], "exact-fallback");
    let raw = stdout(&out);
    let pos: Vec<usize> = [
        "\"exists\"",
        "\"set\"",
        "\"weight\"",
        "\"path\"",
        "\"diagnostics\"",
    ]
    .iter()
    .map(|k| raw.find(k).unwrap())
    .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{raw}");

    let text = stdout(&effdom(&["solve", f.path().to_str().unwrap()]));
    assert!(
        text.contains("set: 1 4\n") && text.contains("weight: 5\n"),
        "{text}"
    );
}

#[test]
fn solve_unit_weights_and_forced_paths() {
    let f = file(C6_WEIGHTED);
    let p = f.path().to_str().unwrap();
    let unit = effdom(&["solve", p, "--weights", "unit", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&unit.stdout).unwrap();
    assert_eq!(v["weight"], 2);
    let oracle = effdom(&["solve", p, "--force-path", "oracle", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&oracle.stdout).unwrap();
    assert_eq!(
        (v["weight"].as_u64(), v["path"].as_str()),
        (Some(5), Some("oracle"))
    );
    // C6 squared is not chordal
    assert_eq!(code(&effdom(&["solve", p, "--force-path", "chordal"])), 1);
    assert_eq!(code(&effdom(&["solve", p, "--force-path", "bogus"])), 2);
}

#[test]
fn solve_without_ed_exits_3() {
    let f = file("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let out = effdom(&["solve", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).starts_with("exists: no\n"));
}

#[test]
fn check_class_p7() {
    let f = file(P7);
    let p = f.path().to_str().unwrap();
    let out = effdom(&["check-class", p, "--class", "p6-free"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("1 2 3 4 5 6"));
    assert_eq!(code(&effdom(&["check-class", p, "--class", "chordal"])), 0);
    assert_eq!(
        code(&effdom(&["check-class", p, "--class", "claw-free"])),
        2
    );
}

#[test]
fn square_of_p4() {
    let f = file(P4);
    let out = effdom(&["square", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let sq = parse_dimacs(&stdout(&out)).unwrap();
    assert_eq!(sq.graph.m(), 5);
    assert!(!sq.graph.has_edge(0, 3));
}

#[test]
fn square_roundtrip() {
    let g = effdom(&[
        "gen", "--model", "er", "--n", "15", "--p", "0.2", "--seed", "11",
    ]);
    let text = stdout(&g);
    let f = file(&text);
    let sq = parse_dimacs(&stdout(&effdom(&["square", f.path().to_str().unwrap()]))).unwrap();
    let original: Graph = parse_dimacs(&text).unwrap().graph;
    assert_eq!(sq.graph, original.square());
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "gen", "--model", "chordal", "--n", "20", "--p", "0.3", "--seed", "5",
    ];
    let a = effdom(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, effdom(&args).stdout);
    assert_ne!(
        a.stdout,
        effdom(&["gen", "--model", "chordal", "--n", "20", "--p", "0.3", "--seed", "6"]).stdout
    );
    assert_eq!(
        code(&effdom(&["gen", "--model", "er", "--n", "5", "--p", "2"])),
        2
    );
}

#[test]
fn verify_theorems_is_deterministic() {
    let args = [
        "verify-theorems",
        "--theorem",
        "T2",
        "--seed",
        "3",
        "--trials",
        "100",
        "--nmax",
        "10",
        "--json",
    ];
    let a = effdom(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, effdom(&args).stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert_eq!(v["reports"][0]["trials"], 100);
    assert_eq!(v["reports"][0]["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_theorems_exhaustive_all() {
    let out = effdom(&["verify-theorems", "--exhaustive", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("counterexamples: 0").count(), 7);
}

#[test]
fn verify_budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_effdom"))
        .args([
            "verify-theorems",
            "--theorem",
            "T1",
            "--trials",
            "5",
            "--nmax",
            "10",
        ])
        .env("EFFDOM_VERIFY_BUDGET", "8")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn parse_and_io_errors_exit_1() {
    let f = file("p edge 3 1\ne 1 1\n");
    let out = effdom(&["solve", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&effdom(&["square", "/nonexistent/graph.col"])), 1);
    assert_eq!(code(&effdom(&["frobnicate"])), 2);
}
