//! End-to-end runs of the `nestorw` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn nestorw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nestorw")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nestorw(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn associahedron(dir: &TempDir) -> PathBuf {
    let p = dir.path().join("assoc.hg");
    stdout(&["gen", "associahedron", "2", "-o", s(&p)]);
    p
}

const SQUARE: &str = "vertices: 1 2 3 4\nedge: 1 2\nedge: 2 3\nedge: 3 4\nedge: 4 1\n";

#[test]
fn gen_then_faces() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let out = stdout(&["faces", s(&p)]);
    assert!(out.starts_with("f-vector: (5,5,1)\n"), "{out}");
    assert!(out.contains("  {1,2,3}\n"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["faces", s(&p), "--format", "json"])).unwrap();
    assert!(json.is_object());
    assert!(stdout(&["faces", s(&p), "--format", "dot"]).starts_with("digraph"));
}

#[test]
fn gen_to_stdout_matches_file() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    assert_eq!(stdout(&["gen", "associahedron", "2"]), fs::read_to_string(&p).unwrap());
    let tree = stdout(&["gen", "operahedron", "--tree", "a(b,c)"]);
    assert!(tree.starts_with("vertices:"));
}

#[test]
fn vertices_lists_constructions() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    assert_eq!(stdout(&["vertices", s(&p)]).lines().count(), 5);
}

#[test]
fn rewrite_reaches_normal_form() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let out = stdout(&["rewrite", s(&p), "--from", "3(2(1))"]);
    assert_eq!(out.lines().last(), Some("normal form: 1(2(3))"));
    let out = stdout(&["rewrite", s(&p), "--from", "1(2(3))", "--orient", "promote-larger"]);
    assert_eq!(out.lines().last(), Some("normal form: 3(2(1))"));
}

#[test]
fn poset_dot_shape() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let dot = stdout(&["poset", s(&p), "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 5);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 5);
}

#[test]
fn facial_order_runs() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let out = stdout(&["facial-order", s(&p)]);
    assert!(out.starts_with("constructs: 11\n"));
    assert!(out.ends_with("acyclic: true\n"));
}

#[test]
fn coordinates_csv_rows_sum() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let csv = stdout(&["coordinates", s(&p), "--format", "csv"]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let sum: i64 = row.rsplit(',').take(3).map(|x| x.parse::<i64>().unwrap()).sum();
        assert_eq!(sum, 6, "{row}");
    }
    let ok = stdout(&["coordinates", s(&p), "--mu", "1,2,3"]);
    assert!(ok.contains("strictly along every flip"));
    let bad = stdout(&["coordinates", s(&p), "--mu", "0,0,0"]);
    assert!(bad.contains("not strictly monotone"));
}

#[test]
fn confluence_census() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["confluence", s(&p), "--format", "json"])).unwrap();
    let text = json.to_string();
    assert!(text.contains("b-chain"), "{text}");
    let out = stdout(&["confluence", s(&p)]);
    assert!(out.contains("diagrams b-chain: 1\n"));
    assert!(out.contains("census matches: true\n"));
}

#[test]
fn critical_pairs_lists_shapes() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let out = stdout(&["critical-pairs", s(&p)]);
    assert!(out.contains("B3"));
}

#[test]
fn contextual_square_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "square.hg", SQUARE);
    let out = stdout(&["contextual", s(&p), "--atomize"]);
    assert!(out.starts_with("contextual: false\n"));
    assert!(out.contains("witness: Y="));
    let p = associahedron(&dir);
    assert_eq!(stdout(&["contextual", s(&p)]), "contextual: true\n");
}

#[test]
fn missing_singletons_are_rejected() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "square.hg", SQUARE);
    let out = nestorw(&["contextual", s(&p)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singleton"));
}

#[test]
fn json_and_hg_inputs_agree() {
    let dir = TempDir::new().unwrap();
    let hg = associahedron(&dir);
    let json = dir.path().join("assoc.json");
    stdout(&["gen", "associahedron", "2", "--format", "json", "-o", s(&json)]);
    assert_eq!(stdout(&["faces", s(&hg)]), stdout(&["faces", s(&json)]));
}

#[test]
fn family_check_reports() {
    let out = stdout(&["family-check", "associahedron", "--up-to", "3"]);
    assert!(out.ends_with("associahedron: 3 instances, pass\n"), "{out}");
    let out = nestorw(&["family-check", "hypergraph-family", "--up-to", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parenthesize_round_trip() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    let out = stdout(&["parenthesize", s(&p)]);
    assert_eq!(out.lines().count(), 5);
    for line in out.lines() {
        let (construct, word) = line.split_once("  ").unwrap();
        assert_eq!(stdout(&["parenthesize", s(&p), "--word", word]).trim_end(), construct);
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = associahedron(&dir);
    assert_eq!(nestorw(&["faces", s(&p), "--cap", "2"]).status.code(), Some(2));
    assert_eq!(nestorw(&["poset", s(&p), "--format", "csv"]).status.code(), Some(1));
    assert_eq!(nestorw(&["faces", "/nonexistent.hg"]).status.code(), Some(1));
    assert_eq!(nestorw(&["bogus"]).status.code(), Some(1));
    assert_eq!(nestorw(&["rewrite", s(&p), "--from", "1(2)"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("perm.hg");
    stdout(&["gen", "permutahedron", "3", "-o", s(&p)]);
    for cmd in ["faces", "poset", "confluence", "coordinates", "critical-pairs"] {
        let a = stdout(&[cmd, s(&p), "--format", "json"]);
        assert_eq!(a, stdout(&[cmd, s(&p), "--format", "json"]), "{cmd}");
    }
}
