//! End-to-end tests of the `pushkit` binary: documented examples, exit
//! codes, diagnostics, and the map files it writes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn file(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn pushkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pushkit"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const DIRECTED_SQUARE: &str = "oriented 4 4\n0 1\n1 2\n2 3\n3 0\n";
const UNBALANCED_SQUARE: &str = "oriented 4 4\n0 1\n1 2\n2 3\n0 3\n";
const TRIANGLE: &str = "graph 3 3\n0 1\n0 2\n1 2\n";

#[test]
fn push_matches_the_documented_example() {
    let dir = scratch("push");
    let g = file(&dir, "c4dir.txt", DIRECTED_SQUARE);
    let out = pushkit(&["push", g.to_str().unwrap(), "--set", "0,2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "oriented 4 4\n0 3\n1 0\n2 1\n3 2\n");
}

#[test]
fn equiv_separates_the_two_squares_and_accepts_a_push() {
    let dir = scratch("equiv");
    let a = file(&dir, "c4dir.txt", DIRECTED_SQUARE);
    let b = file(&dir, "c4non.txt", UNBALANCED_SQUARE);
    let out = pushkit(&["equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "NOT-EQUIVALENT mismatch at edge (2, 3)\n");

    let pushed = pushkit(&["push", a.to_str().unwrap(), "--set", "1"]);
    let p = file(&dir, "pushed.txt", &stdout_of(&pushed));
    let out = pushkit(&["equiv", a.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("EQUIVALENT "));
}

#[test]
fn classes_counts_the_complete_graph_on_four_vertices() {
    let dir = scratch("classes");
    let k4 = file(&dir, "k4.txt", "graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = pushkit(&["classes", k4.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "8\n");
}

#[test]
fn malformed_input_exits_two_and_names_the_line() {
    let dir = scratch("diag");
    let bad = file(&dir, "bad.txt", "oriented 3 2\n0 1\n0 9\n");
    let out = pushkit(&["push", bad.to_str().unwrap(), "--set", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 3"), "diagnostic was: {stderr}");
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = scratch("budget");
    let a = file(&dir, "c4non.txt", UNBALANCED_SQUARE);
    let b = file(&dir, "c4dir.txt", DIRECTED_SQUARE);
    let out = Command::new(env!("CARGO_BIN_EXE_pushkit"))
        .args(["hom-search", a.to_str().unwrap(), b.to_str().unwrap()])
        .env("PUSHKIT_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hom_check_reads_a_mapping_file() {
    let dir = scratch("homcheck");
    let a = file(&dir, "c4dir.txt", DIRECTED_SQUARE);
    let b = file(&dir, "c4non.txt", UNBALANCED_SQUARE);
    let m = file(&dir, "map.txt", "0,0\n1,1\n2,0\n3,1\n");
    let out = pushkit(&[
        "hom-check",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--map",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "PUSHABLE {2, 3}\n");

    let out = pushkit(&[
        "hom-check",
        b.to_str().unwrap(),
        a.to_str().unwrap(),
        "--map",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "NOT-PUSHABLE\n");
}

#[test]
fn gadget_writes_a_parseable_json_map() {
    let dir = scratch("gadget");
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let json_path = dir.join("map.json");
    let out = pushkit(&[
        "gadget",
        k3.to_str().unwrap(),
        "--k",
        "1",
        "--map",
        json_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(doc["original_count"], 3);
    let edges = doc["edges"].as_object().unwrap();
    assert_eq!(edges.len(), 3);
    let even = edges["0-1"]["even"].as_array().unwrap();
    assert_eq!(even.len(), 5);
    assert_eq!(even.first().unwrap(), 0);
    assert_eq!(even.last().unwrap(), 1);
}

#[test]
fn signed_translation_round_trips_on_disk() {
    let dir = scratch("signed");
    let g = file(&dir, "c4dir.txt", DIRECTED_SQUARE);
    let signed = pushkit(&["to-signed", g.to_str().unwrap()]);
    assert!(signed.status.success());
    let s = file(&dir, "signed.txt", &stdout_of(&signed));
    let back = pushkit(&["to-oriented", s.to_str().unwrap()]);
    assert!(back.status.success());
    assert_eq!(stdout_of(&back), DIRECTED_SQUARE);
}

#[test]
fn the_triangle_gadget_has_girth_eight() {
    let dir = scratch("girth");
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let gadget = pushkit(&["gadget", k3.to_str().unwrap(), "--k", "1"]);
    let g = file(&dir, "gadget.txt", &stdout_of(&gadget));
    let out = pushkit(&["girth", g.to_str().unwrap()]);
    assert_eq!(stdout_of(&out), "8\n");
    let out = pushkit(&["girth", g.to_str().unwrap(), "--unbalanced"]);
    assert_eq!(stdout_of(&out), "8\n");
}

#[test]
fn verify_critical_confirms_the_small_witness() {
    let dir = scratch("critical");
    let w = file(
        &dir,
        "w.txt",
        "oriented 7 9\n0 4\n0 5\n0 6\n1 5\n2 6\n3 4\n4 1\n5 2\n6 3\n",
    );
    let uc4 = file(&dir, "uc4.txt", UNBALANCED_SQUARE);
    let out = pushkit(&[
        "verify-critical",
        w.to_str().unwrap(),
        uc4.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("whole graph: no homomorphism\n"));
    assert!(text.ends_with("CRITICAL\n"));
    assert_eq!(text.matches(": found").count(), 9);
}

#[test]
fn verify_reduction_agrees_on_both_legs() {
    let dir = scratch("reduction");
    let k3 = file(&dir, "k3.txt", TRIANGLE);
    let out = pushkit(&["verify-reduction", k3.to_str().unwrap(), "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("colorable: yes"));
    assert!(text.contains("homomorphism: found"));
    assert!(text.ends_with("AGREE\n"));
}
