use std::fs;
use std::process::{Command, Output};

use chirahedra::export::patch_from_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chirahedra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_examples() {
    let cases = [
        ("p3", "0,1", "regular {∞,4}_{·,*3}"),
        ("p2", "1,0", "regular {∞,3}^(b)"),
        ("p1", "2,5", "chiral"),
        ("p1", "1,1", "finite regular {3,3}"),
        ("p2", "1,2", "degenerate (vertex multiplicity 2)"),
    ];
    for (family, params, verdict) in cases {
        let o = run(&["classify", "--family", family, "--params", params]);
        assert!(o.status.success(), "{family} {params}");
        assert_eq!(stdout(&o).lines().next(), Some(verdict), "{family} {params}");
    }
}

#[test]
fn classify_json_has_witness() {
    let o = run(&["classify", "--family", "p2", "--params", "1,0", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["witness"].is_object());
}

#[test]
fn build_writes_patch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let o = run(&[
        "build",
        "--family",
        "p1",
        "--params",
        "1,3",
        "--radius",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let patch = patch_from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    let labels: std::collections::BTreeSet<usize> = patch.vertices.iter().map(|v| v.coset).collect();
    assert_eq!(labels.len(), 4);
}

#[test]
fn build_tetrahedron() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = run(&[
        "build",
        "--family",
        "p1",
        "--params",
        "1,1",
        "--radius",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let patch = patch_from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(patch.vertices.len(), 4);
    assert_eq!(patch.edges.len(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["build", "--family", "p2", "--params", "0,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["build", "--family", "p2", "--params", "1,x"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["classify", "--family", "p9", "--params", "1,2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--lemma", "nope", "--family", "p1", "--grid", "1..2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--lemma", "stars", "--family", "p1", "--grid", "2..1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_chirahedra"))
        .args(["classify", "--family", "p1", "--params", "1,3"])
        .env("CHIRAHEDRA_WORD_BOUND", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
}

#[test]
fn verify_exit_status() {
    let o = run(&[
        "verify",
        "--lemma",
        "translation-lattice",
        "--family",
        "p1",
        "--grid",
        "-3..3/1",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["verify", "--lemma", "phi2", "--family", "p66", "--grid", "-2..2/1"]);
    assert!(o.status.success());
    let o = run(&["verify", "--lemma", "covering", "--family", "p3", "--grid", "1..3/1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("census (6, 12, 8)"));
}

#[test]
fn verify_refutation_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = run(&[
        "verify",
        "--lemma",
        "translation-lattice",
        "--family",
        "q46",
        "--grid",
        "1..1/1",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL Q46(1,1)"));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v[0]["outcome"]["status"], "fail");
}

#[test]
fn survey_tsv_and_json() {
    let o = run(&["survey", "--family", "p1", "--grid", "-1..1/1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().nth(3).unwrap().contains("regular {∞,3}^(a)"));
    let o = run(&["survey", "--family", "p3", "--grid", "1..2/1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

fn export(family: &str, params: &str, turns: &str) -> String {
    let dir = tempfile::tempdir().unwrap();
    let patch = dir.path().join("p.json");
    let obj = dir.path().join("p.obj");
    let o = run(&[
        "build",
        "--family",
        family,
        "--params",
        params,
        "--radius",
        "3",
        "--out",
        patch.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = run(&[
        "export",
        "--patch",
        patch.to_str().unwrap(),
        "--turns",
        turns,
        "--out",
        obj.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    fs::read_to_string(obj).unwrap()
}

#[test]
fn obj_polylines() {
    let tet = export("p1", "1,1", "1");
    assert_eq!(tet.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(tet.lines().filter(|l| l.starts_with("f ")).count(), 4);
    let p2 = export("p2", "1,4", "2");
    let lines: Vec<&str> = p2.lines().filter(|l| l.starts_with("l ")).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.split_whitespace().count() == 9));
    let p3 = export("p3", "1,2", "3");
    assert!(p3
        .lines()
        .filter(|l| l.starts_with("l "))
        .all(|l| l.split_whitespace().count() == 10));
}

#[test]
fn export_rejects_zero_turns() {
    let dir = tempfile::tempdir().unwrap();
    let patch = dir.path().join("p.json");
    run(&[
        "build",
        "--family",
        "p1",
        "--params",
        "1,3",
        "--radius",
        "2",
        "--out",
        patch.to_str().unwrap(),
    ]);
    let o = run(&["export", "--patch", patch.to_str().unwrap(), "--turns", "0"]);
    assert!(!o.status.success());
}

#[test]
fn build_is_deterministic() {
    let args = ["build", "--family", "p2", "--params", "1/2,2", "--radius", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
