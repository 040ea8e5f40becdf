use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primdisk"))
        .args(args)
        .output()
        .expect("failed to spawn primdisk")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/golden")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out), golden(name), "{args:?} vs {name}");
}

#[test]
fn sequence_goldens() {
    assert_golden(&["sequence", "--p", "8", "--q", "3"], "sequence_8_3.txt");
    assert_golden(
        &["sequence", "--p", "8", "--q", "3", "--format", "json"],
        "sequence_8_3.json",
    );
    assert_golden(
        &["sequence", "--p", "8", "--q", "3", "--format", "structured"],
        "sequence_8_3.json",
    );
}

#[test]
fn sequence_2_1_has_three_rows() {
    let out = run(&["sequence", "--p", "2", "--q", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout(&out)
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .count();
    assert_eq!(rows, 3);
}

#[test]
fn sequence_validation() {
    let out = run(&["sequence", "--p", "8", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd(p,q) must be 1"));
    assert_eq!(run(&["sequence", "--p", "8", "--q", "8"]).status.code(), Some(2));
    assert_eq!(run(&["sequence", "--p", "1", "--q", "1"]).status.code(), Some(2));
}

#[test]
fn primitive_exit_codes() {
    let out = run(&["primitive", "zyyzyyzy"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "Primitive");
    let out = run(&["primitive", "zz"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "NotPrimitive");
    assert_eq!(run(&["primitive", "z!"]).status.code(), Some(2));
    assert_eq!(run(&["primitive", "xz"]).status.code(), Some(2));
}

#[test]
fn primitive_trace() {
    let out = run(&["primitive", "xyxyy", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().count() > 2, "{text}");
    assert!(text.trim_end().ends_with("Primitive"), "{text}");

    let out = run(&["primitive", "xyxY", "--trace", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "primdisk.primitive/1");
    assert_eq!(v["verdict"], "NotPrimitive");
    assert_eq!(v["obstruction"]["kind"], "MixedSignPair");
}

#[test]
fn canonical() {
    let out = run(&["canonical", "--m", "3", "--n", "5"]);
    assert_eq!(stdout(&out).trim(), "zyyzyyzy");
    let out = run(&["canonical", "--m", "3", "--n", "10"]);
    assert_eq!(stdout(&out).trim(), "zyyyyzyyyzyyy");
    assert_eq!(run(&["canonical", "--m", "5", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn reports_match_goldens() {
    for (p, q) in [(2, 1), (3, 1), (5, 2), (7, 2), (7, 3), (12, 5)] {
        let (p, q) = (p.to_string(), q.to_string());
        let base = format!("report_{p}_{q}");
        assert_golden(&["report", "--p", &p, "--q", &q], &format!("{base}.txt"));
        assert_golden(
            &["report", "--p", &p, "--q", &q, "--format", "json"],
            &format!("{base}.json"),
        );
    }
}

#[test]
fn classify_12_5() {
    let out = run(&["classify", "--p", "12", "--q", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not contractible"));
    let out = run(&["classify", "--p", "12", "--q", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["contractible"], false);
}

#[test]
fn witness_outputs() {
    assert_golden(&["witness", "--p", "12", "--q", "5", "--dot"], "strip_12_5.dot");
    assert_golden(
        &["witness", "--p", "12", "--q", "5", "--format", "dot"],
        "strip_12_5.dot",
    );
    assert_golden(&["witness", "--p", "12", "--q", "5"], "strip_12_5.txt");
    assert_golden(
        &["witness", "--p", "12", "--q", "5", "--format", "json"],
        "strip_12_5.json",
    );
    let dot = golden("strip_12_5.dot");
    assert_eq!(dot.matches("doublecircle").count(), 3);
}

#[test]
fn witness_contractible() {
    let out = run(&["witness", "--p", "7", "--q", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("P(V) is contractible; no witness exists"));
}

#[test]
fn dot_only_for_witness() {
    assert_eq!(
        run(&["report", "--p", "5", "--q", "2", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn four_primitives() {
    let out = run(&["four-primitives", "--p", "8", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("agree"));
}

#[test]
fn sweep_small() {
    let par = run(&["sweep", "--pmax", "14", "--samples", "200", "--format", "json"]);
    let seq = run(&[
        "sweep",
        "--pmax",
        "14",
        "--samples",
        "200",
        "--format",
        "json",
        "--sequential",
    ]);
    assert_eq!(par.status.code(), Some(0));
    assert_eq!(stdout(&par), stdout(&seq));
    let v: serde_json::Value = serde_json::from_str(&stdout(&par)).unwrap();
    assert_eq!(v["schema"], "primdisk.sweep/1");
    assert_eq!(v["passed"], true);
    assert_eq!(run(&["sweep", "--pmax", "1"]).status.code(), Some(2));
}
