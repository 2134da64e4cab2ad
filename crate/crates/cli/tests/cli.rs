use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn x_pairing_constant_default() {
    let o = run(&["pair", "--plus", "xp(1,3)", "--minus", "xm(1,-3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "-q/(q^2 + 1)"), "{}", stdout(&o));
}

#[test]
fn x_pairing_constant_qminus_matches_golden() {
    let o = run(&["--convention", "qminus", "pair", "--plus", "xp(1,3)", "--minus", "xm(1,-3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("pair_qminus.txt"));
}

#[test]
fn degree_mismatch_pairs_to_zero() {
    let o = run(&["pair", "--plus", "xp(1,0)", "--minus", "xm(2,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "0"), "{}", stdout(&o));
}

#[test]
fn two_letter_pairing_json_matches_golden() {
    let o = run(&["--format", "json-lines", "pair", "--plus", "xp(1,1) xp(1,0)", "--minus", "xm(1,0) xm(1,-1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("pair_two_letters.jsonl"));
}

#[test]
fn serre_a2_matches_golden() {
    let o = run(&["serre", "--cartan", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("serre_a2.txt"));
}

#[test]
fn relations_a2_window_one_matches_golden() {
    let o = run(&["relations", "--window", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("relations_a2_w1.txt"));
}

#[test]
fn gram_at_simple_root_is_nonsingular() {
    let o = run(&["gram", "--degree", "a1", "--modesum", "0", "--window", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1 x 1 matrix, rank 1"), "{out}");
    assert!(out.contains("determinant -q/(q^2 + 1)"), "{out}");
}

#[test]
fn every_report_echoes_conventions() {
    let o = run(&["--format", "json-lines", "relation13"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.is_empty());
    for line in out.lines() {
        for key in ["\"g_identity\"", "\"pairing_constant\"", "\"sym\"", "\"cartan\""] {
            assert!(line.contains(key), "missing {key} in {line}");
        }
    }
}

#[test]
fn timing_fills_millis() {
    let o = run(&["--timing", "--format", "json-lines", "check-g"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| !l.contains("\"millis\":null")));
}

#[test]
fn wrong_side_is_an_error() {
    let o = run(&["pair", "--plus", "xp(1,3)", "--minus", "xp(1,-3)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("minus side"));
}

#[test]
fn parse_error_reports_position() {
    let o = run(&["pair", "--plus", "xp(1,3", "--minus", "xm(1,-3)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 6"));
}

#[test]
fn unknown_preset_is_an_error() {
    let o = run(&["--cartan", "Z9", "check-g"]);
    assert_eq!(o.status.code(), Some(2));
}
