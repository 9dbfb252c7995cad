//! End-to-end tests against the built binary: golden-file diffs for the
//! published tables and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolprop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

#[test]
fn constants_table_matches_golden() {
    let out = run(&["table", "B", "B,0", "B,1", "B,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("table_constants.md"));
}

#[test]
fn negation_table_matches_golden() {
    let out = run(&["table", "B,neg", "B,neg,0", "B,neg,1", "B,neg,0,1"]);
    assert_eq!(stdout(&out), golden("table_negation.md"));
}

#[test]
fn full_signature_table_matches_golden() {
    let out = run(&[
        "table",
        "B,or,neg",
        "B,or,neg,0",
        "B,or,neg,1",
        "B,or,neg,0,1",
    ]);
    assert_eq!(stdout(&out), golden("table_full_signature.md"));
}

#[test]
fn comparison_matches_golden_in_md_and_csv() {
    assert_eq!(stdout(&run(&["compare"])), golden("comparison.md"));
    assert_eq!(
        stdout(&run(&["compare", "--format", "csv"])),
        golden("comparison.csv")
    );
}

#[test]
fn audit_json_matches_golden() {
    let out = run(&["audit", "B", "--format", "json"]);
    assert_eq!(stdout(&out), golden("audit_bare.json"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["decide", "B", "0", "1", "1", "0"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["decide", "B,0", "1", "0", "0", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["decide", "B,or,neg,0,1", "1", "1", "0", "1"])
            .status
            .code(),
        Some(1)
    );
    // usage errors
    assert_eq!(
        run(&["decide", "B,bogus", "0", "1", "1", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["decide", "B", "0", "1", "1", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["table"]).status.code(), Some(2));
    assert_eq!(
        run(&["explain", "B", "0", "0", "1", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn explain_prints_witnesses() {
    let out = run(&["explain", "B,neg", "0", "1", "1", "0", "--arity", "1"]);
    assert_eq!(
        stdout(&out),
        "B,neg |= 0:1::1:0  [arity 1]\n\
         Jus(0 ~> 1 :: 1 ~> 0) is subset-maximal: 2 members, 2 nontrivial\n\
         rules (distinct modulo variable renaming):\n\
         \x20 z0 -> ~z0   [witness z0=0, then z0=1]\n\
         \x20 ~z0 -> z0   [witness z0=1, then z0=0]\n"
    );
}

#[test]
fn same_invocation_twice_is_byte_identical() {
    let args = ["audit", "B,0", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}
