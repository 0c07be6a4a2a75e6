use std::process::{Command, Output};

use serde_json::Value;

fn z2inv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2inv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Vec<Value> {
    serde_json::from_slice::<Value>(&out.stdout).unwrap().as_array().unwrap().clone()
}

#[test]
fn good_gens_so41() {
    let out = z2inv(&["verify", "--suite", "good-gens", "--family", "so", "--n", "4", "--m", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    assert_eq!(reports[0]["check_id"], "good-gens/SO(4,1)/EVEN_COEFFS_PLUS_PFAFFIAN");
    assert_eq!(reports[0]["status"], "PASS");
    assert_eq!(reports[0]["computed"]["bidegrees"], serde_json::json!(["(0,2)", "(2,2)"]));
    assert!(reports.iter().all(|r| r["status"] == "PASS"));
}

#[test]
fn power_traces_fail_with_exit_one() {
    let out = z2inv(&[
        "verify", "--suite", "good-gens", "--family", "so", "--n", "4", "--m", "1", "--kind", "power-traces",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("FAIL"), "{text}");
    assert!(text.contains("involve only {d1}"), "{text}");
}

#[test]
fn heisenberg_index() {
    let out = z2inv(&["verify", "--suite", "index", "--family", "heisenberg"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS    index/heisenberg"));
    assert!(text.contains("degree-sum bound violated: codim-2 property absent"));
}

#[test]
fn f4_bundle_has_four_reports() {
    let out = z2inv(&["verify", "--suite", "f4", "--format", "json"]);
    let reports = json(&out);
    assert_eq!(reports.len(), 4);
    let keys: Vec<&String> = reports[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["check_id", "status", "expected", "computed", "witness", "elapsed_ms"]);
    let failing: Vec<&Value> = reports.iter().filter(|r| r["status"] == "FAIL").collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["check_id"], "f4/highest-components");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sp_is_conjectural() {
    let out = z2inv(&["verify", "--suite", "tables", "--family", "sp", "--n", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("conjectural"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "tables", "--family", "gl", "--n", "1", "--m", "2"],
        vec!["verify", "--suite", "tables", "--family", "gl", "--n", "2"],
        vec!["verify", "--suite", "f4", "--n", "2", "--m", "1"],
        vec!["verify", "--suite", "uslovie", "--cap", "bogus=1"],
        vec!["verify", "--suite", "tables", "--family", "heisenberg"],
        vec!["verify", "--suite", "good-gens", "--family", "gl", "--n", "6", "--m", "5"],
        vec!["verify", "--suite", "nregular", "--n", "4"],
    ] {
        let out = z2inv(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_are_configurable() {
    let out = z2inv(&["verify", "--suite", "uslovie", "--cap", "uslovie=4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    // Partitions of 2 and 4.
    assert_eq!(json(&out).len(), 2 + 5);
}

#[test]
fn deterministic_output_is_byte_identical() {
    let args = ["verify", "--suite", "dimstab", "--family", "gl", "--seed", "7", "--format", "json", "--deterministic"];
    let a = z2inv(&args);
    let b = z2inv(&args);
    let mut par = args.to_vec();
    par.push("--parallel");
    let c = z2inv(&par);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(json(&a).iter().all(|r| r["elapsed_ms"] == 0));
}

#[test]
fn nregular_and_tables() {
    let out = z2inv(&["verify", "--suite", "nregular", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    assert_eq!(reports.len(), 2 + 6);
    let out = z2inv(&["verify", "--suite", "tables", "--family", "gl", "--parallel"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("5 checks: 5 passed"));
}

#[test]
fn dump_structure_constants() {
    let out = z2inv(&["dump", "--family", "heisenberg"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "0 1 2 1/1\n1 0 2 -1/1");
    let out = z2inv(&["dump", "--family", "so", "--n", "2", "--m", "1", "--what", "invariants"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bideg (0,2)"), "{text}");
}
