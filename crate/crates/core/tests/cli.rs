use std::path::Path;
use std::process::{Command, Output};

use nr_workbench::report::VerificationReport;
use serde_json::Value;

fn nrwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nrwb"))
        .args(args)
        .env_remove("NR_SEARCH_BUDGET")
        .output()
        .expect("binary runs")
}

fn code_lines(path: &Path) -> usize {
    std::fs::read_to_string(path).unwrap().lines().filter(|l| !l.starts_with("m=")).count()
}

#[test]
fn construct_writes_code_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, words) in [("nr", 256), ("pn", 256), ("golay24", 4096), ("reed_muller", 32), ("pn@7", 256)] {
        let path = dir.path().join(format!("{name}.txt"));
        let out = nrwb(&["construct", name, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(code_lines(&path), words, "{name}");
    }
    let out = nrwb(&["construct", "hexacode", "-o", dir.path().join("x").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_reports_nr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nr.txt");
    nrwb(&["construct", "nr", "-o", path.to_str().unwrap()]);
    let out = nrwb(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["covering_radius"], 4);
    assert_eq!(v["min_distance"], 6);
    assert_eq!(v["size"], 256);
    assert_eq!(v["complete_regularity"]["regular"], true);
    assert_eq!(v["distribution"][6], "112");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "m=4\n0101\n01x1\n").unwrap();
    assert_eq!(nrwb(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&path, "m=4\n0101\n011\n").unwrap();
    assert_eq!(nrwb(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(nrwb(&["analyze", "/nonexistent/code.txt"]).status.code(), Some(2));
    assert_eq!(nrwb(&["verify", "golay"]).status.code(), Some(2));
    assert_eq!(nrwb(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_targets_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nr.json");
    let out = nrwb(&["verify", "nr", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = std::fs::read_to_string(&path).unwrap();
    let report = VerificationReport::from_json(&text).unwrap();
    assert!(report.claims.iter().all(|c| !c.id.starts_with("pn.") && !c.id.starts_with("feas.pn.")));
    assert!(report.claim("nr.delta").is_some());
    assert_eq!(VerificationReport::from_json(&report.to_json()).unwrap(), report);

    let again = nrwb(&["verify", "nr"]);
    assert_eq!(again.status.code(), Some(0));
    let second = VerificationReport::from_json(std::str::from_utf8(&again.stdout).unwrap()).unwrap();
    assert_eq!(second.without_timings().to_json(), report.without_timings().to_json());
}

#[test]
fn verify_all_passes() {
    let out = nrwb(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = VerificationReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report.summary.fail, 0);
    assert!(report.claims.iter().any(|c| c.id.starts_with("pn.")));
}

#[test]
fn tiny_budget_fails_claims() {
    let out = Command::new(env!("CARGO_BIN_EXE_nrwb"))
        .args(["verify", "nr"])
        .env("NR_SEARCH_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let flag = nrwb(&["verify", "nr", "--budget", "10"]);
    assert_eq!(flag.status.code(), Some(1));
    let bad = Command::new(env!("CARGO_BIN_EXE_nrwb"))
        .args(["verify", "nr"])
        .env("NR_SEARCH_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn feasible_solutions() {
    let out = nrwb(&["feasible", "-m", "16", "-t", "6=112,7=?,8=?,10=112", "--antipodal"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["solutions"], serde_json::json!([["0", "30"]]));

    let out = nrwb(&["feasible", "-m", "15", "-t", "5=42,6=?,7=?,10=42", "--antipodal"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["solutions"], serde_json::json!([["70", "15"]]));

    let out = nrwb(&["feasible", "-m", "16", "-t", "1=1,6=112,7=?,8=?,10=112", "--antipodal"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["solutions"], serde_json::json!([]));
}

#[test]
fn feasible_input_errors() {
    let unbounded = nrwb(&["feasible", "-m", "8", "-t", "2=?,4=?", "--antipodal"]);
    assert_eq!(unbounded.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unbounded.stderr).contains("not bounded"));
    assert_eq!(nrwb(&["feasible", "-m", "16", "-t", "6=x"]).status.code(), Some(2));
    assert_eq!(nrwb(&["feasible", "-m", "16", "-t", "17=1"]).status.code(), Some(2));
}
