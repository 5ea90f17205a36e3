//! End-to-end exercises of the command-line front end: file round-trips,
//! exit-code contract, and byte-identical determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn plp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plp"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// x <= delta^2 and x >= delta: infeasible on (0, 1), feasible left of 0.
fn write_instance(dir: &std::path::Path) -> PathBuf {
    let path = dir.join("inst.json");
    std::fs::write(
        &path,
        r#"{
          "n": 1,
          "constraints": [
            { "row": [["-1"]], "rhs": ["0", "0", "-1"], "sense": ">=" },
            { "row": [["1"]], "rhs": ["0", "1"], "sense": ">=" }
          ]
        }"#,
    )
    .unwrap();
    path
}

#[test]
fn solve_roundtrip_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_instance(dir.path());
    let cert = dir.path().join("cert.json");

    // definitive negative-side verdict: exit 0, feasible certificate
    let out = plp(&["solve", "--instance", inst.to_str().unwrap(), "--side", "neg",
        "--output", cert.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let emitted = std::fs::read_to_string(&cert).unwrap();
    assert!(emitted.contains("\"feasible\""));

    // the emitted certificate audits cleanly against its instance
    let out = plp(&["check-certificate", "--instance", inst.to_str().unwrap(),
        "--certificate", cert.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // determinism: a second run emits byte-identical output
    let cert2 = dir.path().join("cert2.json");
    let out = plp(&["solve", "--instance", inst.to_str().unwrap(), "--side", "neg",
        "--output", cert2.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(emitted, std::fs::read_to_string(&cert2).unwrap());

    // positive side is provably infeasible: still a definitive verdict, exit 0
    let out = plp(&["solve", "--instance", inst.to_str().unwrap(), "--side", "pos"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"infeasible\""));

    // a capped search that finds nothing must exit 2, not claim infeasibility
    let out = plp(&["solve", "--instance", inst.to_str().unwrap(), "--side", "pos",
        "--degree-cap", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unknown-at-cap"));
}

#[test]
fn eval_point_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_instance(dir.path());

    let out = plp(&["eval-point", "--instance", inst.to_str().unwrap(), "--delta", "1/20"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("infeasible"));

    let out = plp(&["eval-point", "--instance", inst.to_str().unwrap(), "--delta", "-1/20"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("feasible"));

    // malformed JSON, unknown preset, and dimension mismatch: exit 1 with
    // distinct diagnostics
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = plp(&["eval-point", "--instance", bad.to_str().unwrap(), "--delta", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));

    let out = plp(&["solve", "--preset", "no-such-rule"]);
    assert_eq!(out.status.code(), Some(1));

    let mismatched = dir.path().join("dim.json");
    std::fs::write(
        &mismatched,
        r#"{ "n": 2, "constraints": [ { "row": [["1"]], "rhs": ["0"], "sense": ">=" } ] }"#,
    )
    .unwrap();
    let out = plp(&["eval-point", "--instance", mismatched.to_str().unwrap(), "--delta", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn optimize_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("opt.json");
    // max x s.t. delta * x <= 1, x >= 0: optimum 1/delta
    std::fs::write(
        &path,
        r#"{
          "n": 1,
          "objective": [["1"]],
          "convention": "max-le-nonneg",
          "constraints": [ { "row": [["0", "1"]], "rhs": ["1"], "sense": ">=" } ]
        }"#,
    )
    .unwrap();
    let out = plp(&["optimize", "--instance", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("locally-optimal"));
    assert!(text.contains("\"den\": [\n        \"0\",\n        \"1\"\n      ]") || text.contains("\"den\":[\"0\",\"1\"]") || text.contains("\"0\""));
}
