//! Behaviour of the `depthlab` binary: JSON on stdout, exit codes, file handling.

use std::path::PathBuf;
use std::process::{Command, Output};

use depthlab_cli::{Outcome, RunReport};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(args)
        .env_remove("DEPTHLAB_CAP")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> RunReport {
    serde_json::from_slice(&out.stdout).expect("stdout is a report")
}

fn field(r: &RunReport, key: &str) -> Value {
    r.payload.get(key).cloned().unwrap_or(Value::Null)
}

#[test]
fn dc_of_c5_in_a5_is_three() {
    let out = run(&["dc", "--group", &data("a5.json"), "--subgroup", &data("c5.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.command, "dc");
    assert_eq!(r.outcome, Outcome::Pass);
    assert_eq!(field(&r, "dc"), 3);
    assert!(!out.stderr.is_empty());
}

#[test]
fn parent_is_read_from_the_subgroup_file() {
    let out = run(&["od", "--subgroup", &data("c5.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(field(&report(&out), "d"), 3);
    let out = run(&["core-bound", "--subgroup", &data("c5.json")]);
    assert_eq!(field(&report(&out), "disjoint_conjugate"), true);
}

#[test]
fn element_outside_the_parent_is_an_input_error() {
    let out = run(&["dc", "--subgroup", &data("odd.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out).outcome, Outcome::Error);
}

#[test]
fn cap_is_read_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(["dc", "--subgroup", &data("c5.json")])
        .env("DEPTHLAB_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(field(&report(&out), "error_kind"), "capacity");
}

#[test]
fn ngp_depth_is_five() {
    let out = run(&["ree", "ngp", "--n", "1", "--check", "depth"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(field(&r, "d"), 5);
    assert_eq!(field(&r, "witness"), "all distances \u{2264}2; m(1_G)=2");
}

#[test]
fn certificate_b1_holds_at_27() {
    let out = run(&["cert", "--name", "b1", "--q", "27"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(field(&report(&out), "holds"), true);
}

#[test]
fn certificate_below_domain_is_flagged_not_failed() {
    let out = run(&["cert", "--name", "b1", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).outcome, Outcome::OutOfDomain);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["dc", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["ree", "verify-sylow", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["cert", "--name", "b1", "--q", "28"]).status.code(), Some(2));
    assert_eq!(run(&["ree", "verify-sylow", "--n", "1", "--exhaustive"]).status.code(), Some(2));
}

#[test]
fn json_out_matches_stdout_and_table_round_trips() {
    let dir = std::env::temp_dir().join(format!("depthlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("chars.json");
    let out = run(&["chars", "--group", &data("a5.json"), "--json-out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&out_path).unwrap(), out.stdout);
    let r = report(&out);
    assert_eq!(field(&r, "num_classes"), 5);

    let table_path = dir.join("table.json");
    std::fs::write(&table_path, serde_json::to_string(&field(&r, "table")).unwrap()).unwrap();
    let out = run(&["chars", "--table", table_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let mut bad = field(&r, "table");
    bad["irreducibles"][1][1]["coeffs"][0] = Value::from("7");
    std::fs::write(&table_path, serde_json::to_string(&bad).unwrap()).unwrap();
    let out = run(&["chars", "--table", table_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(field(&report(&out), "error_kind"), "inconsistency");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sylow_at_q3_exhaustive() {
    let out = run(&["ree", "verify-sylow", "--n", "0", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.inputs["exhaustive"], true);
    assert_eq!(field(&r, "q"), 3);
}

#[test]
fn timings_only_when_asked() {
    let out = run(&["cert", "--name", "r3", "--q", "27"]);
    assert!(report(&out).elapsed_ms.is_none());
    let out = run(&["cert", "--name", "r3", "--q", "27", "--timings"]);
    assert!(report(&out).elapsed_ms.is_some());
}
