//! One line per acceptance criterion. Exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use depthlab_cli::suite::{self, Criterion};

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Criterion) -> (Criterion, Duration, bool) {
    let start = Instant::now();
    let c = f();
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took <= l);
    (c, took, in_time)
}

fn suite_bytes() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_depthlab"))
        .args(["suite", "--seed", "0"])
        .env_remove("DEPTHLAB_CAP")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "suite failed: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let runs: Vec<(Criterion, Duration, bool)> = vec![
        timed(Some(secs(10)), suite::orthogonality),
        timed(Some(secs(60)), || suite::decompositions(true)),
        timed(None, suite::depth_certificates),
        timed(None, || suite::sylow(100_000, 0)),
        timed(Some(secs(120)), suite::r3_props),
        timed(None, suite::depth_oracles),
        timed(None, suite::certificates),
    ];
    let mut all = true;
    for (c, took, in_time) in &runs {
        let ok = c.passed && *in_time;
        all &= ok;
        println!(
            "criterion {}: {} ({:.2} s) {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            c.name
        );
        if !ok {
            println!("  detail: {}", c.detail);
        }
    }
    let start = Instant::now();
    let (a, b) = (suite_bytes(), suite_bytes());
    let same = a == b;
    all &= same;
    println!(
        "criterion 8: {} ({:.2} s) suite --seed 0 twice gives identical JSON ({} bytes)",
        if same { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64(),
        a.len()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
