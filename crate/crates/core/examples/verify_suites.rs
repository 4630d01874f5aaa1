//! Runs every randomized suite at a small trial count and prints the JSON
//! reports.

use clonebound::harness::{cmd_verify, reports_json, Suite, VerifySpec};

fn main() -> clonebound::Result<()> {
    let trials = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let spec = VerifySpec {
        suite: Suite::All,
        trials,
        seed: 42,
        dim: None,
    };
    let reports = cmd_verify(&spec, None)?;
    for r in &reports {
        eprintln!("{:<24} {:>8.3}s", r.suite, r.wall_time);
    }
    print!("{}", reports_json(&reports)?);
    Ok(())
}
