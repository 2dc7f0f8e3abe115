//! Prints wall-clock timings of each verification suite.

use g2roll_core::par::ExecMode;
use g2roll_core::verify::{suite_by_name, SuiteParams, SUITE_NAMES};
use std::time::Instant;

fn main() {
    let samples: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let params = SuiteParams {
        seed: 42,
        samples,
        mode: ExecMode::default(),
    };
    let total = Instant::now();
    for name in SUITE_NAMES {
        let start = Instant::now();
        let report = suite_by_name(name, &params).unwrap();
        let status = if report.all_ok() { "ok" } else { "FAILED" };
        println!("{name:>12}: {:>8.2?} {status}", start.elapsed());
        for check in &report.checks {
            if !check.ok() {
                println!("              failing: {}", check.check);
            }
        }
    }
    println!("{:>12}: {:>8.2?}", "total", total.elapsed());
}
