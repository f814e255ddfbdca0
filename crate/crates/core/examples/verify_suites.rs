//! Run the verification suites in-process.

use hp_core::arith::ThetaMode;
use hp_core::verify::{verify, Suite, VerifyConfig};

fn main() -> hp_core::Result<()> {
    let cfg = VerifyConfig::new(3, 3, ThetaMode::specialized(1, 2));
    let report = verify(&Suite::ALL, &cfg)?;
    for s in &report.suites {
        println!("{:<14} {:>5} checks, {} violations", s.suite.name(), s.checks, s.violations.len());
    }
    println!("passed: {}", report.passed());
    Ok(())
}
