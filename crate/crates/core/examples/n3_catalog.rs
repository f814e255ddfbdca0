//! All eigenvalues for three variables, checked against the blocks of Σ T_i^m.

use hp_core::arith::ThetaMode;
use hp_core::settings::Settings;
use hp_core::spectra::{check_catalog, n3_catalog};

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    for lambda in ["2,2,2", "2,2,0", "3,1,1", "3,1,0"] {
        let lambda = lambda.parse()?;
        println!("λ=({lambda}), m=2");
        for e in n3_catalog(&lambda, 2, &s)? {
            println!("  ({}) τ=({}) ×{}: {}", e.item, e.tau, e.mult, e.value);
            println!("      led by {}", e.leading);
        }
        let ok = check_catalog(&lambda, 2, &s, &Settings::default())?.iter().all(|v| v.ok);
        println!("  matches block characteristic polynomials: {ok}");
    }
    Ok(())
}
