//! Spectrum of the leading part of P_m on V_λ, split by isotype.

use hp_core::arith::ThetaMode;
use hp_core::spectra::spectrum_on_v_lambda;

fn main() -> hp_core::Result<()> {
    let lambda = "2,1,1,0".parse()?;
    for theta in [ThetaMode::specialized(1, 1), ThetaMode::Symbolic] {
        let rep = spectrum_on_v_lambda(&lambda, 2, 4, &theta)?;
        println!("λ=({lambda}) m=2 θ={theta}: dim {}", rep.dim);
        for v in &rep.eigenvalues {
            println!("  {} ×{}", v.value, v.mult);
        }
        for b in &rep.blocks {
            println!("  block τ=({}) dim {} trace {}", b.tau, b.dim, b.trace);
        }
        println!("  all checks ok: {}", rep.all_ok());
    }
    Ok(())
}
