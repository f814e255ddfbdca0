//! Symmetric Jack eigenfunctions in the monomial basis.

use hp_core::arith::ThetaMode;
use hp_core::spectra::jack_polynomial;

fn main() -> hp_core::Result<()> {
    let lambda = "2,1".parse()?;
    for theta in [ThetaMode::Symbolic, ThetaMode::specialized(1, 1)] {
        let j = jack_polynomial(&lambda, 3, &[1, 2, 3], &theta)?;
        println!("θ = {theta}");
        for (mu, c) in &j.coefficients {
            println!("  m_({mu}): {c}");
        }
        for (m, e) in &j.eigenvalues {
            println!("  P_{m} eigenvalue {e}");
        }
    }

    // Singular specialization.
    match jack_polynomial(&lambda, 3, &[2], &ThetaMode::specialized(-1, 2)) {
        Ok(_) => println!("θ = -1/2 solved"),
        Err(e) => println!("θ = -1/2: {e}"),
    }
    Ok(())
}
