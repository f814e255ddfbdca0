//! Joint eigenfunctions of P_1, P_2, P_3 led by V_λ.

use hp_core::arith::ThetaMode;
use hp_core::settings::Settings;
use hp_core::spectra::{joint_eigenbasis, verify_joint_basis};

fn main() -> hp_core::Result<()> {
    let lambda = "2,1,0".parse()?;
    let basis = joint_eigenbasis(&lambda, 3, &[1, 2, 3], &ThetaMode::specialized(1, 1), &Settings::default())?;
    verify_joint_basis(&basis)?;
    for f in &basis.functions {
        let ev: Vec<String> = f.eigenvalues.iter().map(|(m, e)| format!("P_{m}: {e}")).collect();
        println!("τ=({}) group {}: {}", f.tau, f.group, ev.join(", "));
        println!("    {}", f.poly);
    }
    for g in basis.unresolved() {
        println!("unsplit group in τ=({}) of dimension {}", g.tau, g.dim);
    }
    Ok(())
}
