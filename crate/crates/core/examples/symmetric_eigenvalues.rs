//! Eigenvalues on symmetric and skew-symmetric eigenfunctions.

use hp_core::arith::ThetaMode;
use hp_core::settings::Settings;
use hp_core::spectra::{eig_skew_closed, eig_sym_brute, eig_sym_closed, eig_sym_series};

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    let lambda = "2,1,0".parse()?;
    let series = eig_sym_series(&lambda, 3, 4, &s)?;
    for m in 1..=4u32 {
        let closed = eig_sym_closed(&lambda, m, 3, &s)?;
        let brute = eig_sym_brute(&lambda, m, 3, &s, &Settings::default())?;
        assert_eq!(closed, brute);
        assert_eq!(closed, series[m as usize]);
        println!("m={m}: symmetric {closed}");
        println!("     skew      {}", eig_skew_closed(&lambda, m, 3, &s)?);
    }
    Ok(())
}
