//! Closed-form isotypic traces against explicit projector matrices.

use hp_core::arith::ThetaMode;
use hp_core::characters::isotypic_dimension;
use hp_core::poly::Partition;
use hp_core::spectra::{trace_isotypic_brute, trace_isotypic_closed};

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    let n = 4;
    for lambda in ["3,1,0,0", "2,1,1,0", "3,2,1,0"] {
        let lambda: Partition = lambda.parse()?;
        for tau in Partition::all_of(n as u32, n) {
            let dim = isotypic_dimension(&lambda, &tau, n)?;
            if dim == 0 {
                continue;
            }
            let closed = trace_isotypic_closed(&lambda, &tau, 2, n, &s)?;
            let brute = trace_isotypic_brute(&lambda, &tau, 2, n, &s)?;
            let mark = if closed == brute { "ok" } else { "MISMATCH" };
            println!("λ=({lambda}) τ=({tau}) dim {dim}: {closed}  [{mark}]");
        }
    }
    Ok(())
}
