//! λ = (a^{N-η}, b^η): one eigenvalue per isotype (N-k, k).

use hp_core::arith::ThetaMode;
use hp_core::characters::isotypic_dimension;
use hp_core::poly::Partition;
use hp_core::spectra::eig_two_block;

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    let (n, eta, a, b, m) = (5usize, 2usize, 2u32, 0u32, 2u32);
    let mut parts = vec![a; n - eta];
    parts.extend(std::iter::repeat_n(b, eta));
    let lambda = Partition::from_unsorted(parts);
    println!("λ=({lambda}), N={n}, m={m}");
    for k in 0..=eta.min(n - eta) {
        let tau = Partition::from_unsorted(vec![(n - k) as u32, k as u32]);
        let e = eig_two_block(n, eta, a, b, m, k, &s)?;
        println!("  τ=({tau}) ×{}: {e}", isotypic_dimension(&lambda, &tau, n)?);
    }
    Ok(())
}
