//! Closed-form eigenvalues and isotypic trace formulas.

use num::BigRational;

use crate::arith::{ExactMatrix, Scalar, ThetaMode};
use crate::characters::{
    averaged_character_with, character, dimension, one_cycle_class, AveragedCharacterSpec,
};
use crate::error::{Error, Result};
use crate::poly::{MultiplicityProfile, Partition};
use crate::settings::{Mutation, Settings};

/// `ℓ_i = λ_i + θ(N - i)` for `i = 1..N`.
pub fn ell(lambda: &Partition, n: usize, mode: &ThetaMode) -> Result<Vec<Scalar>> {
    let parts = lambda.padded(n)?;
    Ok(parts
        .iter()
        .enumerate()
        .map(|(i, &p)| mode.linear(p as i64, (n - 1 - i) as i64))
        .collect())
}

/// Complete homogeneous symmetric polynomial `h_m(xs)`; zero for `m < 0`.
pub fn h_complete(m: i64, xs: &[Scalar], mode: &ThetaMode) -> Scalar {
    if m < 0 {
        return mode.zero();
    }
    let m = m as usize;
    // h[k] = h_k of the variables processed so far
    let mut h = vec![mode.zero(); m + 1];
    h[0] = mode.one();
    for x in xs {
        for k in 1..=m {
            let add = x * &h[k - 1];
            h[k] += &add;
        }
    }
    h[m].clone()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// `h^{(r)}_m(xs)`: the sum of `h_m` over all `r`-element subsets.
pub fn h_subset_sum(r: usize, m: i64, xs: &[Scalar], mode: &ThetaMode) -> Scalar {
    if m < 0 || r > xs.len() {
        return mode.zero();
    }
    let mut acc = mode.zero();
    for s in subsets(xs.len(), r) {
        let sub: Vec<Scalar> = s.iter().map(|&i| xs[i].clone()).collect();
        acc += &h_complete(m, &sub, mode);
    }
    acc
}

fn check_m(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(())
}

/// `Σ_r (-θ)^{r-1} h^{(r)}_{m+1-r}(ℓ)`.
pub fn eig_sym_hsum(lambda: &Partition, m: u32, n: usize, mode: &ThetaMode) -> Result<Scalar> {
    eig_sym_hsum_with(lambda, m, n, mode, &Settings::default())
}

pub fn eig_sym_hsum_with(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    check_m(m)?;
    let l = ell(lambda, n, mode)?;
    let step = if settings.mutated(Mutation::SymmetricSign) {
        mode.theta()
    } else {
        -mode.theta()
    };
    let mut acc = mode.zero();
    let mut coef = mode.one();
    for r in 1..=n {
        acc += &(&coef * &h_subset_sum(r, m as i64 + 1 - r as i64, &l, mode));
        coef = &coef * &step;
    }
    Ok(acc)
}

/// `1ᵀ U^m 1` with `U` upper triangular, `ℓ` on the diagonal and `-θ`
/// above it.
pub fn eig_sym_matrix_form(lambda: &Partition, m: u32, n: usize, mode: &ThetaMode) -> Result<Scalar> {
    check_m(m)?;
    let l = ell(lambda, n, mode)?;
    let neg = -mode.theta();
    let u = ExactMatrix::from_fn(n, n, mode, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => l[r].clone(),
        std::cmp::Ordering::Less => neg.clone(),
        std::cmp::Ordering::Greater => mode.zero(),
    });
    sandwich(&u.pow(m)?, &vec![mode.one(); n], &vec![mode.one(); n])
}

fn sandwich(m: &ExactMatrix, left: &[Scalar], right: &[Scalar]) -> Result<Scalar> {
    let v = m.mul_vec(right)?;
    let mut acc = m.mode().zero();
    for (a, b) in left.iter().zip(&v) {
        acc += &(a * b);
    }
    Ok(acc)
}

/// `(n_1, …, n_p) Ũ^m 1` with `Ũ` upper triangular, `ℓ̃` on the diagonal
/// and `-n_j θ` in column `j` above it.
pub fn eig_sym_weighted_form(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
) -> Result<Scalar> {
    check_m(m)?;
    let prof = MultiplicityProfile::new(lambda, n)?;
    let p = prof.blocks();
    let lt = prof.shifted_scalars(mode);
    let theta = mode.theta();
    let u = ExactMatrix::from_fn(p, p, mode, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => lt[r].clone(),
        std::cmp::Ordering::Less => -theta.scale_int(prof.multiplicities[c] as i64),
        std::cmp::Ordering::Greater => mode.zero(),
    });
    let left: Vec<Scalar> = prof.multiplicities.iter().map(|&k| mode.int(k as i64)).collect();
    sandwich(&u.pow(m)?, &left, &vec![mode.one(); p])
}

/// Eigenvalue of `P_m` on the symmetric Jack polynomial. The subset sum
/// and the matrix-power form are both evaluated and must agree.
pub fn eig_sym_closed(lambda: &Partition, m: u32, n: usize, mode: &ThetaMode) -> Result<Scalar> {
    eig_sym_closed_with(lambda, m, n, mode, &Settings::default())
}

pub fn eig_sym_closed_with(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    let a = eig_sym_hsum_with(lambda, m, n, mode, settings)?;
    let b = eig_sym_matrix_form(lambda, m, n, mode)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "symmetric eigenvalue for λ = {lambda}, m = {m}: subset sum {a} but matrix form {b}"
        )));
    }
    Ok(a)
}

/// `eig_0, …, eig_{m_max}` read off `∏ (1 - (ℓ_i + θ) z) / (1 - ℓ_i z)`
/// via `eig_m = -[z^{m+1}] F / θ`. Needs `θ ≠ 0`.
pub fn eig_sym_series(
    lambda: &Partition,
    n: usize,
    m_max: u32,
    mode: &ThetaMode,
) -> Result<Vec<Scalar>> {
    let l = ell(lambda, n, mode)?;
    let theta = mode.theta();
    let theta_inv = theta.checked_inv().map_err(|_| {
        Error::InvalidArgument("the generating series needs θ ≠ 0".into())
    })?;
    let len = m_max as usize + 2;
    let mut f = vec![mode.zero(); len];
    f[0] = mode.one();
    for li in &l {
        // multiply by (1 - (ℓ + θ) z)
        let c = li + &theta;
        for k in (1..len).rev() {
            let sub = &c * &f[k - 1];
            f[k] -= &sub;
        }
        // multiply by 1/(1 - ℓ z): running sum g_k = f_k + ℓ g_{k-1}
        for k in 1..len {
            let add = li * &f[k - 1];
            f[k] += &add;
        }
    }
    Ok((0..=m_max as usize)
        .map(|m| -(&f[m + 1] * &theta_inv))
        .collect())
}

/// Eigenvalue on the skew-symmetric function for distinct parts:
/// `Σ_r θ^{r-1} h^{(r)}_{m+1-r}(ℓ)`.
pub fn eig_skew_closed(lambda: &Partition, m: u32, n: usize, mode: &ThetaMode) -> Result<Scalar> {
    check_m(m)?;
    if !lambda.has_distinct_parts(n) {
        return Err(Error::InvalidArgument(format!(
            "λ = {lambda} does not have {n} distinct parts"
        )));
    }
    let l = ell(lambda, n, mode)?;
    let theta = mode.theta();
    let mut acc = mode.zero();
    let mut coef = mode.one();
    for r in 1..=n {
        acc += &(&coef * &h_subset_sum(r, m as i64 + 1 - r as i64, &l, mode));
        coef = &coef * &theta;
    }
    Ok(acc)
}

fn rat_scalar(mode: &ThetaMode, x: BigRational) -> Scalar {
    mode.rational(x)
}

/// Sum of `P_m` eigenvalues over the `τ`-isotypic eigenfunctions with
/// leading part in `V_λ`. Uses the one-cycle characters when all parts are
/// distinct and averaged characters otherwise.
pub fn trace_isotypic_closed(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
) -> Result<Scalar> {
    trace_isotypic_closed_with(lambda, tau, m, n, mode, &Settings::default())
}

pub fn trace_isotypic_closed_with(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    check_m(m)?;
    if tau.size() as usize != n {
        return Err(Error::SizeMismatch(format!("τ = {tau} is not a partition of {n}")));
    }
    if lambda.has_distinct_parts(n) {
        trace_distinct(lambda, tau, m, n, mode)
    } else {
        trace_general(lambda, tau, m, n, mode, settings)
    }
}

fn trace_distinct(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
) -> Result<Scalar> {
    let l = ell(lambda, n, mode)?;
    let neg = -mode.theta();
    let mut acc = mode.zero();
    let mut coef = mode.one();
    for k in 1..=(m as usize + 1).min(n) {
        let chi = character(tau, &one_cycle_class(n, k)?)?;
        if chi != 0 {
            let h = h_subset_sum(k, m as i64 + 1 - k as i64, &l, mode);
            acc += &(&coef * &h).scale_int(chi);
        }
        coef = &coef * &neg;
    }
    Ok(acc.scale_int(dimension(tau) as i64))
}

fn trace_general(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    let prof = MultiplicityProfile::new(lambda, n)?;
    let p = prof.blocks();
    let lt = prof.shifted_scalars(mode);
    let neg = -mode.theta();
    let mut acc = mode.zero();
    let mut coef = mode.one();
    for k in 1..=(m as usize + 1).min(p) {
        for a in subsets(p, k) {
            let spec = AveragedCharacterSpec::new(prof.multiplicities.clone(), a.clone())?;
            let chi = averaged_character_with(tau, &spec, settings)?;
            if num::Zero::is_zero(&chi) {
                continue;
            }
            let sub: Vec<Scalar> = a.iter().map(|&i| lt[i].clone()).collect();
            let h = h_complete(m as i64 + 1 - k as i64, &sub, mode);
            let weight: i64 = a.iter().map(|&i| prof.multiplicities[i] as i64).product();
            acc += &(&(&coef * &h) * &rat_scalar(mode, chi)).scale_int(weight);
        }
        coef = &coef * &neg;
    }
    Ok(acc.scale_int(dimension(tau) as i64))
}

/// Eigenvalue on the `(N-k, k)` isotype of `V_λ` for
/// `λ = (a^{N-η}, b^η)`.
pub fn eig_two_block(
    n: usize,
    eta: usize,
    a: u32,
    b: u32,
    m: u32,
    k: usize,
    mode: &ThetaMode,
) -> Result<Scalar> {
    check_m(m)?;
    if a <= b {
        return Err(Error::InvalidArgument(format!("need a > b, got a={a}, b={b}")));
    }
    if eta > n || k > eta.min(n - eta) {
        return Err(Error::InvalidArgument(format!(
            "need η <= N and k <= min(η, N-η); got N={n}, η={eta}, k={k}"
        )));
    }
    let x = mode.linear(a as i64, eta as i64);
    let y = mode.int(b as i64);
    let xm = x.pow(m);
    let ym = y.pow(m);
    // (x^m - y^m)/(x - y) without division
    let ratio = h_complete(m as i64 - 1, &[x, y], mode);
    let (n_, eta_, k_) = (n as i64, eta as i64, k as i64);
    let factor = eta_ * (n_ - eta_) - k_ * (n_ - k_ + 1);
    let theta = mode.theta();
    Ok(&(&xm.scale_int(n_ - eta_) + &ym.scale_int(eta_)) - &(&theta * &ratio).scale_int(factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn m1_gives_degree() {
        let s = ThetaMode::Symbolic;
        for l in ["3,1,0", "2,2,1", "4"] {
            let lam = part(l);
            assert_eq!(eig_sym_closed(&lam, 1, 3, &s).unwrap(), s.int(lam.size() as i64));
        }
    }

    #[test]
    fn closed_examples() {
        let one = ThetaMode::specialized(1, 1);
        assert_eq!(eig_sym_closed(&part("1,1,0"), 2, 3, &one).unwrap(), one.int(4));
        let s = ThetaMode::Symbolic;
        let v = eig_sym_closed(&part("2,0"), 2, 2, &s).unwrap();
        let two_t = s.linear(2, 1);
        assert_eq!(v, &two_t.pow(2) - &(&s.theta() * &two_t));
        assert_eq!(v.to_string(), "2*θ + 4");
    }

    #[test]
    fn series_examples() {
        let one = ThetaMode::specialized(1, 1);
        let s = eig_sym_series(&part("1,1,0"), 3, 3, &one).unwrap();
        assert_eq!(s[0], one.int(3));
        assert_eq!(s[2], one.int(4));
        let sym = ThetaMode::Symbolic;
        let z = eig_sym_series(&Partition::empty(), 4, 4, &sym).unwrap();
        assert_eq!(z[0], sym.int(4));
        assert!(z[1..].iter().all(Scalar::is_zero));
        assert!(eig_sym_series(&part("1"), 2, 2, &ThetaMode::specialized(0, 1)).is_err());
    }

    #[test]
    fn weighted_form_matches() {
        let s = ThetaMode::Symbolic;
        for (l, n) in [("2,2,1", 4), ("3,1,1", 3), ("1,1", 4), ("2,1", 3)] {
            for m in 1..=4 {
                assert_eq!(
                    eig_sym_weighted_form(&part(l), m, n, &s).unwrap(),
                    eig_sym_closed(&part(l), m, n, &s).unwrap()
                );
            }
        }
    }

    #[test]
    fn trace_examples() {
        let s = ThetaMode::Symbolic;
        let t = trace_isotypic_closed(&part("2,1,0"), &part("2,1"), 1, 3, &s).unwrap();
        assert_eq!(t, s.linear(12, 12));
        let one = ThetaMode::specialized(1, 1);
        let t = trace_isotypic_closed(&part("1,1,0"), &part("2,1"), 2, 3, &one).unwrap();
        assert_eq!(t, one.int(20));
        let t = trace_isotypic_closed(&part("2,1,0"), &part("1,1,1"), 1, 3, &s).unwrap();
        assert_eq!(t, s.linear(3, 6));
        let t = trace_isotypic_closed(&part("2,2,0"), &part("1,1,1"), 3, 3, &s).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn two_block_examples() {
        let one = ThetaMode::specialized(1, 1);
        assert_eq!(eig_two_block(3, 1, 1, 0, 2, 1, &one).unwrap(), one.int(10));
        assert_eq!(eig_two_block(3, 1, 1, 0, 2, 0, &one).unwrap(), one.int(4));
        assert_eq!(eig_two_block(3, 1, 1, 0, 1, 1, &one).unwrap(), one.int(5));
        let s = ThetaMode::Symbolic;
        assert_eq!(
            eig_two_block(4, 2, 3, 1, 3, 0, &s).unwrap(),
            eig_sym_closed(&part("3,3,1,1"), 3, 4, &s).unwrap()
        );
    }
}
