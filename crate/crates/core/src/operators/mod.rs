//! Dunkl operators, the Heckman–Polychronakos family `P_m`, the triangular
//! truncations `T_i`, the CMS operator and the Dunkl pairing.
//!
//! Variable indices are zero-based throughout the library.

use std::collections::HashMap;

use crate::arith::{ExactMatrix, Scalar, ThetaMode};
use crate::error::{Error, Result};
use crate::poly::{Exponents, MultiPoly, Permutation, VLambda};
use crate::settings::{Mutation, Settings};

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    Ok(())
}

/// Add `sign * (x_i^p x_j^q - x_i^q x_j^p)/(x_i - x_j)` times the rest of
/// `e`, with `p = e_i`, `q = e_j`.
fn push_divided_difference(out: &mut MultiPoly, e: &Exponents, i: usize, j: usize, c: &Scalar) {
    let (p, q) = (e.get(i), e.get(j));
    if p > q {
        for t in 0..p - q {
            out.add_term(e.with_pair(i, p - 1 - t, j, q + t), c);
        }
    } else if q > p {
        let neg = -c;
        for t in 0..q - p {
            out.add_term(e.with_pair(i, q - 1 - t, j, p + t), &neg);
        }
    }
}

/// `(f - (i,j) f) / (x_i - x_j)`, computed term by term.
pub fn divided_difference(i: usize, j: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f.nvars())?;
    check_index(j, f.nvars())?;
    if i == j {
        return Err(Error::InvalidArgument(
            "divided difference needs two distinct indices".into(),
        ));
    }
    let mut out = MultiPoly::zero(f.nvars(), f.mode());
    for (e, c) in f.terms() {
        push_divided_difference(&mut out, e, i, j, c);
    }
    Ok(out)
}

/// `Δ_i = Σ_{j≠i} (1 - (i,j)) / (x_i - x_j)`.
pub fn apply_delta(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    check_index(i, f.nvars())?;
    let mut out = MultiPoly::zero(f.nvars(), f.mode());
    for (e, c) in f.terms() {
        for j in (0..f.nvars()).filter(|&j| j != i) {
            push_divided_difference(&mut out, e, i, j, c);
        }
    }
    Ok(out)
}

/// The Dunkl operator `D_i = ∂_i + θ Δ_i`.
pub fn apply_dunkl(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let delta = apply_delta(i, f)?;
    let mut out = f.partial(i);
    out.add_assign(&delta.scale(&f.mode().theta()));
    Ok(out)
}

/// `x_i D_i`.
pub fn apply_xd(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    Ok(apply_dunkl(i, f)?.mul_var(i))
}

/// `(x_i D_i)^m`.
pub fn apply_xd_pow(i: usize, m: u32, f: &MultiPoly) -> Result<MultiPoly> {
    let mut g = f.clone();
    for _ in 0..m {
        g = apply_xd(i, &g)?;
    }
    Ok(g)
}

/// `P_m = Σ_i (x_i D_i)^m`.
pub fn apply_p(m: u32, f: &MultiPoly) -> Result<MultiPoly> {
    if m < 1 {
        return Err(Error::InvalidArgument("P_m needs m >= 1".into()));
    }
    let mut out = MultiPoly::zero(f.nvars(), f.mode());
    for i in 0..f.nvars() {
        out.add_assign(&apply_xd_pow(i, m, f)?);
    }
    Ok(out)
}

/// Coefficients of `T_i x^γ` as (exponent, scalar) pairs.
fn t_terms(
    i: usize,
    e: &Exponents,
    mode: &ThetaMode,
    settings: &Settings,
) -> Vec<(Exponents, Scalar)> {
    let g = e.as_slice();
    let gi = g[i];
    let mut below = g.iter().filter(|&&x| x < gi).count() as i64;
    if settings.mutated(Mutation::TDiagonal) {
        below += 1;
    }
    let theta = mode.theta();
    let mut out = Vec::with_capacity(g.len());
    let diag = &mode.int(gi as i64) + &theta.scale_int(below);
    out.push((e.clone(), diag));
    let neg = -&theta;
    for (j, &gj) in g.iter().enumerate() {
        if gj > gi {
            out.push((e.swapped(i, j), neg.clone()));
        }
    }
    out
}

/// `T_i` with default settings.
pub fn apply_t(i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    apply_t_with(i, f, &Settings::default())
}

pub fn apply_t_with(i: usize, f: &MultiPoly, settings: &Settings) -> Result<MultiPoly> {
    check_index(i, f.nvars())?;
    let mut out = MultiPoly::zero(f.nvars(), f.mode());
    for (e, c) in f.terms() {
        for (e2, c2) in t_terms(i, e, f.mode(), settings) {
            out.add_term(e2, &(c * &c2));
        }
    }
    Ok(out)
}

/// `Σ_i T_i^m`.
pub fn apply_t_power_sum(m: u32, f: &MultiPoly, settings: &Settings) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(f.nvars(), f.mode());
    for i in 0..f.nvars() {
        let mut g = f.clone();
        for _ in 0..m {
            g = apply_t_with(i, &g, settings)?;
        }
        out.add_assign(&g);
    }
    Ok(out)
}

/// The CMS operator `Σ (x_i∂_i)² + θ Σ_{i≠j} x_i(x_i+x_j)/(x_i-x_j) ∂_i` on
/// a symmetric polynomial. The `(i,j)` and `(j,i)` terms are combined into
/// `(x_i+x_j)(x_i∂_i - x_j∂_j)f / (x_i-x_j)`, which divides exactly.
pub fn apply_cms(f: &MultiPoly) -> Result<MultiPoly> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.nvars();
    let mode = f.mode();
    let euler: Vec<MultiPoly> = (0..n).map(|i| f.partial(i).mul_var(i)).collect();
    let mut out = MultiPoly::zero(n, mode);
    for (i, ei) in euler.iter().enumerate() {
        out.add_assign(&ei.partial(i).mul_var(i));
    }
    let theta = mode.theta();
    for i in 0..n {
        for j in i + 1..n {
            let q = euler[i].sub(&euler[j]).div_by_difference(i, j)?;
            let s = q.mul_var(i).add(&q.mul_var(j));
            out.add_assign(&s.scale(&theta));
        }
    }
    Ok(out)
}

/// `⟨f, g⟩ = f(D_1, …, D_N) g` evaluated at `x = 0`.
pub fn dunkl_pairing(f: &MultiPoly, g: &MultiPoly) -> Result<Scalar> {
    if f.nvars() != g.nvars() {
        return Err(Error::SizeMismatch(format!(
            "pairing of polynomials in {} and {} variables",
            f.nvars(),
            g.nvars()
        )));
    }
    if f.mode() != g.mode() {
        return Err(Error::ModeMismatch("dunkl_pairing".into()));
    }
    let mode = f.mode();
    let mut total = mode.zero();
    let mut cache: HashMap<u32, MultiPoly> = HashMap::new();
    for (e, c) in f.terms() {
        let d = e.degree();
        let gd = cache.entry(d).or_insert_with(|| g.homogeneous_part(d));
        if gd.is_zero() {
            continue;
        }
        let mut h = gd.clone();
        for (i, &k) in e.as_slice().iter().enumerate() {
            for _ in 0..k {
                h = apply_dunkl(i, &h)?;
                if h.is_zero() {
                    break;
                }
            }
        }
        total += &(c * &h.constant_term());
    }
    Ok(total)
}

/// Matrix of `T_i` on `V_λ` in the basis order of `vl`.
pub fn t_matrix(vl: &VLambda, i: usize, mode: &ThetaMode, settings: &Settings) -> Result<ExactMatrix> {
    check_index(i, vl.nvars())?;
    let d = vl.dim();
    let mut m = ExactMatrix::zeros(d, d, mode);
    for (col, e) in vl.basis().iter().enumerate() {
        for (e2, c) in t_terms(i, e, mode, settings) {
            let row = vl.index_of(&e2).expect("T_i preserves V_λ");
            m.add_to(row, col, &c);
        }
    }
    Ok(m)
}

/// Matrix of `Σ_i T_i^m` on `V_λ`, built column by column from sparse
/// applications of `T_i`.
pub fn t_power_sum_matrix(
    vl: &VLambda,
    m: u32,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<ExactMatrix> {
    let d = vl.dim();
    let mut mat = ExactMatrix::zeros(d, d, mode);
    for (col, e) in vl.basis().iter().enumerate() {
        let img = apply_t_power_sum(m, &MultiPoly::monomial(e.clone(), mode.one(), mode), settings)?;
        for (e2, c) in img.terms() {
            let row = vl.index_of(e2).expect("T_i preserves V_λ");
            mat.set(row, col, c.clone());
        }
    }
    Ok(mat)
}

/// Matrix of `T_i^m` on `V_λ`.
pub fn t_power_matrix(
    vl: &VLambda,
    i: usize,
    m: u32,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<ExactMatrix> {
    check_index(i, vl.nvars())?;
    let d = vl.dim();
    let mut mat = ExactMatrix::zeros(d, d, mode);
    for (col, e) in vl.basis().iter().enumerate() {
        let mut g = MultiPoly::monomial(e.clone(), mode.one(), mode);
        for _ in 0..m {
            g = apply_t_with(i, &g, settings)?;
        }
        for (e2, c) in g.terms() {
            let row = vl.index_of(e2).expect("T_i preserves V_λ");
            mat.set(row, col, c.clone());
        }
    }
    Ok(mat)
}

/// Matrix of a permutation acting on `V_λ`.
pub fn permutation_matrix(vl: &VLambda, sigma: &Permutation, mode: &ThetaMode) -> ExactMatrix {
    let d = vl.dim();
    let mut m = ExactMatrix::zeros(d, d, mode);
    for (col, e) in vl.basis().iter().enumerate() {
        let row = vl.index_of(&sigma.act(e)).expect("permutations preserve V_λ");
        m.set(row, col, mode.one());
    }
    m
}

/// Matrix of `P_m` on the span of `basis` (which must be invariant).
pub fn p_matrix(basis: &[Exponents], m: u32, mode: &ThetaMode) -> Result<ExactMatrix> {
    let index: HashMap<&Exponents, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let d = basis.len();
    let n = basis.first().map(Exponents::len).unwrap_or(0);
    let mut mat = ExactMatrix::zeros(d, d, mode);
    for (col, e) in basis.iter().enumerate() {
        let img = apply_p(m, &MultiPoly::monomial(e.clone(), mode.one(), mode))?;
        for (e2, c) in img.terms() {
            let row = *index.get(e2).ok_or_else(|| {
                Error::Inconsistent(format!("P_{m} leaves the span at monomial {e2} in {n} variables"))
            })?;
            mat.set(row, col, c.clone());
        }
    }
    Ok(mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Partition;

    fn sym() -> ThetaMode {
        ThetaMode::Symbolic
    }

    fn mono(v: &[u32], mode: &ThetaMode) -> MultiPoly {
        MultiPoly::monomial(Exponents::new(v.to_vec()), mode.one(), mode)
    }

    #[test]
    fn divided_difference_examples() {
        let m = sym();
        assert_eq!(divided_difference(0, 1, &mono(&[1, 0], &m)).unwrap(), MultiPoly::one(2, &m));
        assert!(divided_difference(0, 1, &mono(&[1, 1], &m)).unwrap().is_zero());
        let want = mono(&[1, 0], &m).add(&mono(&[0, 1], &m));
        assert_eq!(divided_difference(0, 1, &mono(&[2, 0], &m)).unwrap(), want);
        assert!(divided_difference(1, 1, &mono(&[2, 0], &m)).is_err());
    }

    #[test]
    fn divided_difference_identity() {
        let m = sym();
        let f = mono(&[3, 1, 2], &m).add(&mono(&[0, 4, 1], &m).scale(&m.int(-2)));
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            let g = divided_difference(i, j, &f).unwrap();
            let lhs = g.mul_var(i).sub(&g.mul_var(j));
            let rhs = f.sub(&f.permute(&Permutation::transposition(3, i, j)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dunkl_examples() {
        let m = sym();
        let d = apply_dunkl(0, &mono(&[1, 0], &m)).unwrap();
        assert_eq!(d, MultiPoly::constant(2, m.linear(1, 1), &m));
        let d = apply_dunkl(0, &mono(&[0, 1], &m)).unwrap();
        assert_eq!(d, MultiPoly::constant(2, m.linear(0, -1), &m));
        assert!(apply_dunkl(1, &MultiPoly::one(2, &m)).unwrap().is_zero());
        assert!(apply_dunkl(2, &MultiPoly::one(2, &m)).is_err());
    }

    #[test]
    fn p_examples() {
        let m = sym();
        let f = mono(&[1, 1, 1], &m);
        assert_eq!(apply_p(1, &f).unwrap(), f.scale(&m.int(3)));
        let p1 = apply_p(1, &mono(&[1, 0], &m)).unwrap();
        let want = mono(&[1, 0], &m)
            .scale(&m.linear(1, 1))
            .add(&mono(&[0, 1], &m).scale(&m.linear(0, -1)));
        assert_eq!(p1, want);
        let m1 = mono(&[1, 0], &m).add(&mono(&[0, 1], &m));
        assert_eq!(apply_p(2, &m1).unwrap(), m1.scale(&m.linear(1, 1)));
        assert!(apply_p(0, &m1).is_err());
    }

    #[test]
    fn t_examples() {
        let m = sym();
        let t = apply_t(0, &mono(&[1, 2, 0], &m)).unwrap();
        let want = mono(&[1, 2, 0], &m)
            .scale(&m.linear(1, 1))
            .add(&mono(&[2, 1, 0], &m).scale(&m.linear(0, -1)));
        assert_eq!(t, want);
        let t = apply_t(1, &mono(&[2, 0], &m)).unwrap();
        assert_eq!(t, mono(&[0, 2], &m).scale(&m.linear(0, -1)));
        let f = mono(&[3, 3, 3], &m);
        assert_eq!(apply_t(2, &f).unwrap(), f.scale(&m.int(3)));
    }

    #[test]
    fn cms_examples() {
        let m = sym();
        let m1 = mono(&[1, 0], &m).add(&mono(&[0, 1], &m));
        assert_eq!(apply_cms(&m1).unwrap(), m1.scale(&m.linear(1, 1)));
        assert!(apply_cms(&MultiPoly::one(2, &m)).unwrap().is_zero());
        let t1 = ThetaMode::specialized(1, 1);
        let m11 = crate::poly::monomial_symmetric(&"1,1".parse().unwrap(), 3, &t1).unwrap();
        assert_eq!(apply_cms(&m11).unwrap(), m11.scale(&t1.int(4)));
        assert_eq!(apply_cms(&mono(&[1, 0], &m)), Err(Error::NotSymmetric));
    }

    #[test]
    fn pairing_examples() {
        let m = sym();
        let x1 = mono(&[1, 0], &m);
        let x2 = mono(&[0, 1], &m);
        assert_eq!(dunkl_pairing(&x1, &x1).unwrap(), m.linear(1, 1));
        assert_eq!(dunkl_pairing(&x1, &x2).unwrap(), m.linear(0, -1));
        assert_eq!(dunkl_pairing(&MultiPoly::one(2, &m), &MultiPoly::one(2, &m)).unwrap(), m.one());
        assert!(dunkl_pairing(&x1, &MultiPoly::one(2, &m)).unwrap().is_zero());
    }

    #[test]
    fn delta_examples() {
        let m = sym();
        assert_eq!(apply_delta(0, &mono(&[1, 0], &m)).unwrap(), MultiPoly::one(2, &m));
        assert_eq!(
            apply_delta(0, &mono(&[0, 1], &m)).unwrap(),
            MultiPoly::constant(2, m.int(-1), &m)
        );
    }

    #[test]
    fn t_sum_matrix_on_v110() {
        let m = ThetaMode::specialized(1, 1);
        let vl = VLambda::new(&Partition::new(vec![1, 1, 0]).unwrap(), 3).unwrap();
        let mat = t_power_sum_matrix(&vl, 2, &m, &Settings::default()).unwrap();
        let want = ExactMatrix::from_ints(&[&[8, -2, -2], &[-2, 8, -2], &[-2, -2, 8]], &m).unwrap();
        assert_eq!(mat, want);
    }
}
