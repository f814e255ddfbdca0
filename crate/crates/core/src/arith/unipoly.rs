use super::qpoly::QPoly;
use super::scalar::{Scalar, ThetaMode};
use crate::error::{Error, Result};

/// Univariate polynomial in `t` with exact scalar coefficients, stored in
/// descending powers (the layout of characteristic polynomials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarPoly {
    coeffs: Vec<Scalar>,
    mode: ThetaMode,
}

impl ScalarPoly {
    pub fn new(mut coeffs: Vec<Scalar>, mode: &ThetaMode) -> Self {
        while coeffs.first().is_some_and(Scalar::is_zero) {
            coeffs.remove(0);
        }
        ScalarPoly {
            coeffs,
            mode: mode.clone(),
        }
    }

    pub fn one(mode: &ThetaMode) -> Self {
        Self::new(vec![mode.one()], mode)
    }

    /// `t - root`.
    pub fn linear_factor(root: &Scalar, mode: &ThetaMode) -> Self {
        Self::new(vec![mode.one(), -root], mode)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new(), &self.mode);
        }
        let mut out = vec![self.mode.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out, &self.mode)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.mode), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.coeffs[0].checked_inv()?;
        let Some(nd) = self.degree() else {
            return Ok((self.clone(), self.clone()));
        };
        if nd < dd {
            return Ok((Self::new(Vec::new(), &self.mode), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = Vec::with_capacity(nd - dd + 1);
        for k in 0..=nd - dd {
            let c = &rem[k] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let upd = &rem[k + j] - &(&c * dc);
                    rem[k + j] = upd;
                }
            }
            quot.push(c);
        }
        let rem = rem.split_off(nd - dd + 1);
        Ok((Self::new(quot, &self.mode), Self::new(rem, &self.mode)))
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Self) -> Result<bool> {
        Ok(self.div_rem(d)?.1.is_zero())
    }

    /// Largest `k` with `(t - root)^k` dividing `self`.
    pub fn root_multiplicity(&self, root: &Scalar) -> Result<usize> {
        let f = Self::linear_factor(root, &self.mode);
        let mut cur = self.clone();
        let mut k = 0;
        while !cur.is_zero() {
            let (q, r) = cur.div_rem(&f)?;
            if !r.is_zero() {
                break;
            }
            cur = q;
            k += 1;
        }
        Ok(k)
    }

    /// Convert to a polynomial over Q (specialized mode only).
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            coeffs.push(c.as_rational()?.clone());
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    pub fn from_qpoly(p: &QPoly, mode: &ThetaMode) -> Self {
        Self::new(
            p.coeffs().iter().rev().map(|c| mode.rational(c.clone())).collect(),
            mode,
        )
    }
}
