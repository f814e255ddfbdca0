use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{Scalar, ThetaMode, ThetaPoly};
use crate::error::{Error, Result};

use super::exponent::Exponents;
use super::partition::Partition;
use super::perm::Permutation;

/// Sparse polynomial in `N` variables with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    mode: ThetaMode,
    terms: BTreeMap<Exponents, Scalar>,
}

/// One term in serialized output.
#[derive(Clone, Debug, Serialize)]
pub struct TermRecord {
    pub exp: Exponents,
    pub coeff: Scalar,
}

impl MultiPoly {
    pub fn zero(nvars: usize, mode: &ThetaMode) -> Self {
        MultiPoly {
            nvars,
            mode: mode.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar, mode: &ThetaMode) -> Self {
        Self::monomial(Exponents::zero(nvars), c, mode)
    }

    pub fn one(nvars: usize, mode: &ThetaMode) -> Self {
        Self::constant(nvars, mode.one(), mode)
    }

    pub fn monomial(exp: Exponents, c: Scalar, mode: &ThetaMode) -> Self {
        let mut p = Self::zero(exp.len(), mode);
        p.add_term(exp, &c);
        p
    }

    /// `x_i` (zero-based).
    pub fn variable(nvars: usize, i: usize, mode: &ThetaMode) -> Self {
        Self::monomial(Exponents::unit(nvars, i), mode.one(), mode)
    }

    pub fn from_terms(
        nvars: usize,
        mode: &ThetaMode,
        terms: impl IntoIterator<Item = (Exponents, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(nvars, mode);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> &ThetaMode {
        &self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponents) -> Scalar {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| self.mode.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Exponents::zero(self.nvars))
    }

    /// Add `c x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponents, c: &Scalar) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars, &self.mode);
        }
        MultiPoly {
            nvars: self.nvars,
            mode: self.mode.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.nvars, &self.mode);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), &(ca * cb));
            }
        }
        out
    }

    /// Multiply by the variable `x_i`.
    pub fn mul_var(&self, i: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            mode: self.mode.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.as_slice().to_vec();
                    v[i] += 1;
                    (Exponents::new(v), c.clone())
                })
                .collect(),
        }
    }

    /// `∂f/∂x_i`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(self.nvars, &self.mode);
        for (e, c) in &self.terms {
            let g = e.get(i);
            if g == 0 {
                continue;
            }
            let mut v = e.as_slice().to_vec();
            v[i] -= 1;
            out.add_term(Exponents::new(v), &c.scale_int(g as i64));
        }
        out
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Exponents::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            mode: self.mode.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `σ f`, substituting `x_i -> x_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            mode: self.mode.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (sigma.act(e), c.clone()))
                .collect(),
        }
    }

    /// Invariance under all adjacent transpositions, which generate `S_N`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms
                .iter()
                .all(|(e, c)| self.terms.get(&e.swapped(i, i + 1)) == Some(c))
        })
    }

    /// Partitions `γ⁺` of the monomials present.
    pub fn support_shapes(&self) -> Vec<Partition> {
        let mut v: Vec<Partition> = self
            .terms
            .keys()
            .map(|e| Partition::from_unsorted(e.as_slice().to_vec()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Exact division by `x_i - x_j`; fails if there is a remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<MultiPoly> {
        // x_i^e = (x_i - x_j) Σ_{t<e} x_i^{e-1-t} x_j^t + x_j^e
        let mut quot = Self::zero(self.nvars, &self.mode);
        let mut rem = Self::zero(self.nvars, &self.mode);
        for (e, c) in &self.terms {
            let (gi, gj) = (e.get(i), e.get(j));
            for t in 0..gi {
                quot.add_term(e.with_pair(i, gi - 1 - t, j, gj + t), c);
            }
            rem.add_term(e.with_pair(i, 0, j, gj + gi), c);
        }
        if !rem.is_zero() {
            return Err(Error::NonExactDivision(format!(
                "remainder after dividing by x{} - x{}",
                i + 1,
                j + 1
            )));
        }
        Ok(quot)
    }

    /// Coefficient-wise substitution of θ.
    pub fn specialize(&self, mode: &ThetaMode) -> Result<MultiPoly> {
        let mut out = Self::zero(self.nvars, mode);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &mode.specialize(c)?);
        }
        Ok(out)
    }

    /// Rescale so that no coefficient has a θ-denominator (symbolic mode),
    /// returning the scaled polynomial and the factor used.
    pub fn clear_theta_denominators(&self) -> (MultiPoly, Scalar) {
        let mut l = ThetaPoly::one();
        for c in self.terms.values() {
            let d = c.theta_denominator();
            if !d.is_one() {
                let g = l.gcd(&d);
                l = (&l * &d).div_exact(&g).expect("gcd divides");
            }
        }
        let factor = self.mode.poly(&l);
        (self.scale(&factor), factor)
    }

    pub fn records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| TermRecord {
                exp: e.clone(),
                coeff: c.clone(),
            })
            .collect()
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending graded-lex order, e.g. `x1^2 + (2*θ)/(θ + 1)*x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = c.to_string();
            // A simple negative coefficient is written as a subtraction.
            let negated = cs.starts_with('-') && !cs.contains(' ');
            if negated {
                cs.remove(0);
            }
            match (k > 0, negated) {
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, true) => f.write_str("-")?,
                (false, false) => {}
            }
            if e.degree() == 0 {
                f.write_str(&cs)?;
            } else if cs == "1" {
                write!(f, "{e}")?;
            } else if cs.contains(' ') && !cs.starts_with('(') {
                write!(f, "({cs})*{e}")?;
            } else {
                write!(f, "{cs}*{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponents {
        Exponents::new(v.to_vec())
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let m = ThetaMode::Symbolic;
        let x1 = MultiPoly::variable(2, 0, &m);
        let x2 = MultiPoly::variable(2, 1, &m);
        let d = x1.sub(&x2);
        let sq = d.mul(&d);
        assert_eq!(sq.len(), 3);
        assert!(sq.sub(&sq).is_zero());
        assert_eq!(sq.div_by_difference(0, 1).unwrap(), d);
        assert!(x1.div_by_difference(0, 1).is_err());
    }

    #[test]
    fn permutation_action() {
        let m = ThetaMode::specialized(1, 1);
        let f = MultiPoly::monomial(e(&[2, 1, 0]), m.one(), &m);
        let c123 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(f.permute(&c123), MultiPoly::monomial(e(&[0, 2, 1]), m.one(), &m));
        assert_eq!(f.permute(&Permutation::identity(3)), f);
        assert!(!f.is_symmetric());
    }

    #[test]
    fn display() {
        let m = ThetaMode::Symbolic;
        let f = MultiPoly::from_terms(
            2,
            &m,
            [(e(&[2, 0]), m.one()), (e(&[1, 1]), m.linear(1, 1)), (e(&[0, 0]), m.int(3))],
        );
        assert_eq!(f.to_string(), "x1^2 + (θ + 1)*x1*x2 + 3");
    }
}
