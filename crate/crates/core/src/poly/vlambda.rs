use std::collections::HashMap;

use crate::arith::ThetaMode;
use crate::error::Result;

use super::exponent::Exponents;
use super::multipoly::MultiPoly;
use super::partition::Partition;

/// Distinct rearrangements of `λ` padded to `n` entries, in decreasing
/// graded-lex order (so `λ` itself comes first).
pub fn v_lambda_basis(lambda: &Partition, n: usize) -> Result<Vec<Exponents>> {
    let mut cur = lambda.padded(n)?;
    // cur is nonincreasing: the lexicographically largest arrangement.
    let mut out = vec![Exponents::new(cur.clone())];
    while prev_permutation(&mut cur) {
        out.push(Exponents::new(cur.clone()));
    }
    Ok(out)
}

fn prev_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m_λ`: the sum of all monomials in `V_λ`.
pub fn monomial_symmetric(lambda: &Partition, n: usize, mode: &ThetaMode) -> Result<MultiPoly> {
    let basis = v_lambda_basis(lambda, n)?;
    Ok(MultiPoly::from_terms(
        n,
        mode,
        basis.into_iter().map(|e| (e, mode.one())),
    ))
}

/// `V_λ` with its ordered monomial basis and a reverse index.
#[derive(Clone, Debug)]
pub struct VLambda {
    lambda: Partition,
    n: usize,
    basis: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl VLambda {
    pub fn new(lambda: &Partition, n: usize) -> Result<Self> {
        let basis = v_lambda_basis(lambda, n)?;
        let index = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(VLambda {
            lambda: lambda.clone(),
            n,
            basis,
            index,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Exponents] {
        &self.basis
    }

    pub fn index_of(&self, e: &Exponents) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Polynomial with the given coordinates in this basis.
    pub fn to_poly(&self, coords: &[crate::arith::Scalar], mode: &ThetaMode) -> MultiPoly {
        MultiPoly::from_terms(
            self.n,
            mode,
            self.basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }

    /// Coordinates of the `V_λ` part of `f`.
    pub fn coords(&self, f: &MultiPoly) -> Vec<crate::arith::Scalar> {
        self.basis.iter().map(|e| f.coefficient(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(v_lambda_basis(&part("2,1,0"), 3).unwrap().len(), 6);
        assert_eq!(v_lambda_basis(&part("1,1,0"), 3).unwrap().len(), 3);
        assert_eq!(v_lambda_basis(&part("2,2,2"), 3).unwrap().len(), 1);
        assert_eq!(v_lambda_basis(&part("3,3,1"), 5).unwrap().len(), 30);
        assert!(v_lambda_basis(&part("1,1,1"), 2).is_err());
    }

    #[test]
    fn basis_order_descends() {
        let b = v_lambda_basis(&part("2,1,0"), 3).unwrap();
        assert_eq!(b[0], Exponents::new(vec![2, 1, 0]));
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn monomial_symmetric_examples() {
        let m = ThetaMode::specialized(1, 1);
        assert_eq!(monomial_symmetric(&part("1"), 2, &m).unwrap().to_string(), "x1 + x2");
        assert_eq!(
            monomial_symmetric(&part("1,1"), 3, &m).unwrap().to_string(),
            "x1*x2 + x1*x3 + x2*x3"
        );
        assert_eq!(
            monomial_symmetric(&part("2,1"), 2, &m).unwrap().to_string(),
            "x1^2*x2 + x1*x2^2"
        );
    }
}
