//! Exact scalars (rationals and rational functions of θ) and dense linear
//! algebra over them.

mod matrix;
mod qpoly;
mod scalar;
mod theta_rational;
mod unipoly;

pub use matrix::{eval_descending, ExactMatrix, DEFAULT_SYMBOLIC_CAP};
pub use qpoly::{QPoly, ThetaPoly};
pub use scalar::{parse_rational, parse_theta_poly, parse_theta_rational, Scalar, ThetaMode};
pub use theta_rational::ThetaRational;
pub use unipoly::ScalarPoly;

pub use num::{BigInt, BigRational};

/// Shorthand for a rational from small integers.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Reduce `num / den` to canonical form.
pub fn reduce(num: ThetaPoly, den: ThetaPoly) -> crate::Result<ThetaRational> {
    ThetaRational::reduce(num, den)
}

/// Substitute θ = θ₀ into a rational function.
pub fn evaluate_at_theta(x: &ThetaRational, theta: &BigRational) -> crate::Result<BigRational> {
    x.evaluate_at(theta)
}
