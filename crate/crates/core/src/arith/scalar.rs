use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::{Serialize, Serializer};

use super::qpoly::{fmt_rational, ThetaPoly};
use super::theta_rational::ThetaRational;
use crate::error::{Error, Result};

/// How θ enters a computation: a fixed rational value or a formal variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ThetaMode {
    Specialized(BigRational),
    Symbolic,
}

impl ThetaMode {
    pub fn specialized(num: i64, den: i64) -> Self {
        ThetaMode::Specialized(BigRational::new(num.into(), den.into()))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, ThetaMode::Symbolic)
    }

    pub fn theta(&self) -> Scalar {
        match self {
            ThetaMode::Specialized(t) => Scalar::Rat(t.clone()),
            ThetaMode::Symbolic => Scalar::Sym(ThetaRational::theta()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, c: i64) -> Scalar {
        self.rational(BigRational::from_integer(c.into()))
    }

    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        self.rational(BigRational::new(num.into(), den.into()))
    }

    pub fn rational(&self, c: BigRational) -> Scalar {
        match self {
            ThetaMode::Specialized(_) => Scalar::Rat(c),
            ThetaMode::Symbolic => Scalar::Sym(ThetaRational::from_rational(c)),
        }
    }

    /// Embed a polynomial in θ, evaluating it when θ is specialized.
    pub fn poly(&self, p: &ThetaPoly) -> Scalar {
        match self {
            ThetaMode::Specialized(t) => Scalar::Rat(p.eval(t)),
            ThetaMode::Symbolic => Scalar::Sym(ThetaRational::from_poly(p.clone())),
        }
    }

    /// `c0 + c1 θ`.
    pub fn linear(&self, c0: i64, c1: i64) -> Scalar {
        self.poly(&ThetaPoly::linear(c0, c1))
    }

    /// Specialize a symbolic value to this mode.
    pub fn specialize(&self, x: &Scalar) -> Result<Scalar> {
        match (self, x) {
            (ThetaMode::Symbolic, Scalar::Sym(_)) => Ok(x.clone()),
            (ThetaMode::Specialized(_), Scalar::Rat(_)) => Ok(x.clone()),
            (ThetaMode::Specialized(t), Scalar::Sym(r)) => Ok(Scalar::Rat(r.evaluate_at(t)?)),
            (ThetaMode::Symbolic, Scalar::Rat(_)) => Err(Error::ModeMismatch(
                "cannot lift a specialized value to symbolic mode".into(),
            )),
        }
    }

    pub fn matches(&self, x: &Scalar) -> bool {
        matches!(
            (self, x),
            (ThetaMode::Symbolic, Scalar::Sym(_)) | (ThetaMode::Specialized(_), Scalar::Rat(_))
        )
    }
}

impl fmt::Display for ThetaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaMode::Specialized(t) => f.write_str(&fmt_rational(t)),
            ThetaMode::Symbolic => f.write_str("sym"),
        }
    }
}

impl FromStr for ThetaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("sym") || s == "θ" || s.eq_ignore_ascii_case("symbolic") {
            return Ok(ThetaMode::Symbolic);
        }
        parse_rational(s).map(ThetaMode::Specialized)
    }
}

/// Exact field element: a rational (θ specialized) or a rational function of θ.
///
/// Binary operations between the two variants are a programming error and
/// panic; every value in one computation is built from the same
/// [`ThetaMode`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Sym(ThetaRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Sym(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Sym(r) => r.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rat(_) => Scalar::Rat(BigRational::zero()),
            Scalar::Sym(_) => Scalar::Sym(ThetaRational::zero()),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rat(_) => Scalar::Rat(BigRational::one()),
            Scalar::Sym(_) => Scalar::Sym(ThetaRational::one()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Sym(_) => None,
        }
    }

    pub fn as_theta_rational(&self) -> Option<&ThetaRational> {
        match self {
            Scalar::Sym(r) => Some(r),
            Scalar::Rat(_) => None,
        }
    }

    /// Rational constant, if the value does not involve θ.
    pub fn constant(&self) -> Option<BigRational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Sym(r) => r.as_constant(),
        }
    }

    pub fn checked_inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Sym(r) => r.recip().map(Scalar::Sym),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(num::pow(r.clone(), e as usize)),
            Scalar::Sym(r) => Scalar::Sym(r.pow(e)),
        }
    }

    pub fn scale_int(&self, c: i64) -> Scalar {
        self.scale(&BigRational::from_integer(c.into()))
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * c),
            Scalar::Sym(r) => Scalar::Sym(r.scale(c)),
        }
    }

    /// Denominator as a polynomial in θ (1 for rationals).
    pub fn theta_denominator(&self) -> ThetaPoly {
        match self {
            Scalar::Rat(_) => ThetaPoly::one(),
            Scalar::Sym(r) => r.denom().clone(),
        }
    }

    /// Parse the canonical text form in the given mode.
    pub fn parse(s: &str, mode: &ThetaMode) -> Result<Scalar> {
        match mode {
            ThetaMode::Specialized(_) => parse_rational(s).map(Scalar::Rat),
            ThetaMode::Symbolic => parse_theta_rational(s).map(Scalar::Sym),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rational(r)),
            Scalar::Sym(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn mismatch() -> ! {
    panic!("mode mismatch: specialized and symbolic scalars combined")
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a $op b),
                    _ => mismatch(),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                &self $op rhs
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Sym(r) => Scalar::Sym(-r),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parse `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Parse a polynomial in θ written in the canonical form, e.g. `θ^2 - 3*θ + 1/2`.
pub fn parse_theta_poly(s: &str) -> Result<ThetaPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (idx, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && idx > 0 && !current.ends_with('^') {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if ch == '-' && idx == 0 {
            negative = true;
        } else if ch == '+' && idx == 0 {
        } else {
            current.push(ch);
        }
    }
    terms.push((negative, current));
    let mut acc = ThetaPoly::zero();
    for (neg, term) in terms {
        let (coeff, power) = parse_term(&term)?;
        let coeff = if neg { -coeff } else { coeff };
        acc = &acc + &ThetaPoly::monomial(coeff, power);
    }
    Ok(acc)
}

fn parse_term(term: &str) -> Result<(BigRational, usize)> {
    let bad = || Error::Parse(format!("invalid term '{term}'"));
    let (coeff, mono) = match term.split_once('*') {
        Some((c, m)) => (parse_rational(c)?, Some(m)),
        None if term.starts_with('θ') => (BigRational::one(), Some(term)),
        None => (parse_rational(term)?, None),
    };
    let power = match mono {
        None => 0,
        Some(m) => {
            let rest = m.strip_prefix('θ').ok_or_else(bad)?;
            if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            }
        }
    };
    Ok((coeff, power))
}

/// Parse `A` or `(A)/(B)` with `A`, `B` polynomials in θ.
pub fn parse_theta_rational(s: &str) -> Result<ThetaRational> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(') {
        if let Some((num, den)) = inner.split_once(")/(") {
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in '{s}'")))?;
            return ThetaRational::reduce(parse_theta_poly(num)?, parse_theta_poly(den)?);
        }
    }
    parse_theta_poly(s).map(ThetaRational::from_poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_constructors() {
        let sym = ThetaMode::Symbolic;
        let half = ThetaMode::specialized(1, 2);
        assert_eq!(half.linear(1, 2).to_string(), "2");
        assert_eq!(sym.linear(1, 2).to_string(), "2*θ + 1");
        assert_eq!(sym.theta().pow(2).to_string(), "θ^2");
        assert_eq!(half.specialize(&sym.linear(0, 4)).unwrap(), half.int(2));
    }

    #[test]
    #[should_panic(expected = "mode mismatch")]
    fn mixing_modes_panics() {
        let _ = ThetaMode::Symbolic.one() + ThetaMode::specialized(1, 1).one();
    }

    #[test]
    fn parse_round_trip() {
        for text in ["θ^2 - 3*θ + 2", "-1/2*θ", "(2*θ)/(θ + 1)", "7", "-θ^3 + θ"] {
            let v = Scalar::parse(text, &ThetaMode::Symbolic).unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert_eq!(
            Scalar::parse("-3/6", &ThetaMode::specialized(1, 1)).unwrap().to_string(),
            "-1/2"
        );
    }

    #[test]
    fn theta_mode_parse() {
        assert_eq!("sym".parse::<ThetaMode>().unwrap(), ThetaMode::Symbolic);
        assert_eq!("5/3".parse::<ThetaMode>().unwrap(), ThetaMode::specialized(5, 3));
        assert!("x".parse::<ThetaMode>().is_err());
    }
}
