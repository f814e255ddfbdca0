use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::qpoly::{fmt_rational, ThetaPoly};
use crate::error::{Error, Result};

/// Reduced rational function in θ over the rationals.
///
/// Canonical form: `gcd(num, den) = 1` and `den` monic, so two values are
/// equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaRational {
    num: ThetaPoly,
    den: ThetaPoly,
}

impl ThetaRational {
    pub fn zero() -> Self {
        Self::from_poly(ThetaPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ThetaPoly::one())
    }

    pub fn theta() -> Self {
        Self::from_poly(ThetaPoly::x())
    }

    pub fn from_poly(num: ThetaPoly) -> Self {
        ThetaRational {
            num,
            den: ThetaPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(ThetaPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(ThetaPoly::from_int(c))
    }

    /// Bring `num / den` into canonical form.
    pub fn reduce(num: ThetaPoly, den: ThetaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let c = den.constant_term().recip();
            return Ok(Self::from_poly(num.scale(&c)));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading().expect("nonzero").recip();
        Ok(ThetaRational {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn numer(&self) -> &ThetaPoly {
        &self.num
    }

    pub fn denom(&self) -> &ThetaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value, if the function does not depend on θ.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.constant_term())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading().unwrap().recip();
        Ok(ThetaRational {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    /// Substitute θ = θ₀.
    pub fn evaluate_at(&self, theta: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(theta);
        if d.is_zero() {
            return Err(Error::Pole {
                theta: fmt_rational(theta),
                denominator: self.den.to_string(),
            });
        }
        Ok(self.num.eval(theta) / d)
    }

    pub fn pow(&self, e: u32) -> Self {
        ThetaRational {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ThetaRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl From<ThetaPoly> for ThetaRational {
    fn from(p: ThetaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for ThetaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &ThetaRational {
    type Output = ThetaRational;
    fn add(self, rhs: &ThetaRational) -> ThetaRational {
        if self.den.is_one() && rhs.den.is_one() {
            return ThetaRational::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return ThetaRational::reduce(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ThetaRational::reduce(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &ThetaRational {
    type Output = ThetaRational;
    fn sub(self, rhs: &ThetaRational) -> ThetaRational {
        self + &(-rhs)
    }
}

impl Neg for &ThetaRational {
    type Output = ThetaRational;
    fn neg(self) -> ThetaRational {
        ThetaRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ThetaRational {
    type Output = ThetaRational;
    fn mul(self, rhs: &ThetaRational) -> ThetaRational {
        if self.is_zero() || rhs.is_zero() {
            return ThetaRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ThetaRational::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel so that the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().unwrap().recip();
        ThetaRational {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl Div for &ThetaRational {
    type Output = ThetaRational;
    fn div(self, rhs: &ThetaRational) -> ThetaRational {
        self * &rhs.recip().expect("division by zero")
    }
}

impl Zero for ThetaRational {
    fn zero() -> Self {
        ThetaRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for ThetaRational {
    type Output = ThetaRational;
    fn add(self, rhs: ThetaRational) -> ThetaRational {
        &self + &rhs
    }
}

impl One for ThetaRational {
    fn one() -> Self {
        ThetaRational::one()
    }
}

impl Mul for ThetaRational {
    type Output = ThetaRational;
    fn mul(self, rhs: ThetaRational) -> ThetaRational {
        &self * &rhs
    }
}
