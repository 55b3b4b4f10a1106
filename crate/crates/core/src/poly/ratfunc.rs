use std::fmt;

use super::gcd::gcd;
use super::multi::MultiPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials. The denominator is nonzero and has
/// leading coefficient 1 under the term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFunc::from_poly(MultiPoly::zero()));
        }
        let g = gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_constant().then_some(&self.num)
    }

    fn build(num: MultiPoly, den: MultiPoly) -> RatFunc {
        RatFunc::new(num, den).expect("denominator stays nonzero")
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::build(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc::build(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::build(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<RatFunc> {
        let (n, d) = (self.num.pow(e.unsigned_abs() as u32), self.den.pow(e.unsigned_abs() as u32));
        if e >= 0 {
            RatFunc::new(n, d)
        } else {
            RatFunc::new(d, n)
        }
    }

    /// Quotient rule.
    pub fn derivative(&self, v: Var) -> RatFunc {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        RatFunc::build(n, self.den.pow(2))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
