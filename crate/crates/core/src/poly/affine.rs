use std::fmt;

use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::uni::UniPoly;
use super::var::Var;
use crate::error::Error;

/// Invertible affine map `t ↦ a·t + b` with `a ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    slope: Scalar,
    intercept: Scalar,
}

impl AffineMap {
    pub fn new(slope: Scalar, intercept: Scalar) -> Result<Self, Error> {
        if slope.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(AffineMap { slope, intercept })
    }

    pub fn identity() -> Self {
        AffineMap {
            slope: Scalar::one(),
            intercept: Scalar::zero(),
        }
    }

    pub fn slope(&self) -> &Scalar {
        &self.slope
    }

    pub fn intercept(&self) -> &Scalar {
        &self.intercept
    }

    pub fn apply(&self, t: &Scalar) -> Scalar {
        &self.slope * t + &self.intercept
    }

    /// `(t − b)/a`.
    pub fn inverse(&self) -> AffineMap {
        let inv = self.slope.recip();
        AffineMap {
            intercept: -(&self.intercept * &inv),
            slope: inv,
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            slope: &self.slope * &inner.slope,
            intercept: &self.slope * &inner.intercept + &self.intercept,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.slope.is_one() && self.intercept.is_zero()
    }

    pub fn to_poly(&self, var: Var) -> UniPoly {
        UniPoly::new(var, vec![self.intercept.clone(), self.slope.clone()])
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(Var::T))
    }
}
