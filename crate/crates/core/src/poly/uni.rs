use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::multi::MultiPoly;
use super::scalar::{self, Scalar};
use super::var::{Monomial, Var};

/// Univariate polynomial over ℚ in one declared variable, stored densely
/// in ascending degree with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        UniPoly::new(var, coeffs.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        UniPoly::new(var, Vec::new())
    }

    pub fn constant(var: Var, c: Scalar) -> Self {
        UniPoly::new(var, vec![c])
    }

    /// The identity map `v ↦ v`.
    pub fn identity(var: Var) -> Self {
        UniPoly::new(var, vec![Scalar::zero(), Scalar::one()])
    }

    pub fn monomial(var: Var, deg: usize, c: Scalar) -> Self {
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(&self, var: Var) -> UniPoly {
        UniPoly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * scalar::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::constant(self.var, Scalar::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self ∘ inner`, expressed in the variable of `inner`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(inner.var, c.clone());
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.var), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(self.var, quot), UniPoly::new(self.var, rem))
    }

    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(self.var, i as u32), c.clone())),
        )
    }

    /// Views `p` as univariate in `var`; `None` if another variable occurs.
    pub fn from_multi(p: &MultiPoly, var: Var) -> Option<UniPoly> {
        if p.vars().iter().any(|&v| v != var) {
            return None;
        }
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Some(UniPoly::new(var, coeffs))
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            self.var,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            self.var,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_multi().fmt(f)
    }
}
