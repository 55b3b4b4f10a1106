use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};
use super::var::{Monomial, Var, NVARS};

/// Sparse polynomial over ℚ in the variables `{x, y, z, t, w}`.
///
/// Terms are kept in a `BTreeMap` keyed by the graded term order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(scalar::int(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v, 1), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::ONE))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` stands for the −∞ degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables that occur with a positive exponent, in variable order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.contains_var(v))
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
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

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => MultiPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = (c * Scalar::from_integer(den_lcm.clone())).to_integer();
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = Scalar::new(den_lcm, num_gcd);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let i = v.index();
        MultiPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[i];
            if e == 0 {
                return None;
            }
            let mut nm = *m;
            nm.0[i] = e - 1;
            Some((nm, c * scalar::int(e as i64)))
        }))
    }

    /// Substitutes a constant for `v`.
    pub fn substitute(&self, v: Var, value: &Scalar) -> MultiPoly {
        let i = v.index();
        let mut powers: Vec<Scalar> = vec![Scalar::one()];
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut nm = *m;
            nm.0[i] = 0;
            (nm, c * &powers[e])
        }))
    }

    /// Substitutes a polynomial for `v` (functional composition).
    pub fn compose(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coefficients_in(v);
        // Horner in `v`.
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Simultaneous substitution of polynomials for several variables.
    pub fn compose_many(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut cache: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]; subs.len()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut prod = MultiPoly::one();
            for (k, (v, q)) in subs.iter().enumerate() {
                let e = m.exp(*v) as usize;
                rest.0[v.index()] = 0;
                while cache[k].len() <= e {
                    let next = cache[k].last().unwrap() * q;
                    cache[k].push(next);
                }
                prod = &prod * &cache[k][e];
            }
            out = &out + &prod.mul_monomial(&rest, c);
        }
        out
    }

    /// Exact evaluation with one value per variable slot.
    pub fn eval(&self, point: &[Scalar; NVARS]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(point.iter()) {
                if *e > 0 {
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluation in double precision; used only for floating cross-checks.
    pub fn eval_f64(&self, point: &[f64; NVARS]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point.iter())
                    .fold(scalar::to_f64(c), |acc, (e, x)| acc * x.powi(*e as i32))
            })
            .sum()
    }

    /// Coefficients of `self` viewed as a polynomial in `v`: entry `i` is
    /// the coefficient of `v^i`, a polynomial free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![MultiPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].terms.insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.with_exp(v, m.exp(v) + i as u32), a.clone());
            }
        }
        out
    }

    /// Multivariate division by a single divisor under the term order.
    /// Returns `(q, r)` with `self = q*d + r` and no term of `r` divisible
    /// by the leading monomial of `d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let (lm, lc) = d.leading_term().expect("division by zero polynomial");
        let (lm, lc_inv) = (*lm, lc.recip());
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term() {
            let (m, c) = (*m, c.clone());
            match m.div(&lm) {
                Some(qm) => {
                    let qc = &c * &lc_inv;
                    p = &p - &d.mul_monomial(&qm, &qc);
                    q.add_term(qm, qc);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        (q, r)
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Renames variables according to `map` (applied simultaneously).
    pub fn rename(&self, map: &[(Var, Var)]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut nm = *m;
            for (from, _) in map {
                nm.0[from.index()] = 0;
            }
            for (from, to) in map {
                nm.0[to.index()] += m.exp(*from);
            }
            (nm, c.clone())
        }))
    }
}

impl From<Scalar> for MultiPoly {
    fn from(c: Scalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Prints terms from the leading term down, e.g. `x^2 + 2*x*y - 3/7*y`.
/// The output is accepted back by the expression parser.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
