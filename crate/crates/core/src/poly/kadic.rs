use num_traits::Zero;

use super::multi::MultiPoly;
use super::uni::UniPoly;
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// Expansion of `F` in powers of an inner polynomial `k(x)`:
/// `F = Σ_j D_j · k(x)^j` with every digit `D_j` of `x`-degree below `deg k`.
///
/// Grouping the digits by powers of `x` gives the unique form
/// `F = Σ_{i < deg k} a_i(k(x), ·) · x^i`. `F` is pure when every digit is
/// free of `x`, i.e. `F = Σ w_m · k(x)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KadicExpansion {
    inner: UniPoly,
    digits: Vec<MultiPoly>,
}

/// Splits a polynomial given as `x`-coefficients into quotient and remainder
/// by `k`, whose coefficients are scalars.
fn divide_by_inner(coeffs: &[MultiPoly], k: &UniPoly) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let dk = k.degree().expect("nonzero inner");
    if coeffs.len() <= dk {
        return (Vec::new(), coeffs.to_vec());
    }
    let lc_inv = k.leading_coeff().recip();
    let mut rem = coeffs.to_vec();
    let mut quot = vec![MultiPoly::zero(); rem.len() - dk];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dk].scale(&lc_inv);
        if c.is_zero() {
            continue;
        }
        for (j, kc) in k.coeffs().iter().enumerate() {
            if !kc.is_zero() {
                rem[i + j] = &rem[i + j] - &c.scale(kc);
            }
        }
        quot[i] = c;
    }
    rem.truncate(dk);
    while quot.last().is_some_and(MultiPoly::is_zero) {
        quot.pop();
    }
    (quot, rem)
}

/// Computes the `k`-adic expansion of `f` in the variable of `k`.
pub fn kadic_expansion(f: &MultiPoly, k: &UniPoly) -> Result<KadicExpansion> {
    if k.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(
            "inner polynomial must have degree at least 1".into(),
        ));
    }
    let x = k.var();
    let mut current = f.coefficients_in(x);
    let mut digits = Vec::new();
    while !current.is_empty() {
        let (q, r) = divide_by_inner(&current, k);
        digits.push(MultiPoly::from_coefficients_in(x, &r));
        current = q;
    }
    Ok(KadicExpansion {
        inner: k.clone(),
        digits,
    })
}

impl KadicExpansion {
    pub fn inner(&self) -> &UniPoly {
        &self.inner
    }

    /// `D_j` for `j = 0, 1, …`; empty for `F = 0`.
    pub fn digits(&self) -> &[MultiPoly] {
        &self.digits
    }

    pub fn is_pure(&self) -> bool {
        let x = self.inner.var();
        self.digits.iter().all(|d| !d.contains_var(x))
    }

    /// `w_m` with `F = Σ w_m · k^m`, when the expansion is pure.
    pub fn pure_coefficients(&self) -> Option<&[MultiPoly]> {
        self.is_pure().then_some(self.digits.as_slice())
    }

    /// `a_0, …, a_{deg k − 1}` with `placeholder` standing for `k(x)`.
    pub fn coefficients(&self, placeholder: Var) -> Result<Vec<MultiPoly>> {
        let x = self.inner.var();
        if placeholder == x || self.digits.iter().any(|d| d.contains_var(placeholder)) {
            return Err(Error::InvalidArgument(format!(
                "placeholder {placeholder} already occurs in the expansion"
            )));
        }
        let dk = self.inner.degree().unwrap_or(0);
        let mut out = vec![MultiPoly::zero(); dk];
        for (j, digit) in self.digits.iter().enumerate() {
            for (i, c) in digit.coefficients_in(x).into_iter().enumerate() {
                let shifted = c.mul_monomial(&Monomial::var(placeholder, j as u32), &num_traits::One::one());
                out[i] = &out[i] + &shifted;
            }
        }
        Ok(out)
    }

    /// `Σ D_j · k^j`.
    pub fn rebuild(&self) -> MultiPoly {
        let k = self.inner.to_multi();
        let mut acc = MultiPoly::zero();
        for d in self.digits.iter().rev() {
            acc = &(&acc * &k) + d;
        }
        acc
    }
}

/// Substitutes `k(x)` for `placeholder` in each `a_i` and sums `a_i · x^i`.
pub fn rebuild_from_coefficients(coeffs: &[MultiPoly], k: &UniPoly, placeholder: Var) -> MultiPoly {
    let x = k.var();
    let km = k.to_multi();
    coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(), |acc, (i, a)| {
            let term = a
                .compose(placeholder, &km)
                .mul_monomial(&Monomial::var(x, i as u32), &num_traits::One::one());
            &acc + &term
        })
}

/// Convenience for scalar digits: the outer polynomial `g` with `f = g ∘ k`,
/// if `f` lies in `ℚ[k]`.
pub fn outer_if_pure_scalar(exp: &KadicExpansion, var: Var) -> Option<UniPoly> {
    let w = exp.pure_coefficients()?;
    let mut coeffs = Vec::with_capacity(w.len());
    for d in w {
        coeffs.push(d.constant_value()?);
    }
    if coeffs.iter().all(Zero::is_zero) {
        return Some(UniPoly::zero(var));
    }
    Some(UniPoly::new(var, coeffs))
}
