//! Differential criteria for the additive and multiplicative special forms.
//!
//! With `ρ = f_u / f_v`, the test function is `∂/∂u (ρ_v / ρ)`, i.e. the
//! mixed second derivative of `log ρ`. Logarithmic derivatives are rational,
//! so everything stays inside `RatFunc` and the zero test is exact.

use std::fmt;

use crate::poly::{MultiPoly, RatFunc, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormVerdict {
    SpecialForm,
    /// Carries the nonzero numerator of the test function.
    NotSpecialForm { witness: MultiPoly },
    Degenerate { reason: String },
}

impl FormVerdict {
    pub fn is_special(&self) -> bool {
        matches!(self, FormVerdict::SpecialForm)
    }

    pub fn label(&self) -> &'static str {
        match self {
            FormVerdict::SpecialForm => "special-form",
            FormVerdict::NotSpecialForm { .. } => "not-special-form",
            FormVerdict::Degenerate { .. } => "degenerate",
        }
    }
}

impl fmt::Display for FormVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormVerdict::SpecialForm => write!(f, "special form"),
            FormVerdict::NotSpecialForm { witness } => {
                write!(f, "not special form (numerator {witness})")
            }
            FormVerdict::Degenerate { reason } => write!(f, "degenerate: {reason}"),
        }
    }
}

/// The test function for the variable pair `(u, v)`:
/// `q_f` for `(x, y)`, `r_f` for `(x, z)`, `s_f` for `(y, z)`.
///
/// Returns `Err(reason)` when `f_u` or `f_v` vanishes identically.
pub fn qf(f: &MultiPoly, u: Var, v: Var) -> Result<RatFunc, String> {
    let fu = f.derivative(u);
    let fv = f.derivative(v);
    if fv.is_zero() {
        return Err(format!("f is constant in {v}"));
    }
    if fu.is_zero() {
        return Err(format!("f is constant in {u}"));
    }
    // ρ_v / ρ = ∂_v log f_u − ∂_v log f_v
    let dlog = |p: &MultiPoly| RatFunc::new(p.derivative(v), p.clone()).expect("nonzero");
    let log_deriv = dlog(&fu).sub(&dlog(&fv));
    Ok(log_deriv.derivative(u))
}

/// Verdict of the `(u, v)` test.
pub fn pair_verdict(f: &MultiPoly, u: Var, v: Var) -> FormVerdict {
    match qf(f, u, v) {
        Err(reason) => FormVerdict::Degenerate { reason },
        Ok(q) if q.is_zero() => FormVerdict::SpecialForm,
        Ok(q) => FormVerdict::NotSpecialForm {
            witness: q.numerator().clone(),
        },
    }
}

/// Two-variable criterion in `x, y`.
pub fn classify_two_var(f: &MultiPoly) -> FormVerdict {
    pair_verdict(f, Var::X, Var::Y)
}

/// `q_f`, `r_f`, `s_f` for `f` in `x, y, z`.
pub fn classify_three_var(f: &MultiPoly) -> [(Var, Var, FormVerdict); 3] {
    [(Var::X, Var::Y), (Var::X, Var::Z), (Var::Y, Var::Z)]
        .map(|(u, v)| (u, v, pair_verdict(f, u, v)))
}

/// `r(y, z) = l(y) + m(z)` exactly when `∂²r/∂y∂z ≡ 0`.
pub fn is_additively_separable(r: &MultiPoly) -> bool {
    separable_add(r, Var::Y, Var::Z)
}

pub fn separable_add(r: &MultiPoly, u: Var, v: Var) -> bool {
    r.derivative(u).derivative(v).is_zero()
}

/// `R(y, z) = L(y)·M(z)` exactly when `R·R_yz − R_y·R_z ≡ 0`.
pub fn is_multiplicatively_separable(r: &MultiPoly) -> bool {
    separable_mul(r, Var::Y, Var::Z)
}

pub fn separable_mul(r: &MultiPoly, u: Var, v: Var) -> bool {
    if r.is_zero() {
        return false;
    }
    let ru = r.derivative(u);
    let rv = r.derivative(v);
    let ruv = ru.derivative(v);
    (&(r * &ruv) - &(&ru * &rv)).is_zero()
}
