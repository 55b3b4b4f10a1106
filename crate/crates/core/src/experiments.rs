//! Extremal constructions for the special forms and the two-line
//! distinct-distances experiment.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::incidence::{graph_points_2var, graph_points_3var, Axis};
use crate::poly::scalar::{self, Scalar};
use crate::poly::{MultiPoly, Var};
use crate::recovery::{analyze, FormReport};
use crate::structure::{classify_two_var, FormVerdict};

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub name: &'static str,
    pub f: MultiPoly,
    /// `A, B, C` or `A, B, C, D`; the last axis is the target set.
    pub axes: Vec<Axis>,
    pub count: u64,
    pub bound: Scalar,
    pub pass: bool,
    pub analysis: Option<FormReport>,
}

fn finish(name: &'static str, f: MultiPoly, axes: Vec<Axis>, count: u64, bound: Scalar) -> ConstructionResult {
    let pass = scalar::int(count as i64) >= bound;
    ConstructionResult {
        name,
        f,
        axes,
        count,
        bound,
        pass,
        analysis: None,
    }
}

fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}
fn y() -> MultiPoly {
    MultiPoly::var(Var::Y)
}
fn z() -> MultiPoly {
    MultiPoly::var(Var::Z)
}

fn require_at_least_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("size {n} must be at least 2")));
    }
    Ok(())
}

/// `x + y` on `A = B = C = [1, n]`: `n(n−1)/2` graph points against `n²/4`.
pub fn construct_additive(n: usize) -> Result<ConstructionResult> {
    require_at_least_two(n)?;
    let r = Axis::range(1, n as i64);
    let f = &x() + &y();
    let count = graph_points_2var(&f, &r, &r, &r)?;
    let nn = n as i64;
    Ok(finish("additive", f, vec![r.clone(), r.clone(), r], count, scalar::frac(nn * nn, 4)))
}

/// `x·y` on `A = B = C = {2, 4, …, 2ⁿ}`: `n(n−1)/2` graph points against `n²/4`.
pub fn construct_multiplicative(n: usize) -> Result<ConstructionResult> {
    require_at_least_two(n)?;
    let two = scalar::int(2);
    let g = Axis::geometric(&two, &two, n);
    let f = &x() * &y();
    let count = graph_points_2var(&f, &g, &g, &g)?;
    let nn = n as i64;
    Ok(finish("multiplicative", f, vec![g.clone(), g.clone(), g], count, scalar::frac(nn * nn, 4)))
}

/// `x + (y − z)²` on `A = D = [1, k²]`, `B = C = [1, k]`, against `k⁴/8`.
/// Carries the structure analysis of `f`.
pub fn construct_parabola(k: usize) -> Result<ConstructionResult> {
    let kk = k as i64;
    construct_parabola_with_target(k, Axis::range(1, kk * kk))
}

/// As [`construct_parabola`] with the target set `D` replaced.
pub fn construct_parabola_with_target(k: usize, d: Axis) -> Result<ConstructionResult> {
    require_at_least_two(k)?;
    if k % 2 != 0 {
        return Err(Error::Precondition(format!("k = {k} must be even")));
    }
    let kk = k as i64;
    let a = Axis::range(1, kk * kk);
    let b = Axis::range(1, kk);
    let f = &x() + &(&y() - &z()).pow(2);
    let count = graph_points_3var(&f, &a, &b, &b, &d)?;
    let mut res = finish("parabola", f.clone(), vec![a, b.clone(), b, d], count, scalar::frac(kk.pow(4), 8));
    res.analysis = Some(analyze(&f)?);
    Ok(res)
}

/// `x₁² + 2λ·x₁x₂ + x₂²`, the squared distance between points at parameters
/// `x₁`, `x₂` on two lines, in the variables `x, y`.
pub fn purdy_polynomial(lambda: &Scalar) -> MultiPoly {
    let cross = (&x() * &y()).scale(&(scalar::int(2) * lambda));
    &(&x().pow(2) + &cross) + &y().pow(2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PurdyParameters {
    /// Points at parameters `x ∈ X₁` and `x ∈ X₂`.
    Direct { x1: Axis, x2: Axis },
    /// Points at parameters `√s` for `s ∈ S₁`, `S₂`; only for `λ = 0`.
    Squared { s1: Axis, s2: Axis },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurdyInstance {
    lambda: Scalar,
    params: PurdyParameters,
}

impl PurdyInstance {
    pub fn new(lambda: Scalar, params: PurdyParameters) -> Result<Self> {
        check_lambda(&lambda)?;
        let (n1, n2) = match &params {
            PurdyParameters::Direct { x1, x2 } => (x1.len(), x2.len()),
            PurdyParameters::Squared { s1, s2 } => {
                if !lambda.is_zero() {
                    return Err(Error::Precondition(
                        "squared-parameter mode requires lambda = 0".into(),
                    ));
                }
                if s1.values().iter().chain(s2.values()).any(Signed::is_negative) {
                    return Err(Error::InvalidArgument("squared parameters must be nonnegative".into()));
                }
                (s1.len(), s2.len())
            }
        };
        if n2 > n1 {
            return Err(Error::Precondition(format!(
                "second parameter set ({n2}) must not be larger than the first ({n1})"
            )));
        }
        Ok(PurdyInstance { lambda, params })
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn params(&self) -> &PurdyParameters {
        &self.params
    }
}

fn check_lambda(lambda: &Scalar) -> Result<()> {
    if lambda.abs() > Scalar::one() {
        return Err(Error::Precondition(format!("lambda = {lambda} must lie in [-1, 1]")));
    }
    Ok(())
}

/// The set of squared distances between the two point sets.
pub fn distance_set_squared(inst: &PurdyInstance) -> BTreeSet<Scalar> {
    let mut out = BTreeSet::new();
    match &inst.params {
        PurdyParameters::Direct { x1, x2 } => {
            let two_l = scalar::int(2) * &inst.lambda;
            for a in x1.values() {
                for b in x2.values() {
                    out.insert(a * a + &two_l * a * b + b * b);
                }
            }
        }
        PurdyParameters::Squared { s1, s2 } => {
            for a in s1.values() {
                for b in s2.values() {
                    out.insert(a + b);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineConfiguration {
    Parallel,
    Orthogonal,
    Neither,
}

impl fmt::Display for LineConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineConfiguration::Parallel => "parallel",
            LineConfiguration::Orthogonal => "orthogonal",
            LineConfiguration::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurdyVerdict {
    pub lambda: Scalar,
    pub configuration: LineConfiguration,
    pub form: FormVerdict,
}

/// Runs the two-variable criterion on the distance polynomial. It has a
/// special form exactly when `λ ∈ {−1, 0, 1}`.
pub fn purdy_classify(lambda: &Scalar) -> Result<PurdyVerdict> {
    check_lambda(lambda)?;
    let form = classify_two_var(&purdy_polynomial(lambda));
    let configuration = if !form.is_special() {
        LineConfiguration::Neither
    } else if lambda.is_zero() {
        LineConfiguration::Orthogonal
    } else {
        LineConfiguration::Parallel
    };
    Ok(PurdyVerdict {
        lambda: lambda.clone(),
        configuration,
        form,
    })
}
