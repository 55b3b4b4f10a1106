//! Functional decomposition of univariate polynomials over ℚ.
//!
//! Decompositions are taken up to equivalence: the inner polynomial is
//! normalized monic with zero constant term and the outer absorbs the
//! affine change.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::kadic::{kadic_expansion, outer_if_pure_scalar};
use crate::poly::scalar::{self, Scalar};
use crate::poly::{UniPoly, Var};

/// `f = outer ∘ inner`, with `inner` monic and `inner(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub outer: UniPoly,
    pub inner: UniPoly,
}

impl Decomposition {
    pub fn compose(&self) -> UniPoly {
        self.outer.compose(&self.inner)
    }
}

/// Maximal common inner function `k` of a family and the reduced outers
/// `f̂_i` with `f_i = f̂_i ∘ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerFamily {
    pub inner: UniPoly,
    pub outers: Vec<UniPoly>,
}

/// Normal form of a nonconstant polynomial as an inner function:
/// `(h − h(0)) / lc(h)`.
pub fn normalize_inner(h: &UniPoly) -> UniPoly {
    let mut c = h.coeffs().to_vec();
    if let Some(first) = c.first_mut() {
        *first = Scalar::zero();
    }
    UniPoly::new(h.var(), c).monic()
}

/// The outer `g` with `f = g ∘ h`, if `f ∈ ℚ[h]`. `g` is in the variable `t`.
pub fn outer_for(f: &UniPoly, h: &UniPoly) -> Option<UniPoly> {
    let exp = kadic_expansion(&f.to_multi(), h).ok()?;
    outer_if_pure_scalar(&exp, Var::T)
}

/// First `count` coefficients of `F^(1/r)` for a power series with `F_0 = 1`.
fn series_root(series: &[Scalar], r: usize, count: usize) -> Vec<Scalar> {
    let alpha_plus_one = Scalar::new(1.into(), (r as i64).into()) + Scalar::one();
    let coeff = |k: usize| series.get(k).cloned().unwrap_or_else(Scalar::zero);
    let mut g = vec![Scalar::one()];
    for j in 1..count {
        let mut acc = Scalar::zero();
        for k in 1..=j {
            let fk = coeff(k);
            if fk.is_zero() {
                continue;
            }
            let w = &alpha_plus_one * scalar::int(k as i64) - scalar::int(j as i64);
            acc += w * fk * &g[j - k];
        }
        g.push(acc / scalar::int(j as i64));
    }
    g
}

/// The decomposition of `f` with inner degree `e`, if one exists.
///
/// Requires `2 ≤ e < deg f` and `e | deg f`.
pub fn decompose_at_degree(f: &UniPoly, e: usize) -> Result<Option<Decomposition>> {
    let n = f
        .degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::Precondition("polynomial must be nonconstant".into()))?;
    if e == 0 || n % e != 0 {
        return Err(Error::DegreeNotDivisible { degree: n, inner: e });
    }
    if e < 2 || e >= n {
        return Err(Error::Precondition(format!(
            "inner degree {e} must satisfy 2 <= e < {n}"
        )));
    }
    Ok(decompose_unchecked(f, e))
}

fn decompose_unchecked(f: &UniPoly, e: usize) -> Option<Decomposition> {
    let n = f.degree()?;
    let monic = f.monic();
    let reversed: Vec<Scalar> = (0..e).map(|i| monic.coeff(n - i)).collect();
    let root = series_root(&reversed, n / e, e);
    let mut coeffs = vec![Scalar::zero(); e + 1];
    for (i, c) in root.into_iter().enumerate() {
        coeffs[e - i] = c;
    }
    let inner = UniPoly::new(f.var(), coeffs);
    let outer = outer_for(f, &inner)?;
    Some(Decomposition { outer, inner })
}

/// Every nontrivial decomposition class of `f`, by increasing inner degree.
/// In characteristic 0 there is at most one class per inner degree.
pub fn all_decompositions(f: &UniPoly) -> Vec<Decomposition> {
    let n = match f.degree() {
        Some(n) if n > 0 => n,
        _ => return Vec::new(),
    };
    (2..n)
        .filter(|e| n % e == 0)
        .filter_map(|e| decompose_unchecked(f, e))
        .collect()
}

/// Normalized inner of degree `e` for `f`, including the trivial cases
/// `e = 1` and `e = deg f`.
fn inner_of_degree(f: &UniPoly, e: usize) -> Option<UniPoly> {
    let n = f.degree()?;
    if e == 1 {
        Some(UniPoly::identity(f.var()))
    } else if e == n {
        Some(normalize_inner(f))
    } else {
        decompose_unchecked(f, e).map(|d| d.inner)
    }
}

/// Maximal common inner function of two nonconstant polynomials.
pub fn common_inner_pair(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
    let g = da.gcd(&db);
    for e in (2..=g).rev().filter(|e| g % e == 0) {
        if let Some(h) = inner_of_degree(a, e) {
            if outer_for(b, &h).is_some() {
                return h;
            }
        }
    }
    UniPoly::identity(a.var())
}

/// Maximal common inner function of a family, folded pairwise.
///
/// By Lüroth's theorem the maximal common inner is unique up to
/// equivalence, and every common inner is a right factor of it, so the
/// fold is exact.
pub fn common_inner_max(fs: &[UniPoly]) -> Result<InnerFamily> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty family".into()))?;
    if fs.iter().any(UniPoly::is_constant) {
        return Err(Error::Precondition("every member must be nonconstant".into()));
    }
    let mut inner = normalize_inner(first);
    for f in &fs[1..] {
        if inner.degree() == Some(1) {
            break;
        }
        if outer_for(f, &inner).is_none() {
            inner = common_inner_pair(&inner, f);
        }
    }
    let outers = fs
        .iter()
        .map(|f| outer_for(f, &inner).expect("common inner divides every member"))
        .collect();
    Ok(InnerFamily { inner, outers })
}
