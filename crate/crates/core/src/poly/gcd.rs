//! Multivariate gcd over ℚ. The heuristic integer gcd (evaluate at a large
//! integer, recurse, rebuild the gcd from its ξ-adic digits, confirm by
//! exact division) handles almost every input; recursive primitive
//! remainder sequences are the fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::multi::MultiPoly;
use super::scalar::Scalar;
use super::var::{Monomial, Var};

const HEURISTIC_ATTEMPTS: usize = 6;

fn main_var(a: &MultiPoly, b: &MultiPoly) -> Option<Var> {
    Var::ALL
        .into_iter()
        .rev()
        .find(|&v| a.contains_var(v) || b.contains_var(v))
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if let Some(g) = heuristic_gcd(&a.primitive(), &b.primitive()) {
        return g.monic();
    }
    prs_gcd(a, b)
}

fn int_content(p: &MultiPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()))
}

fn max_norm(p: &MultiPoly) -> BigInt {
    p.terms().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

/// Symmetric residue of every coefficient modulo `xi`.
fn symmetric_mod(p: &MultiPoly, xi: &BigInt) -> MultiPoly {
    let half = xi / 2;
    MultiPoly::from_terms(p.terms().map(|(m, c)| {
        let mut r = c.numer().mod_floor(xi);
        if r > half {
            r -= xi;
        }
        (*m, Scalar::from_integer(r))
    }))
}

/// Rebuilds `G` in `v` from its image `h = G(ξ)`.
fn interpolate(h: &MultiPoly, xi: &BigInt, v: Var) -> MultiPoly {
    let xi_s = Scalar::from_integer(xi.clone());
    let inv = xi_s.recip();
    let mut h = h.clone();
    let mut out = MultiPoly::zero();
    let mut i = 0;
    while !h.is_zero() {
        let g = symmetric_mod(&h, xi);
        out = &out + &g.mul_monomial(&Monomial::var(v, i), &Scalar::one());
        h = (&h - &g).scale(&inv);
        i += 1;
    }
    out
}

/// Gcd over ℤ of two nonzero integer polynomials, with positive leading
/// coefficient, or `None` when the heuristic gives up.
fn heuristic_gcd(f: &MultiPoly, g: &MultiPoly) -> Option<MultiPoly> {
    let (cf, cg) = (int_content(f), int_content(g));
    let content = Scalar::from_integer(cf.gcd(&cg));
    let f = f.scale(&Scalar::from_integer(cf).recip());
    let g = g.scale(&Scalar::from_integer(cg).recip());
    let shared = f.vars().into_iter().rev().find(|&v| g.contains_var(v));
    let Some(v) = shared else {
        // no common variable: only the integer content is shared
        return Some(MultiPoly::constant(content));
    };
    let bound: BigInt = max_norm(&f).min(max_norm(&g)) * 2 + 29;
    let mut xi = bound;
    for _ in 0..HEURISTIC_ATTEMPTS {
        let xs = Scalar::from_integer(xi.clone());
        let (ff, gg) = (f.substitute(v, &xs), g.substitute(v, &xs));
        if !ff.is_zero() && !gg.is_zero() {
            let h = if ff.is_constant() || gg.is_constant() {
                Some(MultiPoly::constant(Scalar::from_integer(int_content(&ff).gcd(&int_content(&gg)))))
            } else {
                heuristic_gcd(&ff, &gg)
            };
            if let Some(h) = h {
                let cand = interpolate(&h, &xi, v).primitive();
                if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                    return Some(cand.scale(&content));
                }
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

fn prs_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let v = match main_var(a, b) {
        None => return MultiPoly::one(),
        Some(v) => v,
    };
    if !a.contains_var(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.contains_var(v) {
        return gcd(&content_in(a, v), b);
    }
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !r1.is_zero() {
        if r1.degree_in(v) == Some(0) {
            // A nonzero remainder free of v: the primitive parts are coprime.
            return c;
        }
        let r = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() { r } else { primitive_in(&r, v) };
    }
    (&primitive_in(&r0, v) * &c).monic()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

pub fn primitive_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
pub fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v).expect("nonzero divisor");
    let coeffs = b.coefficients_in(v);
    let lc_b = &coeffs[db as usize];
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lc_r = &r.coefficients_in(v)[dr as usize];
        let shift = MultiPoly::term(Monomial::var(v, dr - db), num_traits::One::one());
        r = &(&r * lc_b) - &(&(lc_r * &shift) * b);
    }
    r
}

/// Squarefree part, `p / gcd(p, ∂p/∂v for every v)`, made monic.
pub fn squarefree_part(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() || p.is_constant() {
        return p.monic();
    }
    let mut g = p.clone();
    for v in p.vars() {
        g = gcd(&g, &p.derivative(v));
    }
    p.div_exact(&g).expect("gcd divides").monic()
}
