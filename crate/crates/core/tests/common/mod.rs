#![allow(dead_code)]

//! Seeded generators and brute-force oracles shared by the integration tests.
//! The oracles use plain dense vectors or machine integers and none of the
//! library's algorithms.

use std::collections::BTreeSet;

use erlab_core::poly::scalar::{frac, int};
use erlab_core::poly::{Monomial, MultiPoly, Scalar, UniPoly, Var};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}
pub fn y() -> MultiPoly {
    MultiPoly::var(Var::Y)
}
pub fn z() -> MultiPoly {
    MultiPoly::var(Var::Z)
}

/// Small nonzero rational, mostly integers.
pub fn nonzero_scalar(r: &mut TestRng) -> Scalar {
    loop {
        let n = r.gen_range(-5i64..=5);
        if n == 0 {
            continue;
        }
        let d = if r.gen_bool(0.2) { r.gen_range(2i64..=3) } else { 1 };
        return frac(n, d);
    }
}

pub fn small_scalar(r: &mut TestRng) -> Scalar {
    if r.gen_bool(0.3) {
        Scalar::zero()
    } else {
        nonzero_scalar(r)
    }
}

/// Random polynomial of exact degree `deg` in `var`.
pub fn uni(r: &mut TestRng, var: Var, deg: usize) -> UniPoly {
    let mut c: Vec<Scalar> = (0..deg).map(|_| small_scalar(r)).collect();
    c.push(nonzero_scalar(r));
    UniPoly::new(var, c)
}

/// Random monic polynomial of degree `deg` with zero constant term.
pub fn monic_inner(r: &mut TestRng, var: Var, deg: usize) -> UniPoly {
    let mut c: Vec<Scalar> = (0..deg).map(|_| small_scalar(r)).collect();
    c[0] = Scalar::zero();
    c.push(Scalar::one());
    UniPoly::new(var, c)
}

/// Random polynomial in `vars` of total degree at most `max_deg`.
pub fn multi(r: &mut TestRng, vars: &[Var], max_deg: u32, terms: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for _ in 0..terms {
        let mut m = Monomial::ONE;
        let mut budget = r.gen_range(0..=max_deg);
        for &v in vars {
            let e = r.gen_range(0..=budget);
            budget -= e;
            m = m.with_exp(v, m.exp(v) + e);
        }
        out = &out + &MultiPoly::term(m, nonzero_scalar(r));
    }
    out
}

// ----- dense univariate arithmetic over ascending coefficient vectors -----

pub fn dmul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

pub fn dpow(a: &[Scalar], e: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::one()];
    for _ in 0..e {
        out = dmul(&out, a);
    }
    out
}

fn dtrim(mut a: Vec<Scalar>) -> Vec<Scalar> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// Outer `g` with `f = g ∘ h` by repeated leading-term elimination, if any.
pub fn dense_outer(f: &[Scalar], h: &[Scalar]) -> Option<Vec<Scalar>> {
    let h = dtrim(h.to_vec());
    let e = h.len() - 1;
    let mut rest = dtrim(f.to_vec());
    let n = rest.len().checked_sub(1)?;
    if e == 0 || n % e != 0 {
        return None;
    }
    let mut g = vec![Scalar::zero(); n / e + 1];
    while !rest.is_empty() {
        let d = rest.len() - 1;
        if d % e != 0 {
            return None;
        }
        let i = d / e;
        let hp = dpow(&h, i);
        let c = rest[d].clone() / &hp[d];
        for (k, hk) in hp.iter().enumerate() {
            rest[k] -= &c * hk;
        }
        g[i] = c;
        rest = dtrim(rest);
    }
    Some(g)
}

/// Brute-force decomposition test for inner degree `e`: fixes the monic,
/// zero-constant inner one coefficient at a time by matching the top
/// coefficients of `lc(f)·h^r` against `f`, then checks membership.
pub fn oracle_inner(f: &[Scalar], e: usize) -> Option<Vec<Scalar>> {
    let f = dtrim(f.to_vec());
    let n = f.len() - 1;
    if e < 1 || n % e != 0 {
        return None;
    }
    let r = n / e;
    let lc = f[n].clone();
    let mut h = vec![Scalar::zero(); e + 1];
    h[e] = Scalar::one();
    for j in 1..e {
        // coefficient of x^{n-j} in lc·h^r is linear in h[e-j] with slope lc·r
        let current = dpow(&h, r);
        let diff = &f[n - j] - &lc * &current[n - j];
        h[e - j] = diff / (&lc * int(r as i64));
    }
    dense_outer(&f, &h).map(|_| h)
}

/// Inner degrees `e` with `2 ≤ e < deg f` for which `f` decomposes.
pub fn oracle_decomposition_degrees(f: &[Scalar]) -> Vec<usize> {
    let n = dtrim(f.to_vec()).len() - 1;
    (2..n).filter(|e| n % e == 0 && oracle_inner(f, *e).is_some()).collect()
}

// ----- integer incidence oracle -----

/// Lines with at least `k` points, each identified by its incident point set.
pub fn oracle_rich_lines(points: &[(i64, i64)], k: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let (p, q) = (points[i], points[j]);
            let on: Vec<usize> = (0..n)
                .filter(|&l| {
                    let s = points[l];
                    (q.0 - p.0) * (s.1 - p.1) - (q.1 - p.1) * (s.0 - p.0) == 0
                })
                .collect();
            if on.len() >= k {
                out.insert(on);
            }
        }
    }
    out
}

pub fn int_grid(a: i64, b: i64) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = (1..=a).flat_map(|x| (1..=b).map(move |y| (x, y))).collect();
    pts.sort();
    pts
}
