mod common;

use common::*;
use erlab_core::decomp::{all_decompositions, common_inner_max, decompose_at_degree, outer_for};
use erlab_core::poly::{UniPoly, Var};
use rand::Rng;

/// Mix of composites and random polynomials of degree ≤ 8.
fn corpus(seed: u64, size: usize) -> Vec<UniPoly> {
    let mut r = rng(seed);
    (0..size)
        .map(|i| match i % 3 {
            0 => {
                let e = r.gen_range(2..=4);
                let d = r.gen_range(1..=8 / e);
                uni(&mut r, Var::T, d).compose(&uni(&mut r, Var::X, e))
            }
            1 => {
                // nested composite of degree 8
                let a = uni(&mut r, Var::T, 2);
                let b = uni(&mut r, Var::X, 2);
                let c = uni(&mut r, Var::X, 2);
                a.compose(&b.with_var(Var::T).compose(&c))
            }
            _ => {
                let d = r.gen_range(1..=8);
                uni(&mut r, Var::X, d)
            }
        })
        .collect()
}

#[test]
fn round_trip_contains_the_planted_class() {
    let mut r = rng(1);
    for _ in 0..150 {
        let (e, d) = (r.gen_range(2..=4), r.gen_range(2..=3));
        let h = monic_inner(&mut r, Var::X, e);
        let g = uni(&mut r, Var::T, d);
        let f = g.compose(&h);
        let ds = all_decompositions(&f);
        let hit = ds.iter().find(|d| d.inner == h).expect("planted inner is found");
        assert_eq!(hit.outer, g);
        for d in &ds {
            assert_eq!(d.compose(), f);
        }
    }
}

#[test]
fn agrees_with_brute_force_up_to_degree_six() {
    for f in corpus(2, 300).iter().filter(|f| f.degree().unwrap() <= 6) {
        let got: Vec<usize> = all_decompositions(f)
            .iter()
            .map(|d| d.inner.degree().unwrap())
            .collect();
        assert_eq!(got, oracle_decomposition_degrees(f.coeffs()), "f = {f}");
        for d in all_decompositions(f) {
            let e = d.inner.degree().unwrap();
            let h = oracle_inner(f.coeffs(), e).unwrap();
            assert_eq!(d.inner.coeffs(), &h[..], "f = {f}");
        }
    }
}

#[test]
fn count_bound_on_corpus() {
    for f in corpus(3, 500) {
        let n = f.degree().unwrap();
        assert!(all_decompositions(&f).len() <= 1 << n);
    }
}

#[test]
fn classes_are_pairwise_inequivalent() {
    // An affine change preserves degree, so distinct inner degrees suffice.
    for f in corpus(4, 200) {
        let degs: Vec<usize> = all_decompositions(&f)
            .iter()
            .map(|d| d.inner.degree().unwrap())
            .collect();
        let mut sorted = degs.clone();
        sorted.dedup();
        assert_eq!(sorted, degs);
    }
}

#[test]
fn common_inner_is_maximal() {
    let mut r = rng(5);
    for _ in 0..120 {
        let e = r.gen_range(1..=4);
        let h = monic_inner(&mut r, Var::X, e);
        let members: Vec<UniPoly> = (0..r.gen_range(1..=3))
            .map(|_| {
                let d = r.gen_range(1..=(8 / e).max(1));
                uni(&mut r, Var::T, d).compose(&h)
            })
            .collect();
        let fam = common_inner_max(&members).unwrap();
        for (f, o) in members.iter().zip(&fam.outers) {
            assert_eq!(&o.compose(&fam.inner), f);
        }
        let k = fam.inner.degree().unwrap();
        assert!(k >= e && k % e == 0);
        // no inner of any larger degree serves every member
        let n0 = members[0].degree().unwrap();
        for big in (k + 1)..=n0 {
            if n0 % big != 0 {
                continue;
            }
            let candidate = if big == n0 {
                Some(members[0].coeffs().to_vec())
            } else {
                oracle_inner(members[0].coeffs(), big)
            };
            if let Some(c) = candidate {
                let mut c = c;
                c[0] = Default::default();
                let lc = c[big].clone();
                let c: Vec<_> = c.into_iter().map(|v| v / &lc).collect();
                let all = members.iter().all(|m| dense_outer(m.coeffs(), &c).is_some());
                assert!(!all, "larger common inner of degree {big} exists");
            }
        }
    }
}

#[test]
fn single_degree_queries_match_full_enumeration() {
    for f in corpus(6, 120) {
        let n = f.degree().unwrap();
        let all = all_decompositions(&f);
        for e in (2..n).filter(|e| n % e == 0) {
            let one = decompose_at_degree(&f, e).unwrap();
            assert_eq!(one.as_ref(), all.iter().find(|d| d.inner.degree() == Some(e)));
            if let Some(d) = one {
                assert_eq!(outer_for(&f, &d.inner), Some(d.outer));
            }
        }
    }
}
