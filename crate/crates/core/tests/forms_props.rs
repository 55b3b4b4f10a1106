mod common;

use common::*;
use erlab_core::poly::{MultiPoly, UniPoly, Var};
use erlab_core::recovery::{
    analyze, recover_additive_2var, recover_additive_3var, recover_multiplicative_2var,
    recover_multiplicative_3var,
};
use erlab_core::structure::{
    classify_three_var, classify_two_var, is_additively_separable, is_multiplicatively_separable,
    FormVerdict,
};
use rand::Rng;

fn additive(p: &UniPoly, parts: &[&UniPoly]) -> MultiPoly {
    let arg = parts.iter().fold(MultiPoly::zero(), |acc, q| &acc + &q.to_multi());
    p.to_multi().compose(Var::T, &arg)
}

fn multiplicative(p: &UniPoly, parts: &[&UniPoly]) -> MultiPoly {
    let arg = parts.iter().fold(MultiPoly::one(), |acc, q| &acc * &q.to_multi());
    p.to_multi().compose(Var::T, &arg)
}

/// `(g, k, l)` with `deg g · max(deg k, deg l) ≤ 8`.
fn random_parts(r: &mut TestRng) -> (UniPoly, UniPoly, UniPoly) {
    let (dk, dl) = (r.gen_range(1..=4), r.gen_range(1..=4));
    let dg = r.gen_range(1..=8 / dk.max(dl));
    (uni(r, Var::T, dg), uni(r, Var::X, dk), uni(r, Var::Y, dl))
}

#[test]
fn composites_pass_the_two_variable_test() {
    let mut r = rng(21);
    for _ in 0..80 {
        let (g, k, l) = random_parts(&mut r);
        assert!(classify_two_var(&additive(&g, &[&k, &l])).is_special(), "{g} {k} {l}");
        assert!(classify_two_var(&multiplicative(&g, &[&k, &l])).is_special(), "{g} {k} {l}");
    }
}

#[test]
fn separability_of_sums_and_products() {
    let mut r = rng(22);
    for _ in 0..60 {
        let (dl, dm) = (r.gen_range(0..=6), r.gen_range(0..=6));
        let l = uni(&mut r, Var::Y, dl).to_multi();
        let m = uni(&mut r, Var::Z, dm).to_multi();
        assert!(is_additively_separable(&(&l + &m)));
        assert!(is_multiplicatively_separable(&(&l * &m)));
    }
}

#[test]
fn differential_test_agrees_with_recovery_on_corpus() {
    let mut r = rng(23);
    let mut corpus = Vec::new();
    for i in 0..90 {
        let f = match i % 3 {
            0 => {
                let (g, k, l) = random_parts(&mut r);
                additive(&g, &[&k, &l])
            }
            1 => {
                let (g, k, l) = random_parts(&mut r);
                multiplicative(&g, &[&k, &l])
            }
            _ => multi(&mut r, &[Var::X, Var::Y], 5, 4),
        };
        corpus.push(f);
    }
    for f in corpus {
        let verdict = classify_two_var(&f);
        if matches!(verdict, FormVerdict::Degenerate { .. }) {
            continue;
        }
        let recovered =
            recover_additive_2var(&f).is_some() || recover_multiplicative_2var(&f).is_some();
        assert_eq!(verdict.is_special(), recovered, "f = {f}");
    }
}

#[test]
fn two_variable_round_trips() {
    let mut r = rng(24);
    for _ in 0..40 {
        let (dp, dk, dl) = (r.gen_range(2..=3), r.gen_range(2..=3), r.gen_range(2..=3));
        let p = uni(&mut r, Var::T, dp);
        let k = uni(&mut r, Var::X, dk);
        let l = uni(&mut r, Var::Y, dl);
        let f = additive(&p, &[&k, &l]);
        let w = recover_additive_2var(&f).unwrap_or_else(|| panic!("additive {f}"));
        assert_eq!(w.compose(), f);
        let f = multiplicative(&p, &[&k, &l]);
        let w = recover_multiplicative_2var(&f).unwrap_or_else(|| panic!("multiplicative {f}"));
        assert_eq!(w.compose(), f);
        assert_eq!(
            f.degree().unwrap(),
            w.p.degree().unwrap() as u32 * w.argument().degree().unwrap()
        );
    }
}

#[test]
fn three_variable_round_trips() {
    let mut r = rng(25);
    for _ in 0..15 {
        let p = uni(&mut r, Var::T, 2);
        let k = uni(&mut r, Var::X, 2);
        let l = uni(&mut r, Var::Y, 2);
        let m = uni(&mut r, Var::Z, 1);
        let f = additive(&p, &[&k, &l, &m]);
        let w = recover_additive_3var(&f).unwrap_or_else(|| panic!("additive {f}"));
        assert_eq!(w.compose(), f);
        assert!(classify_three_var(&f).iter().all(|(_, _, v)| v.is_special()));
        let f = multiplicative(&p, &[&k, &l, &m]);
        let w = recover_multiplicative_3var(&f).unwrap_or_else(|| panic!("multiplicative {f}"));
        assert_eq!(w.compose(), f);
    }
}

#[test]
fn parabola_negative_control() {
    let f = &x() + &(&y() - &z()).pow(2);
    assert!(classify_three_var(&f).iter().all(|(_, _, v)| v.is_special()));
    assert!(recover_additive_3var(&f).is_none());
    assert!(recover_multiplicative_3var(&f).is_none());
    let rep = analyze(&f).unwrap();
    assert!(!rep.has_special_form() && rep.consistent);
}
