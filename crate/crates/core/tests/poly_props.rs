mod common;

use common::*;
use erlab_core::poly::scalar::{frac, int, to_f64};
use erlab_core::poly::{kadic_expansion, resultant_wrt, MultiPoly, RatFunc, Scalar, UniPoly, Var};
use proptest::prelude::*;

const XYZ: [Var; 3] = [Var::X, Var::Y, Var::Z];

fn arb_poly(max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    any::<u64>().prop_map(move |seed| {
        let mut r = rng(seed);
        let terms = 1 + (seed % 6) as usize;
        multi(&mut r, &XYZ, max_deg, terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_rule(p in arb_poly(6), q in arb_poly(6)) {
        for v in XYZ {
            let lhs = (&p * &q).derivative(v);
            let rhs = &(&p * &q.derivative(v)) + &(&q * &p.derivative(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn derivative_is_linear(p in arb_poly(6), q in arb_poly(6), c in -7i64..7) {
        let c = int(c);
        let lhs = (&p.scale(&c) + &q).derivative(Var::X);
        let rhs = &p.derivative(Var::X).scale(&c) + &q.derivative(Var::X);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_laws(p in arb_poly(4), q in arb_poly(4), s in arb_poly(4)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(4), q in arb_poly(4)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in arb_poly(5), a in -4i64..4, b in -4i64..4) {
        let point = [int(a), int(b), frac(1, 3), int(0), int(0)];
        let direct = p.eval(&point);
        let staged = p.substitute(Var::X, &int(a)).substitute(Var::Y, &int(b)).eval(&point);
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn kadic_reconstruction(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = uni(&mut r, Var::X, 1 + (seed % 3) as usize);
        let f = multi(&mut r, &XYZ, 6, 5);
        let exp = kadic_expansion(&f, &k).unwrap();
        prop_assert_eq!(exp.rebuild(), f.clone());
        for d in exp.digits() {
            prop_assert!(d.degree_in(Var::X).unwrap_or(0) < k.degree().unwrap() as u32);
        }
    }

    #[test]
    fn rational_function_arithmetic(p in arb_poly(3), q in arb_poly(3), s in arb_poly(3)) {
        prop_assume!(!q.is_zero() && !s.is_zero());
        let a = RatFunc::new(p.clone(), q.clone()).unwrap();
        let b = RatFunc::new(s.clone(), q.clone()).unwrap();
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !p.is_zero() {
            prop_assert!(a.div(&a).unwrap().as_poly().is_some_and(|c| *c == MultiPoly::one()));
        }
        // quotient rule against the product rule
        let lhs = a.mul(&b).derivative(Var::Y);
        let rhs = a.derivative(Var::Y).mul(&b).add(&a.mul(&b.derivative(Var::Y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_vanishes_at_common_roots(seed in any::<u64>()) {
        // p(x, y) and q(x, y) both vanish on x = 2: Res_x(p, q) has a root at every y
        // where they also share the x-root, so build both with the factor (x − y − 2).
        let mut r = rng(seed);
        let common = &(&x() - &y()) - &MultiPoly::int(2);
        let p = &common * &multi(&mut r, &[Var::X, Var::Y], 2, 3);
        let q = &common * &(&x() + &multi(&mut r, &[Var::Y], 2, 2));
        prop_assume!(p.degree_in(Var::X).unwrap_or(0) > 0);
        prop_assert!(resultant_wrt(&p, &q, Var::X).unwrap().is_zero());
    }
}

#[test]
fn finite_difference_cross_check() {
    let mut r = rng(7);
    for _ in 0..25 {
        let f = multi(&mut r, &XYZ, 5, 6);
        let fx = f.derivative(Var::X);
        for _ in 0..10 {
            let pt: Vec<Scalar> = (0..3).map(|_| frac(rand::Rng::gen_range(&mut r, -20..20), 7)).collect();
            let pf: [f64; 5] = [to_f64(&pt[0]), to_f64(&pt[1]), to_f64(&pt[2]), 0.0, 0.0];
            let h = 1e-6;
            let mut hi = pf;
            let mut lo = pf;
            hi[0] += h;
            lo[0] -= h;
            let numeric = (f.eval_f64(&hi) - f.eval_f64(&lo)) / (2.0 * h);
            let exact = fx.eval_f64(&pf);
            let scale = exact.abs().max(1.0);
            assert!(
                (numeric - exact).abs() / scale < 1e-4,
                "f = {f}: numeric {numeric} vs exact {exact}"
            );
        }
    }
}

#[test]
fn univariate_composition_matches_multivariate() {
    let mut r = rng(11);
    for _ in 0..50 {
        let g = uni(&mut r, Var::T, 3);
        let h = uni(&mut r, Var::X, 2);
        let dense = g.compose(&h);
        let sparse = g.to_multi().compose(Var::T, &h.to_multi());
        assert_eq!(dense.to_multi(), sparse);
        assert_eq!(UniPoly::from_multi(&sparse, Var::X), Some(dense));
    }
}
