mod common;

use std::collections::BTreeSet;

use common::*;
use erlab_core::incidence::{
    c4_count, classify_family, curves_coincide, enumerate_rich_lines, extract_general_position,
    general_position_bound, graph_points_2var, graph_points_3var, grid_points, implicitize,
    line_compositions, reparametrize_pair, st_report, vanishing_check, Axis, Line,
    ParametricCurve, Point,
};
use erlab_core::poly::scalar::int;
use erlab_core::poly::{AffineMap, MultiPoly, Scalar, Var};
use rand::Rng;

fn points_of(grid: &[(i64, i64)]) -> Vec<Point> {
    grid.iter().map(|&(a, b)| Point::new(int(a), int(b))).collect()
}

#[test]
fn rich_lines_match_brute_force_on_small_grids() {
    for a in 1..=7 {
        for b in 1..=7 {
            let grid = int_grid(a, b);
            let pts = points_of(&grid);
            for k in 2..=6 {
                let got: BTreeSet<Vec<usize>> = enumerate_rich_lines(&pts, k)
                    .unwrap()
                    .into_iter()
                    .map(|l| l.points)
                    .collect();
                assert_eq!(got, oracle_rich_lines(&grid, k), "{a}x{b} grid, k = {k}");
            }
        }
    }
}

#[test]
fn rich_line_count_is_monotone_in_k() {
    let pts = points_of(&int_grid(6, 5));
    let counts: Vec<usize> = (2..=7).map(|k| enumerate_rich_lines(&pts, k).unwrap().len()).collect();
    assert!(counts.windows(2).all(|w| w[0] >= w[1]), "{counts:?}");
}

#[test]
fn st_report_edge_cases() {
    let pts = points_of(&int_grid(3, 3));
    let rep = st_report(&pts, 10).unwrap();
    assert_eq!(rep.lines, 0);
    let row = points_of(&int_grid(1, 6));
    assert_eq!(st_report(&row, 6).unwrap().lines, 1);
}

#[test]
fn graph_point_counts_match_enumeration() {
    let mut r = rng(31);
    for _ in 0..20 {
        let f = multi(&mut r, &[Var::X, Var::Y], 2, 3);
        let a = Axis::range(-3, 3);
        let c = Axis::range(-10, 10);
        let mut expected = 0;
        for av in a.values() {
            for bv in a.values() {
                let v = f.eval(&[av.clone(), bv.clone(), int(0), int(0), int(0)]);
                expected += u64::from(c.contains(&v));
            }
        }
        assert_eq!(graph_points_2var(&f, &a, &a, &c).unwrap(), expected);
    }
    let r5 = Axis::range(1, 5);
    let sum = &(&x() + &y()) + &z();
    assert_eq!(graph_points_3var(&sum, &r5, &r5, &r5, &r5).unwrap(), 10);
    assert_eq!(graph_points_3var(&sum, &r5, &r5, &r5, &Axis::default()).unwrap(), 0);
}

#[test]
fn family_examples() {
    let par: Vec<Line> = (0..3).map(|c| Line::graph(int(1), int(c))).collect();
    let prof = classify_family(&par);
    assert_eq!((prof.max_parallel, prof.max_concurrent), (3, 1));
    let pencil: Vec<Line> = (1..=3).map(|m| Line::graph(int(m), int(0))).collect();
    let prof = classify_family(&pencil);
    assert_eq!((prof.max_parallel, prof.max_concurrent), (1, 3));
    assert_eq!(prof.concurrent_point, Some(Point::new(int(0), int(0))));
    let generic = vec![Line::graph(int(1), int(0)), Line::graph(int(2), int(1)), Line::graph(int(-1), int(5))];
    let prof = classify_family(&generic);
    assert_eq!((prof.max_parallel, prof.max_concurrent), (1, 2));
}

#[test]
fn general_position_extraction_properties() {
    let mut r = rng(32);
    for _ in 0..60 {
        let m = r.gen_range(1..=30);
        let lines: Vec<Line> = (0..m)
            .map(|_| {
                if r.gen_bool(0.1) {
                    Line::new(int(1), int(0), int(r.gen_range(-3..=3))).unwrap()
                } else {
                    Line::graph(int(r.gen_range(-3..=3)), int(r.gen_range(-3..=3)))
                }
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let prof = classify_family(&lines);
        let (p, q) = (prof.max_parallel, prof.max_concurrent.max(2));
        let chosen = extract_general_position(&lines, p, q).unwrap();
        assert!(chosen.len() >= general_position_bound(lines.len(), p, q));
        for i in 0..chosen.len() {
            for j in i + 1..chosen.len() {
                assert!(!chosen[i].is_parallel(&chosen[j]));
                for k in j + 1..chosen.len() {
                    let a = chosen[i].intersection(&chosen[j]).unwrap();
                    let b = chosen[i].intersection(&chosen[k]).unwrap();
                    assert_ne!(a, b, "three concurrent lines");
                }
            }
        }
        if p > 1 {
            assert!(extract_general_position(&lines, p - 1, q).is_err());
        }
    }
}

#[test]
fn composition_example() {
    // u = t + 1 and u = 2t as lines in the (t, u) plane
    let l1 = Line::graph(int(1), int(1));
    let l2 = Line::graph(int(2), int(0));
    let r = Axis::range(1, 4);
    let rep = line_compositions(&[l1, l2], &r, &r);
    let g12 = rep.compositions.iter().find(|c| (c.i, c.j) == (0, 1)).unwrap();
    assert_eq!(g12.gamma, AffineMap::new(Scalar::new(1.into(), 2.into()), int(1)).unwrap());
    for c in rep.compositions.iter().filter(|c| c.i == c.j) {
        assert!(c.gamma.is_identity());
        assert_eq!(c.gamma_richness, r.len());
    }
}

fn random_map(r: &mut TestRng) -> AffineMap {
    AffineMap::new(nonzero_scalar(r), small_scalar(r)).unwrap()
}

fn line_of(m: &AffineMap) -> Line {
    Line::graph(m.slope().clone(), m.intercept().clone())
}

#[test]
fn equal_compositions_force_concurrency() {
    let mut r = rng(33);
    for _ in 0..40 {
        // lines through a common point, the second pair twisted by a power of Γ₁₂
        let (l1, l2) = (random_map(&mut r), random_map(&mut r));
        if l1.slope() == l2.slope() {
            continue;
        }
        let big = l2.inverse().compose(&l1);
        let twist = if r.gen_bool(0.5) { big.clone() } else { big.compose(&big) };
        let l3 = l1.compose(&twist);
        let l4 = l2.compose(&twist);
        let lines: Vec<Line> = [&l1, &l2, &l3, &l4].iter().map(|m| line_of(m)).collect();
        let rep = line_compositions(&lines, &Axis::range(1, 3), &Axis::range(1, 3));
        let get = |i, j| rep.compositions.iter().find(|c| (c.i, c.j) == (i, j)).unwrap();
        assert_eq!(get(0, 1).gamma, get(2, 3).gamma);
        assert_eq!(get(0, 1).big_gamma, get(2, 3).big_gamma);
        let p = lines[0].intersection(&lines[1]).unwrap();
        assert!(lines.iter().all(|l| l.contains(&p)));
    }
    // random quadruples: the implication holds whenever the premise does
    for _ in 0..400 {
        let maps: Vec<AffineMap> = (0..4)
            .map(|_| AffineMap::new(int(r.gen_range(1..=2)), int(r.gen_range(-1..=1))).unwrap())
            .collect();
        let (g12, g34) = (maps[0].compose(&maps[1].inverse()), maps[2].compose(&maps[3].inverse()));
        let (h12, h34) = (maps[1].inverse().compose(&maps[0]), maps[3].inverse().compose(&maps[2]));
        if g12 == g34 && h12 == h34 && maps[0].slope() != maps[1].slope() {
            let lines: Vec<Line> = maps.iter().map(line_of).collect();
            let p = lines[0].intersection(&lines[1]).unwrap();
            assert!(lines.iter().all(|l| l.contains(&p)));
        }
    }
}

#[test]
fn c4_count_matches_direct_cycle_enumeration() {
    let mut r = rng(34);
    for _ in 0..30 {
        let maps: Vec<AffineMap> = (0..r.gen_range(1..=5))
            .map(|_| AffineMap::new(int(r.gen_range(1..=3)), int(r.gen_range(-2..=2))).unwrap())
            .collect();
        let a = Axis::range(1, 5);
        let b = Axis::range(0, 8);
        let adj = |m: &AffineMap, av: &Scalar, bv: &Scalar| {
            b.contains(&m.apply(av)) && a.contains(&m.inverse().apply(bv))
        };
        let mut expected = 0u64;
        for i in 0..maps.len() {
            for j in i + 1..maps.len() {
                for av in a.values() {
                    for bv in b.values() {
                        if adj(&maps[i], av, bv) && adj(&maps[j], av, bv) {
                            expected += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(c4_count(&maps, &a, &b).total, expected);
    }
    let one = [AffineMap::identity()];
    assert_eq!(c4_count(&one, &Axis::range(1, 4), &Axis::range(1, 4)).total, 0);
    let apart = [AffineMap::identity(), AffineMap::new(int(1), int(100)).unwrap()];
    assert_eq!(c4_count(&apart, &Axis::range(1, 4), &Axis::range(1, 4)).total, 0);
}

fn random_curve(r: &mut TestRng, max_deg: usize) -> ParametricCurve {
    let (du, dv) = (r.gen_range(1..=max_deg), r.gen_range(1..=max_deg));
    ParametricCurve::new(uni(r, Var::T, du), uni(r, Var::T, dv)).unwrap()
}

#[test]
fn implicitization_identity() {
    let mut r = rng(35);
    for _ in 0..30 {
        let c = random_curve(&mut r, 4);
        let f = implicitize(&c);
        let back = f.compose_many(&[(Var::X, c.u().to_multi()), (Var::Y, c.v().to_multi())]);
        assert!(back.is_zero(), "curve ({}, {})", c.u(), c.v());
        let bound = (c.u().degree().unwrap() + c.v().degree().unwrap()) as u32;
        assert!(f.degree().unwrap() <= bound);
    }
}

#[test]
fn coincidence_implies_reparametrization() {
    let mut r = rng(36);
    for _ in 0..20 {
        let (dp, dq) = (r.gen_range(1..=2), r.gen_range(1..=3));
        let p = uni(&mut r, Var::T, dp);
        let q = uni(&mut r, Var::T, dq);
        let (d1, d2) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let phi1 = uni(&mut r, Var::T, d1);
        let phi2 = uni(&mut r, Var::T, d2);
        let c1 = ParametricCurve::new(p.compose(&phi1), q.compose(&phi1)).unwrap();
        let c2 = ParametricCurve::new(p.compose(&phi2), q.compose(&phi2)).unwrap();
        assert!(curves_coincide(&c1, &c2));
        let rep = reparametrize_pair(&c1, &c2).expect("reparametrization");
        assert!(rep.verifies(&c1, &c2));
    }
}

#[test]
fn vanishing_lemma_contrapositive() {
    let mut r = rng(37);
    let grid = Axis::range(1, 10);
    for _ in 0..60 {
        let mut f = multi(&mut r, &[Var::Y, Var::Z], 4, 3);
        if r.gen_bool(0.5) {
            // force many grid zeros with a factor vanishing on a grid row
            let row = &MultiPoly::var(Var::Y) - &MultiPoly::int(r.gen_range(1..=10));
            f = &row * &multi(&mut r, &[Var::Y, Var::Z], 3, 2);
        }
        if f.is_zero() {
            continue;
        }
        let rep = vanishing_check(&f, &grid, &grid).unwrap();
        assert!(rep.zeros < rep.threshold, "{f}: {} zeros", rep.zeros);
        assert!(!rep.must_be_zero);
    }
    assert!(vanishing_check(&MultiPoly::zero(), &grid, &grid).unwrap().must_be_zero);
}

#[test]
fn grid_points_are_a_cartesian_product() {
    let a: Vec<Scalar> = (1..=3).map(int).collect();
    let b: Vec<Scalar> = (1..=2).map(int).collect();
    assert_eq!(grid_points(&a, &b).len(), 6);
}
