use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::scalar::{self, Scalar};
use crate::poly::var::NVARS;
use crate::poly::{MultiPoly, Var};

/// One factor of a cartesian product: strictly increasing exact values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Axis(Vec<Scalar>);

impl Axis {
    /// Requires strictly increasing input.
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "axis values must be strictly increasing".into(),
            ));
        }
        Ok(Axis(values))
    }

    /// Sorts and removes duplicates.
    pub fn from_unsorted(mut values: Vec<Scalar>) -> Self {
        values.sort();
        values.dedup();
        Axis(values)
    }

    /// `[lo, hi]` as consecutive integers.
    pub fn range(lo: i64, hi: i64) -> Self {
        Axis((lo..=hi).map(scalar::int).collect())
    }

    /// `start·ratio^i` for `i` in `0..len`.
    pub fn geometric(start: &Scalar, ratio: &Scalar, len: usize) -> Self {
        let mut values = Vec::with_capacity(len);
        let mut cur = start.clone();
        for _ in 0..len {
            values.push(cur.clone());
            cur *= ratio;
        }
        Axis::from_unsorted(values)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        self.0.binary_search(s).is_ok()
    }
}

fn check_vars(f: &MultiPoly, allowed: &[Var]) -> Result<()> {
    if let Some(v) = f.vars().into_iter().find(|v| !allowed.contains(v)) {
        return Err(Error::InvalidArgument(format!(
            "unexpected variable {v} in graph polynomial"
        )));
    }
    Ok(())
}

/// `|{(a, b) ∈ A×B : f(a, b) ∈ C}|` for `f` in `x, y`.
pub fn graph_points_2var(f: &MultiPoly, a: &Axis, b: &Axis, c: &Axis) -> Result<u64> {
    check_vars(f, &[Var::X, Var::Y])?;
    if c.is_empty() {
        return Ok(0);
    }
    Ok(a.values()
        .par_iter()
        .map(|av| {
            let g = f.substitute(Var::X, av);
            b.values()
                .iter()
                .filter(|bv| c.contains(&eval1(&g, Var::Y, bv)))
                .count() as u64
        })
        .sum())
}

/// `|{(a, b, c) ∈ A×B×C : f(a, b, c) ∈ D}|` for `f` in `x, y, z`.
pub fn graph_points_3var(f: &MultiPoly, a: &Axis, b: &Axis, c: &Axis, d: &Axis) -> Result<u64> {
    check_vars(f, &[Var::X, Var::Y, Var::Z])?;
    if d.is_empty() {
        return Ok(0);
    }
    Ok(a.values()
        .par_iter()
        .map(|av| {
            let g = f.substitute(Var::X, av);
            let mut count = 0u64;
            for bv in b.values() {
                let h = g.substitute(Var::Y, bv);
                count += c
                    .values()
                    .iter()
                    .filter(|cv| d.contains(&eval1(&h, Var::Z, cv)))
                    .count() as u64;
            }
            count
        })
        .sum())
}

fn eval1(p: &MultiPoly, v: Var, value: &Scalar) -> Scalar {
    let mut point: [Scalar; NVARS] = Default::default();
    point[v.index()] = value.clone();
    p.eval(&point)
}
