use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{AffineMap, MultiPoly, Scalar, Var};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line `a·x + b·y = c`, scaled so the first nonzero of `(a, b)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        let s = if !a.is_zero() {
            a.recip()
        } else if !b.is_zero() {
            b.recip()
        } else {
            return Err(Error::InvalidArgument("line needs (a, b) != (0, 0)".into()));
        };
        Ok(Line {
            a: a * &s,
            b: b * &s,
            c: c * &s,
        })
    }

    pub fn through(p: &Point, q: &Point) -> Result<Self> {
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Line::new(a, b, c)
    }

    /// The graph `y = slope·x + intercept`.
    pub fn graph(slope: Scalar, intercept: Scalar) -> Self {
        Line::new(-slope, Scalar::one(), intercept).expect("b = 1")
    }

    pub fn coefficients(&self) -> (&Scalar, &Scalar, &Scalar) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.a * &p.x + &self.b * &p.y == self.c
    }

    /// Normalized direction class; parallel lines share it.
    pub fn direction(&self) -> (Scalar, Scalar) {
        (self.a.clone(), self.b.clone())
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.direction() == other.direction()
    }

    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &other.b - &self.b * &other.c) / &det;
        let y = (&self.a * &other.c - &self.c * &other.a) / &det;
        Some(Point { x, y })
    }

    /// The line as a map `t ↦ slope·t + intercept`, when it is neither
    /// vertical nor horizontal.
    pub fn as_affine(&self) -> Option<AffineMap> {
        if self.b.is_zero() || self.a.is_zero() {
            return None;
        }
        AffineMap::new(-(&self.a / &self.b), &self.c / &self.b).ok()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = &MultiPoly::var(Var::X).scale(&self.a) + &MultiPoly::var(Var::Y).scale(&self.b);
        write!(f, "{lhs} = {}", self.c)
    }
}
