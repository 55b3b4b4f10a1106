use super::grid::Axis;
use crate::error::{Error, Result};
use crate::poly::var::NVARS;
use crate::poly::{MultiPoly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub zeros: usize,
    /// `2·deg(F)·m`, or 1 for nonzero constants.
    pub threshold: usize,
    /// The zero count forces `F ≡ 0`.
    pub must_be_zero: bool,
}

/// Counts zeros of `F(y, z)` on `B × C` with `|B| = |C| = m`.
///
/// A nonzero `F` of degree `d` has fewer than `2dm` zeros there, so reaching
/// that many zeros means `F ≡ 0`.
pub fn vanishing_check(f: &MultiPoly, b: &Axis, c: &Axis) -> Result<VanishingReport> {
    if b.len() != c.len() {
        return Err(Error::InvalidArgument(format!(
            "grid factors must have equal size, got {} and {}",
            b.len(),
            c.len()
        )));
    }
    if let Some(v) = f.vars().into_iter().find(|&v| v != Var::Y && v != Var::Z) {
        return Err(Error::InvalidArgument(format!("unexpected variable {v}, expected y and z")));
    }
    let m = b.len();
    let mut zeros = 0;
    for bv in b.values() {
        let g = f.substitute(Var::Y, bv);
        for cv in c.values() {
            let mut pt: [_; NVARS] = Default::default();
            pt[Var::Z.index()] = cv.clone();
            if num_traits::Zero::is_zero(&g.eval(&pt)) {
                zeros += 1;
            }
        }
    }
    let d = f.degree().unwrap_or(0) as usize;
    let threshold = (2 * d * m).max(1);
    let must_be_zero = zeros >= threshold;
    if must_be_zero {
        assert!(f.is_zero(), "nonzero polynomial {f} has {zeros} zeros on a {m}x{m} grid");
    }
    Ok(VanishingReport {
        zeros,
        threshold,
        must_be_zero,
    })
}
