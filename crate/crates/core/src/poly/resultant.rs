use num_traits::Zero;

use super::multi::MultiPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` and `q` with respect to `v`; entries are
/// polynomials in the remaining variables.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, v: Var) -> Vec<Vec<MultiPoly>> {
    let pc = p.coefficients_in(v);
    let qc = q.coefficients_in(v);
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, coeffs, len) in (0..n)
        .map(|s| (s, &pc, m))
        .chain((0..m).map(|s| (s, &qc, n)))
    {
        let mut row = vec![MultiPoly::zero(); size];
        for i in 0..=len {
            row[shift + i] = coeffs[len - i].clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                None => return MultiPoly::zero(),
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `v`.
pub fn resultant_wrt(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    let positive = |f: &MultiPoly| f.degree_in(v).is_some_and(|d| !d.is_zero());
    if !positive(p) || !positive(q) {
        return Err(Error::NotProperElimination(format!(
            "both operands need positive degree in {v}"
        )));
    }
    Ok(bareiss_determinant(sylvester_matrix(p, q, v)))
}
