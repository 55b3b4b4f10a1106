use std::collections::BTreeMap;

use super::grid::Axis;
use super::line::Line;
use crate::poly::AffineMap;

/// `γ = ℓ_i ∘ ℓ_j⁻¹` and `Γ = ℓ_j⁻¹ ∘ ℓ_i` for one ordered pair of lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub i: usize,
    pub j: usize,
    pub gamma: AffineMap,
    pub big_gamma: AffineMap,
    /// `|{b ∈ B : γ(b) ∈ B}|`.
    pub gamma_richness: usize,
    /// `|{a ∈ A : Γ(a) ∈ A}|`.
    pub big_gamma_richness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    pub compositions: Vec<Composition>,
    /// Indices of vertical or horizontal lines, which are not maps.
    pub skipped: Vec<usize>,
}

/// Richness of an affine map on `S × S`.
pub fn map_richness(map: &AffineMap, s: &Axis) -> usize {
    s.values().iter().filter(|v| s.contains(&map.apply(v))).count()
}

/// Every ordered pair `(i, j)`, including `i = j`, of the non-degenerate lines.
pub fn line_compositions(lines: &[Line], a: &Axis, b: &Axis) -> CompositionReport {
    let mut maps = Vec::new();
    let mut skipped = Vec::new();
    for (idx, l) in lines.iter().enumerate() {
        match l.as_affine() {
            Some(m) => maps.push((idx, m)),
            None => skipped.push(idx),
        }
    }
    let mut compositions = Vec::with_capacity(maps.len() * maps.len());
    for (i, li) in &maps {
        for (j, lj) in &maps {
            let lj_inv = lj.inverse();
            let gamma = li.compose(&lj_inv);
            let big_gamma = lj_inv.compose(li);
            compositions.push(Composition {
                i: *i,
                j: *j,
                gamma_richness: map_richness(&gamma, b),
                big_gamma_richness: map_richness(&big_gamma, a),
                gamma,
                big_gamma,
            });
        }
    }
    CompositionReport {
        compositions,
        skipped,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C4Count {
    /// Number of 4-cycles `(a, b, ℓ, ℓ')` with `ℓ ≠ ℓ'`, each counted once.
    pub total: u64,
    /// `p_{a,b}` keyed by indices into `A` and `B`, nonzero entries only.
    pub paths: BTreeMap<(usize, usize), u64>,
}

/// Counts 4-cycles in the bipartite graph on `(A × B) ∪ L`, where `(a, b)`
/// and `ℓ` are joined when `ℓ(a) ∈ B` and `ℓ⁻¹(b) ∈ A`.
pub fn c4_count(maps: &[AffineMap], a: &Axis, b: &Axis) -> C4Count {
    let mut paths: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for m in maps {
        let inv = m.inverse();
        let sa: Vec<usize> = (0..a.len())
            .filter(|&i| b.contains(&m.apply(&a.values()[i])))
            .collect();
        let sb: Vec<usize> = (0..b.len())
            .filter(|&j| a.contains(&inv.apply(&b.values()[j])))
            .collect();
        for &i in &sa {
            for &j in &sb {
                *paths.entry((i, j)).or_insert(0) += 1;
            }
        }
    }
    let total = paths.values().map(|p| p * p.saturating_sub(1) / 2).sum();
    C4Count { total, paths }
}
