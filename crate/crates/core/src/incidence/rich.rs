use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::line::{Line, Point};
use crate::error::{Error, Result};
use crate::poly::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichLine {
    pub line: Line,
    /// Indices into the deduplicated, sorted point list.
    pub points: Vec<usize>,
}

impl RichLine {
    pub fn richness(&self) -> usize {
        self.points.len()
    }
}

/// Every line through at least `k ≥ 2` of the points, sorted by line.
/// Duplicate points are merged first.
pub fn enumerate_rich_lines(points: &[Point], k: usize) -> Result<Vec<RichLine>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("richness k = {k} must be at least 2")));
    }
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let pairs: Vec<(Line, usize, usize)> = (0..pts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let pts = &pts;
            (i + 1..pts.len()).map(move |j| {
                (Line::through(&pts[i], &pts[j]).expect("distinct points"), i, j)
            })
        })
        .collect();
    let mut by_line: HashMap<Line, BTreeSet<usize>> = HashMap::new();
    for (line, i, j) in pairs {
        let set = by_line.entry(line).or_default();
        set.insert(i);
        set.insert(j);
    }
    let mut out: Vec<RichLine> = by_line
        .into_iter()
        .filter(|(_, s)| s.len() >= k)
        .map(|(line, s)| RichLine {
            line,
            points: s.into_iter().collect(),
        })
        .collect();
    out.sort_by(|a, b| a.line.cmp(&b.line));
    Ok(out)
}

/// Rich-line count compared against `N²/k³ + N/k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichnessReport {
    pub points: usize,
    pub k: usize,
    pub lines: usize,
    /// Richness → number of lines with exactly that many points.
    pub histogram: BTreeMap<usize, usize>,
    pub bound: Scalar,
    pub ratio: Scalar,
}

pub fn st_report(points: &[Point], k: usize) -> Result<RichnessReport> {
    let lines = enumerate_rich_lines(points, k)?;
    let n = points.iter().collect::<BTreeSet<_>>().len() as i64;
    let kk = k as i64;
    let bound = scalar::frac(n * n, kk * kk * kk) + scalar::frac(n, kk);
    let mut histogram = BTreeMap::new();
    for l in &lines {
        *histogram.entry(l.richness()).or_insert(0) += 1;
    }
    let ratio = if n == 0 {
        scalar::int(0)
    } else {
        scalar::int(lines.len() as i64) / &bound
    };
    Ok(RichnessReport {
        points: n as usize,
        k,
        lines: lines.len(),
        histogram,
        bound,
        ratio,
    })
}

/// The points of `A × B`.
pub fn grid_points(a: &[Scalar], b: &[Scalar]) -> Vec<Point> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| Point::new(x.clone(), y.clone())))
        .collect()
}
