use std::collections::{BTreeMap, BTreeSet};

use super::line::{Line, Point};
use crate::error::{Error, Result};
use crate::poly::Scalar;

/// Largest parallel class and largest pencil in a family of lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyProfile {
    pub max_parallel: usize,
    /// Normalized `(a, b)` of a largest parallel class.
    pub parallel_direction: Option<(Scalar, Scalar)>,
    pub max_concurrent: usize,
    /// Common point of a largest pencil, when it has at least two lines.
    pub concurrent_point: Option<Point>,
}

pub fn classify_family(lines: &[Line]) -> FamilyProfile {
    let mut classes: BTreeMap<(Scalar, Scalar), usize> = BTreeMap::new();
    for l in lines {
        *classes.entry(l.direction()).or_insert(0) += 1;
    }
    let (parallel_direction, max_parallel) = classes
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .map(|(d, n)| (Some(d.clone()), *n))
        .unwrap_or((None, 0));

    let mut pencils: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersection(&lines[j]) {
                let set = pencils.entry(p).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
    }
    let (concurrent_point, max_concurrent) = pencils
        .iter()
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.0.cmp(a.0)))
        .map(|(p, s)| (Some(p.clone()), s.len()))
        .unwrap_or((None, lines.len().min(1)));

    FamilyProfile {
        max_parallel,
        parallel_direction,
        max_concurrent,
        concurrent_point,
    }
}

/// `⌊√(m / (2(p + q)))⌋`.
pub fn general_position_bound(m: usize, p: usize, q: usize) -> usize {
    let denom = 2 * (p + q);
    if denom == 0 {
        return 0;
    }
    let target = m / denom;
    let mut r = (target as f64).sqrt() as usize;
    while r * r > target {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= target {
        r += 1;
    }
    r
}

/// Greedy subfamily with no two lines parallel and no three concurrent,
/// taking lines in input order.
///
/// Requires at most `p` lines in any parallel class and at most `q` lines
/// through any point; the result then has at least
/// `⌊√(m / (2(p + q)))⌋` lines.
pub fn extract_general_position(lines: &[Line], p: usize, q: usize) -> Result<Vec<Line>> {
    let profile = classify_family(lines);
    if profile.max_parallel > p {
        let (a, b) = profile.parallel_direction.expect("nonempty");
        return Err(Error::Precondition(format!(
            "{} lines share the direction of {}, more than p = {p}",
            profile.max_parallel,
            Line::new(a, b, Scalar::from_integer(0.into())).expect("direction")
        )));
    }
    if profile.max_concurrent > q {
        return Err(Error::Precondition(format!(
            "{} lines pass through {}, more than q = {q}",
            profile.max_concurrent,
            profile.concurrent_point.expect("pencil")
        )));
    }

    let mut chosen: Vec<Line> = Vec::new();
    let mut crossings: BTreeSet<Point> = BTreeSet::new();
    for l in lines {
        if chosen.iter().any(|c| c.is_parallel(l)) {
            continue;
        }
        if crossings.iter().any(|pt| l.contains(pt)) {
            continue;
        }
        for c in &chosen {
            crossings.insert(c.intersection(l).expect("not parallel"));
        }
        chosen.push(l.clone());
    }
    let bound = general_position_bound(lines.len(), p, q);
    assert!(
        chosen.len() >= bound,
        "greedy selection of {} lines is below the guaranteed {bound}",
        chosen.len()
    );
    Ok(chosen)
}
