//! Grid axis syntax: `a..b`, `a,b,c`, `geo:r:a:n`, `@file`, or empty.

use std::fs;

use erlab_core::incidence::Axis;
use erlab_core::poly::Scalar;

fn rational(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
            if d == 0.into() {
                return Err(format!("zero denominator in '{s}'"));
            }
            Scalar::new(n, d)
        }
        None => Scalar::from_integer(s.parse().map_err(|_| format!("bad rational '{s}'"))?),
    };
    Ok(parsed)
}

pub fn parse_axis(spec: &str) -> Result<Axis, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Axis::default());
    }
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let values = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(rational)
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Axis::from_unsorted(values));
    }
    if let Some(rest) = spec.strip_prefix("geo:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let [r, a, n] = parts[..] else {
            return Err(format!("expected geo:r:a:n, got '{spec}'"));
        };
        let n: usize = n.trim().parse().map_err(|_| format!("bad length '{n}'"))?;
        let (r, a) = (rational(r)?, rational(a)?);
        if num_traits::Zero::is_zero(&r) || num_traits::Zero::is_zero(&a) {
            return Err("geometric progression needs nonzero ratio and start".into());
        }
        return Ok(Axis::geometric(&a, &r, n));
    }
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start '{lo}'"))?;
        let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end '{hi}'"))?;
        if hi < lo {
            return Err(format!("range {spec} is reversed"));
        }
        if hi.saturating_sub(lo) > 10_000_000 {
            return Err(format!("range {spec} is too large"));
        }
        return Ok(Axis::range(lo, hi));
    }
    let values = spec.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    Ok(Axis::from_unsorted(values))
}
