//! Exact rationals. `Scalar` is `num_rational::BigRational`, which keeps the
//! reduced form with a positive denominator after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational `n`-th root when it exists.
pub fn nth_root(s: &Scalar, n: u32) -> Option<Scalar> {
    if n == 0 {
        return None;
    }
    if s.is_zero() {
        return Some(Scalar::zero());
    }
    if s.is_negative() && n % 2 == 0 {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().nth_root(n);
        if num_traits::pow(r.clone(), n as usize) == v.abs() {
            Some(if v.is_negative() { -r } else { r })
        } else {
            None
        }
    };
    let num = root_int(s.numer())?;
    let den = root_int(s.denom())?;
    Some(Scalar::new(num, den))
}

/// Integer power with a possibly negative exponent. Panics on `0^negative`.
pub fn powi(s: &Scalar, e: i64) -> Scalar {
    let p = num_traits::pow(s.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Extended gcd on machine integers: returns `(g, a, b)` with `a*x + b*y = g >= 0`.
pub fn ext_gcd(x: i64, y: i64) -> (i64, i64, i64) {
    let e = x.extended_gcd(&y);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}
