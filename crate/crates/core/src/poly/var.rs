use std::cmp::Ordering;
use std::fmt;

/// Number of variable slots in the fixed universe `{x, y, z, t, w}`.
pub const NVARS: usize = 5;

/// A variable from the fixed universe. The derived order `x < y < z < t < w`
/// is the variable order used by the canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    W,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::T, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::T => 't',
            Var::W => 'w',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            't' => Some(Var::T),
            'w' => Some(Var::W),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector over the variable universe.
///
/// Ordered degree-lexicographically: total degree first, then exponents
/// compared from the most significant variable (`w`) down to `x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, exp: u32) -> Self {
        self.0[v.index()] = exp;
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            if *a < *b {
                return None;
            }
            *a -= b;
        }
        Some(Monomial(e))
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_puts_degree_first() {
        let x3 = Monomial::var(Var::X, 3);
        let y2 = Monomial::var(Var::Y, 2);
        assert!(x3 > y2);
        let xy = Monomial([1, 1, 0, 0, 0]);
        assert!(y2 > xy);
        assert!(xy > Monomial::var(Var::X, 2));
    }

    #[test]
    fn division_requires_componentwise_dominance() {
        let a = Monomial([2, 1, 0, 0, 0]);
        let b = Monomial([1, 1, 0, 0, 0]);
        assert_eq!(a.div(&b), Some(Monomial::var(Var::X, 1)));
        assert_eq!(b.div(&a), None);
    }
}
