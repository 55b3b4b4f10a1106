use num_traits::Signed;

use crate::decomp::common_inner_max;
use crate::error::{Error, Result};
use crate::poly::gcd::squarefree_part;
use crate::poly::scalar;
use crate::poly::{resultant_wrt, AffineMap, MultiPoly, UniPoly, Var};

/// `t ↦ (u(t), v(t))` with both coordinates nonconstant, in the variable `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricCurve {
    u: UniPoly,
    v: UniPoly,
}

impl ParametricCurve {
    pub fn new(u: UniPoly, v: UniPoly) -> Result<Self> {
        if u.is_constant() || v.is_constant() {
            return Err(Error::Precondition(
                "both coordinates of a parametric curve must be nonconstant".into(),
            ));
        }
        Ok(ParametricCurve {
            u: u.with_var(Var::T),
            v: v.with_var(Var::T),
        })
    }

    pub fn u(&self) -> &UniPoly {
        &self.u
    }

    pub fn v(&self) -> &UniPoly {
        &self.v
    }
}

/// Squarefree part of `Res_t(x − u(t), y − v(t))`, scaled to primitive
/// integer coefficients with the top `y`-coefficient having a positive
/// leading coefficient.
pub fn implicitize(c: &ParametricCurve) -> MultiPoly {
    let fx = &MultiPoly::var(Var::X) - &c.u.to_multi();
    let fy = &MultiPoly::var(Var::Y) - &c.v.to_multi();
    let r = resultant_wrt(&fx, &fy, Var::T).expect("both coordinates depend on t");
    let r = squarefree_part(&r).primitive();
    let top = r.coefficients_in(Var::Y).pop().expect("nonzero");
    if top.leading_coeff().is_negative() {
        -r
    } else {
        r
    }
}

pub fn curves_coincide(c1: &ParametricCurve, c2: &ParametricCurve) -> bool {
    implicitize(c1) == implicitize(c2)
}

/// `u_i = p ∘ φ_i` and `v_i = q ∘ φ_i` for both curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reparametrization {
    pub p: UniPoly,
    pub q: UniPoly,
    pub phi1: UniPoly,
    pub phi2: UniPoly,
}

impl Reparametrization {
    pub fn verifies(&self, c1: &ParametricCurve, c2: &ParametricCurve) -> bool {
        self.p.compose(&self.phi1) == c1.u
            && self.q.compose(&self.phi1) == c1.v
            && self.p.compose(&self.phi2) == c2.u
            && self.q.compose(&self.phi2) == c2.v
    }
}

/// Affine `α` with `p2 = p1 ∘ α` and `q2 = q1 ∘ α`.
fn affine_link(p1: &UniPoly, q1: &UniPoly, p2: &UniPoly, q2: &UniPoly) -> Option<AffineMap> {
    let n = p1.degree()?;
    if p2.degree()? != n {
        return None;
    }
    let ratio = p2.leading_coeff() / p1.leading_coeff();
    let root = scalar::nth_root(&ratio, n as u32)?;
    let candidates = if n % 2 == 0 { vec![root.clone(), -root] } else { vec![root] };
    for a in candidates {
        // t^{n-1} coefficient of p1(a·t + b)
        let an1 = scalar::powi(&a, n as i64 - 1);
        let b = (p2.coeff(n - 1) - p1.coeff(n - 1) * &an1)
            / (p1.leading_coeff() * scalar::int(n as i64) * &an1);
        let alpha = AffineMap::new(a, b).ok()?;
        let ap = alpha.to_poly(Var::T);
        if &p1.compose(&ap) == p2 && &q1.compose(&ap) == q2 {
            return Some(alpha);
        }
    }
    None
}

/// Common reparametrization of two coinciding curves: `φ_i` is the maximal
/// common inner function of `(u_i, v_i)`, and `φ_2` absorbs the affine change
/// relating the two outer pairs.
pub fn reparametrize_pair(c1: &ParametricCurve, c2: &ParametricCurve) -> Option<Reparametrization> {
    if !curves_coincide(c1, c2) {
        return None;
    }
    let f1 = common_inner_max(&[c1.u.clone(), c1.v.clone()]).ok()?;
    let f2 = common_inner_max(&[c2.u.clone(), c2.v.clone()]).ok()?;
    let alpha = affine_link(&f1.outers[0], &f1.outers[1], &f2.outers[0], &f2.outers[1])?;
    let rep = Reparametrization {
        p: f1.outers[0].clone(),
        q: f1.outers[1].clone(),
        phi1: f1.inner,
        phi2: alpha.to_poly(Var::T).compose(&f2.inner),
    };
    rep.verifies(c1, c2).then_some(rep)
}
