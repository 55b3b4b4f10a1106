//! Exact polynomial kernel: rationals, sparse multivariate and dense
//! univariate polynomials, rational functions, resultants and k-adic
//! expansion.

pub mod affine;
pub mod gcd;
pub mod kadic;
pub mod multi;
pub mod ratfunc;
pub mod resultant;
pub mod scalar;
pub mod uni;
pub mod var;

pub use affine::AffineMap;
pub use kadic::{kadic_expansion, KadicExpansion};
pub use multi::MultiPoly;
pub use ratfunc::RatFunc;
pub use resultant::resultant_wrt;
pub use scalar::Scalar;
pub use uni::UniPoly;
pub use var::{Monomial, Var};
