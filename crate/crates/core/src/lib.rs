//! Exact tools for the special forms `g(k(x) + l(y))` and
//! `g(k(x)·l(y))`, and for counting incidences on finite cartesian products.

pub mod decomp;
pub mod error;
pub mod experiments;
pub mod incidence;
pub mod poly;
pub mod recovery;
pub mod structure;

pub use error::{Error, Result};
