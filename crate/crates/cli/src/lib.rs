//! Command-line front end: polynomial parsing, grid syntax and reports.

pub mod app;
pub mod grid;
pub mod parse;

pub use parse::{parse_poly, ParseError};
