//! Incidence counting on finite grids of exact rationals.

pub mod compose;
pub mod curves;
pub mod family;
pub mod grid;
pub mod line;
pub mod rich;
pub mod vanish;

pub use compose::{c4_count, line_compositions, C4Count, Composition, CompositionReport};
pub use curves::{curves_coincide, implicitize, reparametrize_pair, ParametricCurve, Reparametrization};
pub use family::{classify_family, extract_general_position, general_position_bound, FamilyProfile};
pub use grid::{graph_points_2var, graph_points_3var, Axis};
pub use line::{Line, Point};
pub use rich::{enumerate_rich_lines, grid_points, st_report, RichLine, RichnessReport};
pub use vanish::{vanishing_check, VanishingReport};
