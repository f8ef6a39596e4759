//! Genus-2 curves `y² = f(x)` with `deg f = 6`, their reductions, point
//! counts and Frobenius data.

mod count;
mod curve;
mod weil;

pub use count::{count_points, PointCounter};
pub use curve::{reduce_curve, HyperCurve};
pub use weil::{frobenius_data, WeilData};
