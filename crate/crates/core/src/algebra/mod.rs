//! Exact scalar, polynomial and power-series arithmetic.

mod integer;
mod matrix;
mod qpoly;
mod series;

pub use integer::{binom, binomial, catalan, gcd, hessenberg_catalan_det, Integer};
pub use matrix::{det_exact, det_qpoly, IntMatrix, QPolyMatrix, Ring, SquareMatrix};
pub use qpoly::{q_binomial, QPoly};
pub use series::PowerSeries;
