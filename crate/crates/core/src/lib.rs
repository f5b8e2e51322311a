//! Exact construction of generalized Eulerian triangular arrays and
//! mechanical checking of the identities that relate them.
//!
//! Containers are generic over a [`Scalar`]; the aliases below fix the
//! scalar to an arbitrary-precision rational, which is what every
//! verification routine uses.

pub mod analysis;
pub mod applications;
pub mod david_barton;
pub mod derivative;
pub mod egf;
pub mod error;
pub mod format;
pub mod oracles;
pub mod poly;
pub mod presets;
pub mod report;
pub mod runner;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod transforms;
pub mod triangle;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

/// Dense univariate polynomial over exact rationals.
pub type Poly = poly::Polynomial<Rational>;
/// Power series in `t` with polynomial-in-`q` coefficients, truncated at a fixed order.
pub type BiSeries = series::Series<Rational>;
/// Triangular array of exact rationals.
pub type Triangle = triangle::Triangle<Rational>;
/// The nine master-recurrence parameters over exact rationals.
pub type TriangleParams = triangle::MasterParams<Rational>;
/// Generic row recurrence over exact rationals.
pub type CoeffRule = triangle::RecurrenceRule<Rational>;
