//! Exact formal power series, Laurent series and continued fractions of
//! series, with Chebyshev polynomial ratios and the Catalan generating
//! function built on top.

pub mod catalan;
pub mod chebyshev;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod expr;
pub mod series;

pub use error::SeriesError;
