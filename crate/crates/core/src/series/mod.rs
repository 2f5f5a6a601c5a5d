//! Exact arithmetic kernel: rationals, dense polynomials, truncated formal
//! power series and Laurent series.

mod laurent;
mod poly;
mod power;
mod render;

pub use laurent::LaurentSeries;
pub use poly::Polynomial;
pub use power::PowerSeries;
pub use render::{render_laurent, render_polynomial, render_series, Variable};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Coefficient domain. `Ratio` keeps itself reduced with a positive
/// denominator after every constructor and operation.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}
