use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{PowerSeries, Rational};
use crate::error::SeriesError;

/// A Laurent series `x^valuation * tail`, known modulo `x^(order + 1)`.
///
/// A nonzero series always has an exact valuation (the tail is a unit).
/// The zero series carries only its order; it has no valuation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    is_zero: bool,
    valuation: i64,
    tail: PowerSeries,
    order: i64,
}

impl LaurentSeries {
    /// `x^valuation * tail`, normalised so that the stored tail starts with a
    /// nonzero coefficient. A tail with no nonzero known coefficient yields
    /// the zero series at order `valuation + tail.order()`.
    pub fn new(valuation: i64, tail: PowerSeries) -> Self {
        let order = valuation + tail.order() as i64;
        match tail.valuation() {
            None => Self::zero(order),
            Some(0) => LaurentSeries {
                is_zero: false,
                valuation,
                tail,
                order,
            },
            Some(k) => LaurentSeries {
                is_zero: false,
                valuation: valuation + k as i64,
                tail: tail.shift_down(k),
                order,
            },
        }
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            is_zero: true,
            valuation: 0,
            tail: PowerSeries::zero(0),
            order,
        }
    }

    /// `c * x^exponent` known to `order`; zero if `c` is zero or the
    /// monomial lies beyond the known precision.
    pub fn monomial(c: Rational, exponent: i64, order: i64) -> Self {
        if c.is_zero() || exponent > order {
            return Self::zero(order);
        }
        Self::new(
            exponent,
            PowerSeries::constant(c, (order - exponent) as usize),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// Exponent of the lowest nonzero term; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero).then_some(self.valuation)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// The unit power series `x^-valuation * self`.
    pub fn tail(&self) -> Option<&PowerSeries> {
        (!self.is_zero).then_some(&self.tail)
    }

    /// Coefficient of `x^k` for `k <= order`.
    pub fn coeff(&self, k: i64) -> Rational {
        assert!(
            k <= self.order,
            "x^{k} is beyond the known order {}",
            self.order
        );
        if self.is_zero || k < self.valuation {
            Rational::zero()
        } else {
            self.tail.coeff((k - self.valuation) as usize).clone()
        }
    }

    /// Coefficients from `x^start` through `x^order`.
    pub fn coeffs_from(&self, start: i64) -> Vec<Rational> {
        (start..=self.order).map(|k| self.coeff(k)).collect()
    }

    /// Lowers the known order.
    pub fn truncate(&self, order: i64) -> Self {
        assert!(order <= self.order, "cannot raise precision");
        if self.is_zero || order < self.valuation {
            return Self::zero(order);
        }
        Self::new(
            self.valuation,
            self.tail.truncate((order - self.valuation) as usize),
        )
    }

    /// Multiplies by the exact monomial `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: if self.is_zero { 0 } else { self.valuation + k },
            order: self.order + k,
            ..self.clone()
        }
    }

    /// Some power series when no negative exponent is present and the
    /// order is non-negative.
    pub fn to_power_series(&self) -> Option<PowerSeries> {
        if self.order < 0 {
            return None;
        }
        let order = self.order as usize;
        if self.is_zero {
            return Some(PowerSeries::zero(order));
        }
        if self.valuation < 0 {
            return None;
        }
        Some(PowerSeries::from_coeffs(self.coeffs_from(0), order))
    }

    /// Quotient in the field of Laurent series: both operands factor as
    /// `x^m * unit`, units divide as power series and valuations subtract.
    pub fn checked_div(&self, divisor: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        if divisor.is_zero {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        if self.is_zero {
            return Ok(Self::zero(self.order - divisor.valuation));
        }
        let tail = self.tail.checked_div(&divisor.tail)?;
        Ok(Self::new(self.valuation - divisor.valuation, tail))
    }

    pub fn recip(&self) -> Result<LaurentSeries, SeriesError> {
        if self.is_zero {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let one = PowerSeries::one(self.tail.order());
        Ok(Self::new(-self.valuation, one.checked_div(&self.tail)?))
    }

    /// Integer power; negative exponents go through `recip`.
    pub fn pow(&self, exp: i32) -> Result<LaurentSeries, SeriesError> {
        if exp < 0 {
            return self.pow(-exp)?.recip();
        }
        if self.is_zero {
            if exp == 0 {
                return Ok(Self::new(0, PowerSeries::one(0)));
            }
            let e = exp as i64;
            return Ok(Self::zero(e * (self.order + 1) - 1));
        }
        Ok(Self::new(
            self.valuation * exp as i64,
            self.tail.pow(exp as u32),
        ))
    }
}

impl From<PowerSeries> for LaurentSeries {
    fn from(s: PowerSeries) -> Self {
        LaurentSeries::new(0, s)
    }
}

impl From<&PowerSeries> for LaurentSeries {
    fn from(s: &PowerSeries) -> Self {
        LaurentSeries::new(0, s.clone())
    }
}

impl<'a> Add<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let start = match (self.valuation(), rhs.valuation()) {
            (None, None) => return LaurentSeries::zero(order),
            (Some(v), None) | (None, Some(v)) => v,
            (Some(a), Some(b)) => a.min(b),
        };
        if start > order {
            return LaurentSeries::zero(order);
        }
        let coeffs = (start..=order)
            .map(|k| self.coeff(k) + rhs.coeff(k))
            .collect();
        LaurentSeries::new(
            start,
            PowerSeries::from_coeffs(coeffs, (order - start) as usize),
        )
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;

    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            tail: -&self.tail,
            ..self.clone()
        }
    }
}

impl<'a> Sub<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentSeries> for &'a LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, rhs: &'a LaurentSeries) -> LaurentSeries {
        match (self.valuation(), rhs.valuation()) {
            (None, None) => LaurentSeries::zero(self.order + rhs.order + 1),
            (None, Some(v)) => LaurentSeries::zero(self.order + v),
            (Some(v), None) => LaurentSeries::zero(rhs.order + v),
            (Some(a), Some(b)) => LaurentSeries::new(a + b, &self.tail * &rhs.tail),
        }
    }
}

impl LaurentSeries {
    pub fn one(order: i64) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }
}
