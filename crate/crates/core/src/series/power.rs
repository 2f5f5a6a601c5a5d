use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::SeriesError;

/// A formal power series known modulo `x^(order + 1)`.
///
/// Storage is dense: `coeffs.len() == order + 1` always holds, so two series
/// of equal order compare equal exactly when they agree on every known
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// `coefficient * x^degree`; vanishes if `degree > order`.
    pub fn monomial(coefficient: Rational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coefficient;
        }
        s
    }

    /// The series `x` at the given order.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Builds a series from leading coefficients, zero-padding or dropping
    /// terms so that exactly `order + 1` remain.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the known order is *not* implied,
    /// so this panics for `k > order`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops known coefficients above `order`. Asking for more precision
    /// than is known is a logic error.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise precision from {} to {order}",
            self.order()
        );
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `s(x^step)`: spreads coefficients out. The result is known to
    /// `step * order + step - 1`, the last degree pinned down by `s`.
    pub fn spread(&self, step: usize) -> Self {
        assert!(step >= 1);
        let order = step * self.order() + step - 1;
        let mut out = Self::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * step] = c.clone();
        }
        out
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Divides by `x^k`, which must divide the known part exactly; the
    /// quotient is known to `order - k`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order());
        debug_assert!(self.coeffs[..k].iter().all(Zero::is_zero));
        PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The unique `h` with `h * divisor = self` to the common order.
    ///
    /// Coefficient `k` of the quotient depends only on coefficients `<= k`
    /// of both operands, so no precision beyond the minimum order is lost.
    pub fn checked_div(&self, divisor: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        let lead = divisor.constant_term();
        if lead.is_zero() {
            return Err(SeriesError::DivisorNotUnit);
        }
        let order = self.order().min(divisor.order());
        let inv_lead = lead.recip();
        let mut h: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let (b, prev) = (&divisor.coeffs[j], &h[k - j]);
                if !b.is_zero() && !prev.is_zero() {
                    acc -= b * prev;
                }
            }
            h.push(acc * &inv_lead);
        }
        Ok(PowerSeries { coeffs: h })
    }

    /// `1 / (1 + self)` as the alternating geometric sum
    /// `1 - p + p^2 - ...`, for `self` without constant term.
    pub fn geom_inverse(&self) -> Result<PowerSeries, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut sum = Self::one(order);
        let mut term = Self::one(order);
        let neg = -self;
        // p^k vanishes modulo x^(order+1) once k > order.
        for _ in 0..order {
            term = &term * &neg;
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum)
    }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &'a PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: self.coeffs[..=order]
                .iter()
                .zip(&rhs.coeffs[..=order])
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &'a PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: self.coeffs[..=order]
                .iter()
                .zip(&rhs.coeffs[..=order])
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &'a PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}
