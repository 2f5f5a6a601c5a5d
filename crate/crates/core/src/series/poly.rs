use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::{LaurentSeries, PowerSeries, Rational};
use crate::error::SeriesError;

/// Dense univariate polynomial; `coeffs[k]` multiplies `x^k`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in `f64`; coefficients are rounded first.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `self(inner(x))`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }

    /// `self(scale / y)` as a Laurent series in `y`, known to `y^order`.
    ///
    /// The expansion is finite (valuation `-deg`), so it is exact at any
    /// requested non-negative order.
    pub fn reciprocal_substitute(
        &self,
        scale: &Rational,
        order: usize,
    ) -> Result<LaurentSeries, SeriesError> {
        let deg = self.degree().ok_or(SeriesError::ZeroPolynomial)?;
        // c_k (s/y)^k = c_k s^k y^-k; reversed, index i holds y^(i - deg).
        let mut tail = Vec::with_capacity(deg + 1);
        let mut power = Rational::one();
        let mut scaled = Vec::with_capacity(deg + 1);
        for c in &self.coeffs {
            scaled.push(c * &power);
            power *= scale;
        }
        tail.extend(scaled.into_iter().rev());
        let valuation = -(deg as i64);
        let tail_order = (order as i64 - valuation) as usize;
        Ok(LaurentSeries::new(
            valuation,
            PowerSeries::from_coeffs(tail, tail_order),
        ))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
