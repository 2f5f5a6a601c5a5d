//! Continued fractions whose entries are power series:
//!
//! ```text
//! head + b1 / (1 + b2 / (1 + ... + b_d / D))
//! ```
//!
//! `D` is `1` for a plain convergent, or an explicit bottom denominator for
//! fractions whose last level is not of the `1 + ...` shape.

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::SeriesError;
use crate::series::{PowerSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub head: Rational,
    pub numerators: Vec<PowerSeries>,
    /// Replaces the implicit `1` below the last numerator at full depth.
    pub bottom: Option<PowerSeries>,
}

impl ContinuedFraction {
    pub fn new(head: Rational, numerators: Vec<PowerSeries>) -> Self {
        ContinuedFraction {
            head,
            numerators,
            bottom: None,
        }
    }

    pub fn with_bottom(mut self, bottom: PowerSeries) -> Self {
        self.bottom = Some(bottom);
        self
    }

    pub fn depth(&self) -> usize {
        self.numerators.len()
    }

    /// Evaluates the first `depth` levels bottom-up at `order`.
    ///
    /// The explicit bottom denominator only applies when `depth` is the full
    /// depth; shallower convergents close with `1`. At depth zero the value is
    /// `head + (D - 1)`, which is just `head` for `D = 1`.
    pub fn eval(&self, depth: usize, order: usize) -> Result<PowerSeries, SeriesError> {
        if depth > self.numerators.len() {
            return Err(SeriesError::DepthOutOfRange {
                requested: depth,
                available: self.numerators.len(),
            });
        }
        let one = PowerSeries::one(order);
        let bottom = match &self.bottom {
            Some(d) if depth == self.numerators.len() => d.truncate(d.order().min(order)),
            _ => one.clone(),
        };
        let head = PowerSeries::constant(self.head.clone(), order);
        if depth == 0 {
            return Ok(&head + &(&bottom - &one));
        }
        // Constant terms of the nested denominators decide unit-ness, so
        // check them as scalars before doing series work.
        let levels = &self.numerators[..depth];
        let mut c = bottom.constant_term().clone();
        for b in levels.iter().rev() {
            if c.is_zero() {
                return Err(SeriesError::DivisorNotUnit);
            }
            c = Rational::one() + b.constant_term() / &c;
        }
        // Forward convergent recurrence: A_k = a_k A_{k-1} + b_k A_{k-2},
        // likewise for B, with partial denominators 1 except the bottom.
        // One final division keeps coefficient growth in check.
        let (mut a_prev, mut a) = (one.clone(), PowerSeries::zero(order));
        let (mut b_prev, mut b) = (PowerSeries::zero(order), one.clone());
        for (k, num) in levels.iter().enumerate() {
            let partial = if k + 1 == depth { &bottom } else { &one };
            let a_next = &(partial * &a) + &(num * &a_prev);
            let b_next = &(partial * &b) + &(num * &b_prev);
            a_prev = std::mem::replace(&mut a, a_next);
            b_prev = std::mem::replace(&mut b, b_next);
        }
        Ok(&head + &a.checked_div(&b)?)
    }

    /// Value at full depth.
    pub fn value(&self, order: usize) -> Result<PowerSeries, SeriesError> {
        self.eval(self.numerators.len(), order)
    }
}

/// Numerators of an infinite continued fraction, as a pure function of the
/// 1-based level index and the requested order.
pub trait NumeratorSource {
    fn numerator(&self, index: usize, order: usize) -> PowerSeries;
}

impl<F> NumeratorSource for F
where
    F: Fn(usize, usize) -> PowerSeries,
{
    fn numerator(&self, index: usize, order: usize) -> PowerSeries {
        self(index, order)
    }
}

/// The depth-`depth` convergent of `head + b1/(1 + b2/(1 + ...))`, checking
/// that every numerator below the first has zero constant term.
pub fn convergent<S: NumeratorSource + ?Sized>(
    head: &Rational,
    source: &S,
    depth: usize,
    order: usize,
) -> Result<ContinuedFraction, SeriesError> {
    let numerators = (1..=depth)
        .map(|index| {
            let b = source.numerator(index, order);
            if index > 1 && !b.constant_term().is_zero() {
                Err(SeriesError::NonzeroConstantNumerator { index })
            } else {
                Ok(b)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ContinuedFraction::new(head.clone(), numerators))
}

/// Evaluates an infinite continued fraction to `order`.
///
/// With numerators divisible by `x`, convergents of depth `n` and `n + 1`
/// agree through `x^n`; a constant first numerator costs one degree. Depth
/// `order + 2` therefore fixes every coefficient through `x^order` in both
/// shapes.
pub fn eval_infinite<S: NumeratorSource + ?Sized>(
    head: &Rational,
    source: &S,
    order: usize,
) -> Result<PowerSeries, SeriesError> {
    convergent(head, source, order + 2, order)?.value(order)
}

/// Largest `d` such that `a` and `b` agree in every degree `<= d`; `-1` if
/// the constant terms differ and `order` if they agree everywhere known.
pub fn agreement_degree(a: &PowerSeries, b: &PowerSeries) -> Result<i64, SeriesError> {
    if a.order() != b.order() {
        return Err(SeriesError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let first_diff = a.coeffs().iter().zip(b.coeffs()).position(|(x, y)| x != y);
    Ok(match first_diff {
        Some(k) => k as i64 - 1,
        None => a.order() as i64,
    })
}

/// Result of expanding a series into a continued fraction with monomial
/// numerators `beta_i x^(k_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalExpansion {
    pub fraction: ContinuedFraction,
    /// Exponents `k_i` of the numerators, in level order.
    pub exponents: Vec<usize>,
    /// Re-evaluating the fraction reproduces the input through this degree.
    pub certified_degree: usize,
}

/// Greedy monomial expansion: peel off `head = s_0`, then repeatedly take the
/// leading monomial `b` of the remainder `R` and continue with
/// `b / R - 1`, until the remainder vanishes at known precision.
///
/// Dividing by the remainder costs `k` degrees of precision, which the
/// numerator `x^k` gives back on evaluation; the certified degree is tracked
/// explicitly through that bookkeeping.
pub fn canonical_expand(s: &PowerSeries) -> CanonicalExpansion {
    let order = s.order();
    let head = s.constant_term().clone();
    let mut remainder = s - &PowerSeries::constant(head.clone(), order);
    let mut numerators = Vec::new();
    let mut exponents = Vec::new();
    while let Some(k) = remainder.valuation() {
        let beta = remainder.coeff(k).clone();
        numerators.push(PowerSeries::monomial(beta.clone(), k, order));
        exponents.push(k);
        let unit = remainder.shift_down(k);
        let ratio = PowerSeries::constant(beta, unit.order())
            .checked_div(&unit)
            .expect("leading coefficient is nonzero");
        remainder = &ratio - &PowerSeries::one(unit.order());
    }
    // The dropped remainder is O(x^(order_m + 1)); each level above shifts
    // that error up by its exponent.
    let error_degree = remainder.order() + 1 + exponents.iter().sum::<usize>();
    CanonicalExpansion {
        fraction: ContinuedFraction::new(head, numerators),
        exponents,
        certified_degree: (error_degree - 1).min(order),
    }
}

/// One random instance of the closeness property: two `levels`-level
/// fractions sharing monomial numerators and differing only in their tails.
#[derive(Debug, Clone)]
pub struct ClosenessTrial {
    pub levels: usize,
    pub order: usize,
    pub agreement: i64,
}

impl ClosenessTrial {
    pub fn holds(&self) -> bool {
        self.agreement >= self.levels as i64
    }
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=5);
        if !nonzero || n != 0 {
            return crate::series::rational(n, d);
        }
    }
}

/// A random series of the given order with zero constant term.
pub fn random_tail<R: Rng + ?Sized>(rng: &mut R, order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend((1..=order).map(|_| random_rational(rng, false)));
    PowerSeries::from_coeffs(coeffs, order)
}

/// Builds `A = 1 + b1/(1 + ... + b_n/(1 + P))` and the same fraction with
/// tail `Q`, then measures their agreement at order `levels + 3`.
pub fn closeness_trial<R: Rng + ?Sized>(
    rng: &mut R,
    levels: usize,
) -> Result<ClosenessTrial, SeriesError> {
    let order = levels + 3;
    let numerators: Vec<PowerSeries> = (0..levels)
        .map(|_| {
            let degree = rng.gen_range(1..=3);
            PowerSeries::monomial(random_rational(rng, true), degree, order)
        })
        .collect();
    let one = PowerSeries::one(order);
    let a = ContinuedFraction::new(Rational::one(), numerators.clone())
        .with_bottom(&one + &random_tail(rng, order))
        .value(order)?;
    let b = ContinuedFraction::new(Rational::one(), numerators)
        .with_bottom(&one + &random_tail(rng, order))
        .value(order)?;
    Ok(ClosenessTrial {
        levels,
        order,
        agreement: agreement_degree(&a, &b)?,
    })
}
