//! Catalan numbers and their generating function `C(x)`, its quadratic
//! relation and continued fraction, the second root `1/x - C(x)`, the
//! Chebyshev-ratio agreement check, and the Fibonacci analogue.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::chebyshev::g_ratio_series;
use crate::contfrac::{self, agreement_degree};
use crate::error::SeriesError;
use crate::series::{integer, LaurentSeries, PowerSeries, Rational};

/// `values[k]` holds `c_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanTable {
    values: Vec<BigInt>,
}

impl CatalanTable {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.values.get(k)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// First `count` Catalan numbers by `c_{n+1} = sum_i c_i c_{n-i}`.
pub fn catalan_numbers(count: usize) -> CatalanTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let next = if n == 0 {
            BigInt::one()
        } else {
            (0..n).map(|i| &values[i] * &values[n - 1 - i]).sum()
        };
        values.push(next);
    }
    CatalanTable { values }
}

pub fn catalan_series(order: usize) -> PowerSeries {
    let table = catalan_numbers(order + 1);
    PowerSeries::from_coeffs(
        table
            .values
            .into_iter()
            .map(Rational::from_integer)
            .collect(),
        order,
    )
}

/// Whether `s - 1 = x * s^2` holds at the order of `s`.
pub fn satisfies_quadratic(s: &PowerSeries) -> bool {
    let lhs = s - &PowerSeries::one(s.order());
    let rhs = (s * s).shift_up(1);
    lhs == rhs
}

pub fn verify_quadratic(order: usize) -> bool {
    satisfies_quadratic(&catalan_series(order))
}

/// Numerators of `1/(1 - x/(1 - x/(1 - ...)))` written as
/// `0 + 1/(1 + (-x)/(1 + (-x)/...))`.
fn catalan_numerator(index: usize, order: usize) -> PowerSeries {
    if index == 1 {
        PowerSeries::one(order)
    } else {
        PowerSeries::monomial(integer(-1), 1, order)
    }
}

/// The `depth`-level convergent of the Catalan continued fraction.
pub fn catalan_convergent(depth: usize, order: usize) -> Result<PowerSeries, SeriesError> {
    contfrac::convergent(&Rational::zero(), &catalan_numerator, depth, order)?.value(order)
}

/// `C(x)` as the value of its infinite continued fraction.
pub fn catalan_cf_series(order: usize) -> PowerSeries {
    contfrac::eval_infinite(&Rational::zero(), &catalan_numerator, order)
        .expect("numerators below the first are divisible by x")
}

/// The other root `1/x - C(x)` of `c - 1 = x c^2`, known to `x^order`.
pub fn second_root_series(order: usize) -> LaurentSeries {
    let inv_x = LaurentSeries::monomial(Rational::one(), -1, order as i64);
    &inv_x - &LaurentSeries::from(catalan_series(order))
}

/// `c - 1 - x c^2` in Laurent arithmetic.
pub fn quadratic_residual(c: &LaurentSeries) -> LaurentSeries {
    let one = LaurentSeries::one(c.order());
    let x_c2 = (c * c).shift(1);
    &(c - &one) - &x_c2
}

/// `1 - y^2 C(y^2) = 1 - c_0 y^2 - c_1 y^4 - c_2 y^6 - ...` to `y^order`.
pub fn theorem1_target(order: usize) -> PowerSeries {
    let catalan = catalan_numbers(order / 2 + 1);
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    for (k, c) in catalan.values().iter().enumerate() {
        let degree = 2 * k + 2;
        if degree > order {
            break;
        }
        coeffs[degree] = -Rational::from_integer(c.clone());
    }
    PowerSeries::from_coeffs(coeffs, order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agreement {
    pub n: usize,
    pub order: usize,
    /// Largest degree through which `G_n` and the target agree.
    pub degree: i64,
    /// First degree where they differ, if within the order.
    pub first_mismatch: Option<usize>,
    pub required: i64,
}

impl Agreement {
    pub fn passes(&self) -> bool {
        self.degree >= self.required
    }
}

/// Compares `G_n(y)` with `1 - y^2 C(y^2)`; the bound to meet is `2n - 4`.
pub fn theorem1_agreement(n: usize, order: usize) -> Result<Agreement, SeriesError> {
    if n < 2 {
        return Err(SeriesError::UnsupportedIndex(n));
    }
    let degree = agreement_degree(&g_ratio_series(n, order)?, &theorem1_target(order))?;
    let first_mismatch = (degree < order as i64).then(|| (degree + 1) as usize);
    Ok(Agreement {
        n,
        order,
        degree,
        first_mismatch,
        required: 2 * n as i64 - 4,
    })
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `F_{n+1} / F_n` exactly.
pub fn fibonacci_ratio(n: usize) -> Rational {
    Rational::new(fibonacci(n + 1), fibonacci(n))
}

/// `1 + 1/(1 + 1/(... + 1/1))` with `depth` ones.
pub fn golden_convergent(depth: usize) -> Rational {
    assert!(depth >= 1);
    (1..depth).fold(Rational::one(), |v, _| Rational::one() + v.recip())
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `|F_{n+1}/F_n - phi|` in floating point.
pub fn fibonacci_ratio_error(n: usize) -> f64 {
    let ratio = fibonacci_ratio(n).to_f64().unwrap_or(f64::NAN);
    (ratio - golden_ratio()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::g_infinite_series;

    fn ps(cs: &[i64], order: usize) -> PowerSeries {
        PowerSeries::from_coeffs(cs.iter().map(|&c| integer(c)).collect(), order)
    }

    /// Direct count of balanced bracket strings with `n` pairs.
    fn count_brackets(n: usize) -> u64 {
        (0u64..1 << (2 * n))
            .filter(|bits| {
                let mut depth = 0i32;
                for i in 0..2 * n {
                    depth += if bits >> i & 1 == 1 { 1 } else { -1 };
                    if depth < 0 {
                        return false;
                    }
                }
                depth == 0
            })
            .count() as u64
    }

    #[test]
    fn numbers() {
        let t = catalan_numbers(6);
        let expected: Vec<BigInt> = [1, 1, 2, 5, 14, 42].map(BigInt::from).to_vec();
        assert_eq!(t.values(), &expected[..]);
        for n in 0..=8 {
            assert_eq!(
                catalan_numbers(9).get(n),
                Some(&BigInt::from(count_brackets(n)))
            );
        }
    }

    #[test]
    fn series() {
        assert_eq!(catalan_series(3), ps(&[1, 1, 2, 5], 3));
        assert_eq!(catalan_series(0), ps(&[1], 0));
        assert_eq!(catalan_series(5), ps(&[1, 1, 2, 5, 14, 42], 5));
    }

    #[test]
    fn quadratic() {
        assert!(verify_quadratic(10));
        assert!(verify_quadratic(1));
        assert!(!satisfies_quadratic(&ps(&[1, 1, 2, 6], 3)));
    }

    #[test]
    fn continued_fraction() {
        assert_eq!(catalan_cf_series(4), ps(&[1, 1, 2, 5, 14], 4));
        assert_eq!(catalan_cf_series(0), ps(&[1], 0));
        let c = catalan_series(20);
        for k in 1..=20 {
            let d = agreement_degree(&catalan_convergent(k, 20).unwrap(), &c).unwrap();
            assert!(d >= k as i64 - 1, "depth {k}: {d}");
        }
    }

    #[test]
    fn second_root() {
        let r = second_root_series(3);
        assert_eq!(r.valuation(), Some(-1));
        assert_eq!(r.coeffs_from(-1), [1, -1, -1, -2, -5].map(integer).to_vec());
        let residual = quadratic_residual(&second_root_series(8));
        assert!(residual.is_zero());
        assert_eq!(residual.order(), 8);
    }

    #[test]
    fn target_matches_infinite_fraction() {
        for order in 0..=30 {
            assert_eq!(theorem1_target(order), g_infinite_series(order));
        }
    }

    #[test]
    fn agreement_examples() {
        let a3 = theorem1_agreement(3, 6).unwrap();
        assert!(a3.degree >= 2);
        assert_eq!(a3.first_mismatch, Some(4));
        let a4 = theorem1_agreement(4, 8).unwrap();
        assert!(a4.degree >= 4);
        assert_eq!(a4.first_mismatch, Some(6));
        assert!(theorem1_agreement(12, 30).unwrap().degree >= 20);
        // 1 - 2y^2 against 1 - y^2: the bound 0 holds with room to spare.
        let a2 = theorem1_agreement(2, 4).unwrap();
        assert_eq!((a2.degree, a2.first_mismatch), (1, Some(2)));
        assert_eq!(
            theorem1_agreement(1, 4),
            Err(SeriesError::UnsupportedIndex(1))
        );
    }

    #[test]
    fn fibonacci_examples() {
        assert!((fibonacci_ratio_error(1) - 0.618_033_988_749_895).abs() < 1e-12);
        assert!(fibonacci_ratio_error(50) < 1e-10);
        for n in 1..=30 {
            assert_eq!(golden_convergent(n), fibonacci_ratio(n));
        }
    }
}
