//! Chebyshev polynomials of the first kind and the renormalised ratio
//! `G_n(y) = y * T_n(1/(2y)) / T_{n-1}(1/(2y))`, computed two ways.

use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use crate::contfrac::{self, ContinuedFraction};
use crate::error::SeriesError;
use crate::series::{integer, rational, Polynomial, PowerSeries};

/// Append-only table of `T_1, T_2, ...` built by
/// `T_{n+1} = 2x T_n - T_{n-1}`.
#[derive(Debug)]
pub struct ChebyshevCache {
    // polys[i] holds T_{i+1}
    polys: RwLock<Vec<Polynomial>>,
}

impl Default for ChebyshevCache {
    fn default() -> Self {
        Self::new()
    }
}

impl ChebyshevCache {
    pub fn new() -> Self {
        let t1 = Polynomial::x();
        let t2 = Polynomial::new(vec![integer(-1), integer(0), integer(2)]);
        ChebyshevCache {
            polys: RwLock::new(vec![t1, t2]),
        }
    }

    pub fn get(&self, n: usize) -> Result<Polynomial, SeriesError> {
        if n == 0 {
            return Err(SeriesError::UnsupportedIndex(0));
        }
        {
            let polys = self.polys.read().expect("cache lock poisoned");
            if let Some(p) = polys.get(n - 1) {
                return Ok(p.clone());
            }
        }
        let mut polys = self.polys.write().expect("cache lock poisoned");
        let two_x = Polynomial::monomial(integer(2), 1);
        while polys.len() < n {
            let len = polys.len();
            let next = &(&two_x * &polys[len - 1]) - &polys[len - 2];
            polys.push(next);
        }
        Ok(polys[n - 1].clone())
    }

    pub fn len(&self) -> usize {
        self.polys.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global() -> &'static ChebyshevCache {
    static CACHE: OnceLock<ChebyshevCache> = OnceLock::new();
    CACHE.get_or_init(ChebyshevCache::new)
}

/// `T_n` for `n >= 1`, from the shared cache.
pub fn chebyshev_poly(n: usize) -> Result<Polynomial, SeriesError> {
    global().get(n)
}

/// `G_n(y)` through Laurent arithmetic: substitute `x = 1/(2y)` into both
/// polynomials, divide, and multiply by `y`.
pub fn g_ratio_series(n: usize, order: usize) -> Result<PowerSeries, SeriesError> {
    if n < 2 {
        return Err(SeriesError::UnsupportedIndex(n));
    }
    let half = rational(1, 2);
    let num = chebyshev_poly(n)?.reciprocal_substitute(&half, order)?;
    let den = chebyshev_poly(n - 1)?.reciprocal_substitute(&half, order)?;
    let ratio = num.checked_div(&den)?.shift(1);
    Ok(ratio
        .truncate(order as i64)
        .to_power_series()
        .expect("G_n has no negative powers"))
}

fn minus_y_squared(order: usize) -> PowerSeries {
    PowerSeries::monomial(integer(-1), 2, order)
}

/// `G_n` as the `(n-2)`-level fraction
/// `1 - y^2/(1 - y^2/(... - y^2/(1 - 2y^2)))`.
pub fn g_cf(n: usize, order: usize) -> Result<ContinuedFraction, SeriesError> {
    if n < 2 {
        return Err(SeriesError::UnsupportedIndex(n));
    }
    let bottom = &PowerSeries::one(order) + &minus_y_squared(order).scale(&integer(2));
    Ok(ContinuedFraction::new(integer(1), vec![minus_y_squared(order); n - 2]).with_bottom(bottom))
}

/// `G(y) = 1 - y^2/(1 - y^2/(1 - ...))`.
pub fn g_infinite_series(order: usize) -> PowerSeries {
    contfrac::eval_infinite(&integer(1), &|_, o| minus_y_squared(o), order)
        .expect("numerators are divisible by y")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigCheck {
    /// `max |T_n(cos t) - cos(nt)|` over the grid.
    pub max_abs_error: f64,
    /// `max |T_n(cos t)|` over the grid; at most 1 up to rounding.
    pub sup_norm: f64,
}

/// Checks `T_n(cos t) = cos(nt)` in floating point on `samples` equispaced
/// points of `[0, pi]`.
pub fn verify_trig_identity(n: usize, samples: usize) -> Result<TrigCheck, SeriesError> {
    let t_n = chebyshev_poly(n)?;
    let samples = samples.max(1);
    let step = if samples > 1 {
        PI / (samples - 1) as f64
    } else {
        0.0
    };
    let mut check = TrigCheck {
        max_abs_error: 0.0,
        sup_norm: 0.0,
    };
    for j in 0..samples {
        let t = step * j as f64;
        let value = t_n.eval_f64(t.cos());
        check.max_abs_error = check
            .max_abs_error
            .max((value - (n as f64 * t).cos()).abs());
        check.sup_norm = check.sup_norm.max(value.abs());
    }
    Ok(check)
}
