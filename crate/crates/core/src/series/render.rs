//! Text rendering shared by the CLI and the golden files.
//!
//! Terms appear in increasing degree, coefficients as `p/q` (or `p`), and a
//! truncated series ends with an explicit `O(x^k)` marker:
//! `1 - y^2 - y^4 + O(y^6)`. The output is valid input for the expression
//! parser.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{LaurentSeries, Polynomial, PowerSeries, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variable {
    #[default]
    X,
    Y,
}

impl Variable {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'x' => Some(Variable::X),
            'y' => Some(Variable::Y),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Variable::X => 'x',
            Variable::Y => 'y',
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

fn power(var: Variable, exp: i64) -> String {
    match exp {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

fn write_terms<'a>(
    terms: impl Iterator<Item = (i64, &'a Rational)>,
    var: Variable,
    known_to: Option<i64>,
    max_terms: Option<usize>,
) -> String {
    let mut out = String::new();
    let mut shown = 0usize;
    let mut marker = known_to.map(|order| order + 1);
    for (exp, c) in terms.filter(|(_, c)| !c.is_zero()) {
        if max_terms.is_some_and(|m| shown >= m) {
            // The first omitted term bounds what the display still pins down.
            marker = Some(marker.map_or(exp, |m| m.min(exp)));
            break;
        }
        let magnitude = c.abs();
        let body = if exp == 0 {
            magnitude.to_string()
        } else if magnitude.is_one() {
            power(var, exp)
        } else {
            format!("{magnitude}*{}", power(var, exp))
        };
        match (shown, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
        shown += 1;
    }
    match marker {
        Some(k) if shown == 0 => format!("O({})", power(var, k)),
        Some(k) => format!("{out} + O({})", power(var, k)),
        None if shown == 0 => "0".to_string(),
        None => out,
    }
}

pub fn render_series(s: &PowerSeries, var: Variable, max_terms: Option<usize>) -> String {
    write_terms(
        s.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c)),
        var,
        Some(s.order() as i64),
        max_terms,
    )
}

pub fn render_laurent(s: &LaurentSeries, var: Variable, max_terms: Option<usize>) -> String {
    let offset = s.valuation().unwrap_or(0);
    let empty = PowerSeries::zero(0);
    let coeffs = s.tail().unwrap_or(&empty).coeffs();
    let coeffs = if s.is_zero() { &coeffs[..0] } else { coeffs };
    write_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (offset + k as i64, c)),
        var,
        Some(s.order()),
        max_terms,
    )
}

pub fn render_polynomial(p: &Polynomial, var: Variable) -> String {
    write_terms(
        p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c)),
        var,
        None,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{integer, rational};

    fn ps(cs: &[i64], order: usize) -> PowerSeries {
        PowerSeries::from_coeffs(cs.iter().map(|&c| integer(c)).collect(), order)
    }

    #[test]
    fn series_format() {
        let g = ps(&[1, 0, -1, 0, -1], 5);
        assert_eq!(
            render_series(&g, Variable::Y, None),
            "1 - y^2 - y^4 + O(y^6)"
        );
        assert_eq!(render_series(&ps(&[0, 3], 0), Variable::X, None), "O(x)");
        assert_eq!(render_series(&ps(&[0], 3), Variable::X, None), "O(x^4)");
        assert_eq!(
            render_series(&ps(&[-2, 1, 5], 2), Variable::X, None),
            "-2 + x + 5*x^2 + O(x^3)"
        );
    }

    #[test]
    fn display_limit_moves_marker() {
        let s = ps(&[1, 1, 1, 1], 3);
        assert_eq!(render_series(&s, Variable::X, Some(2)), "1 + x + O(x^2)");
    }

    #[test]
    fn laurent_and_fractions() {
        let l = LaurentSeries::new(
            -2,
            PowerSeries::from_coeffs(vec![rational(1, 2), integer(0), integer(-1)], 3),
        );
        assert_eq!(
            render_laurent(&l, Variable::Y, None),
            "1/2*y^-2 - 1 + O(y^2)"
        );
        assert_eq!(
            render_laurent(&LaurentSeries::zero(-1), Variable::X, None),
            "O(1)"
        );
    }

    #[test]
    fn polynomial_format() {
        let t3 = Polynomial::new([0, -3, 0, 4].map(integer).to_vec());
        assert_eq!(render_polynomial(&t3, Variable::X), "-3*x + 4*x^3");
        assert_eq!(render_polynomial(&Polynomial::zero(), Variable::X), "0");
    }
}
