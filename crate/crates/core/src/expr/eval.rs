use num_traits::One;
use thiserror::Error;

use super::ExprNode;
use crate::catalan::catalan_series;
use crate::chebyshev::{chebyshev_poly, g_infinite_series, g_ratio_series};
use crate::error::SeriesError;
use crate::series::{
    render_laurent, render_series, LaurentSeries, PowerSeries, Rational, Variable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown function '{0}' (known: cheb(n), catalan(), G(n), Ginf())")]
    UnknownFunction(String),
    #[error("{name} expects {expected} argument(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("argument {0} is out of range")]
    BadArgument(i64),
    #[error("expression mixes the variables x and y")]
    MixedVariables,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(i64),
}

/// Result of evaluating an expression: an ordinary power series whenever no
/// negative powers remain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Series(PowerSeries),
    Laurent(LaurentSeries),
}

impl Value {
    pub fn to_laurent(&self) -> LaurentSeries {
        match self {
            Value::Series(s) => LaurentSeries::from(s),
            Value::Laurent(l) => l.clone(),
        }
    }

    pub fn render(&self, var: Variable, max_terms: Option<usize>) -> String {
        match self {
            Value::Series(s) => render_series(s, var, max_terms),
            Value::Laurent(l) => render_laurent(l, var, max_terms),
        }
    }
}

const MAX_EXPONENT: i64 = 4096;

/// The variable an expression is written in: the one it mentions, `y` for
/// the `G` family, `x` otherwise.
pub fn variable_of(e: &ExprNode) -> Result<Variable, EvalError> {
    fn walk(
        e: &ExprNode,
        seen: &mut Option<Variable>,
        g_family: &mut bool,
    ) -> Result<(), EvalError> {
        let mut note = |v: Variable| match seen {
            Some(prev) if *prev != v => Err(EvalError::MixedVariables),
            _ => {
                *seen = Some(v);
                Ok(())
            }
        };
        match e {
            ExprNode::Variable(v) => note(*v),
            ExprNode::BigO(v, k) if *k != 0 => note(*v),
            ExprNode::Call { name, .. } => {
                *g_family |= name == "G" || name == "Ginf";
                Ok(())
            }
            ExprNode::Neg(a) | ExprNode::Pow(a, _) => walk(a, seen, g_family),
            ExprNode::Add(a, b)
            | ExprNode::Sub(a, b)
            | ExprNode::Mul(a, b)
            | ExprNode::Div(a, b) => {
                walk(a, seen, g_family)?;
                walk(b, seen, g_family)
            }
            _ => Ok(()),
        }
    }
    let mut seen = None;
    let mut g_family = false;
    walk(e, &mut seen, &mut g_family)?;
    Ok(seen.unwrap_or(if g_family { Variable::Y } else { Variable::X }))
}

fn index_arg(name: &str, args: &[i64], min: i64) -> Result<usize, EvalError> {
    if args.len() != 1 {
        return Err(EvalError::Arity {
            name: name.to_string(),
            expected: 1,
            got: args.len(),
        });
    }
    if args[0] < min || args[0] > 100_000 {
        return Err(EvalError::BadArgument(args[0]));
    }
    Ok(args[0] as usize)
}

fn no_args(name: &str, args: &[i64]) -> Result<(), EvalError> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(EvalError::Arity {
            name: name.to_string(),
            expected: 0,
            got: args.len(),
        })
    }
}

fn call(name: &str, args: &[i64], order: usize) -> Result<PowerSeries, EvalError> {
    match name {
        "cheb" => {
            let n = index_arg(name, args, 1)?;
            Ok(PowerSeries::from_polynomial(&chebyshev_poly(n)?, order))
        }
        "catalan" => no_args(name, args).map(|_| catalan_series(order)),
        "G" => Ok(g_ratio_series(index_arg(name, args, 2)?, order)?),
        "Ginf" => no_args(name, args).map(|_| g_infinite_series(order)),
        _ => Err(EvalError::UnknownFunction(name.to_string())),
    }
}

/// Evaluates with every leaf known to `x^order`.
fn eval_at(e: &ExprNode, order: usize) -> Result<LaurentSeries, EvalError> {
    let w = order as i64;
    Ok(match e {
        ExprNode::Constant(n) => LaurentSeries::monomial(Rational::from_integer(n.clone()), 0, w),
        ExprNode::Variable(_) => LaurentSeries::monomial(Rational::one(), 1, w),
        ExprNode::Neg(a) => -&eval_at(a, order)?,
        ExprNode::Add(a, b) => &eval_at(a, order)? + &eval_at(b, order)?,
        ExprNode::Sub(a, b) => &eval_at(a, order)? - &eval_at(b, order)?,
        ExprNode::Mul(a, b) => &eval_at(a, order)? * &eval_at(b, order)?,
        ExprNode::Div(a, b) => eval_at(a, order)?.checked_div(&eval_at(b, order)?)?,
        ExprNode::Pow(a, k) => {
            if k.abs() > MAX_EXPONENT {
                return Err(EvalError::ExponentTooLarge(*k));
            }
            eval_at(a, order)?.pow(*k as i32)?
        }
        ExprNode::Call { name, args } => LaurentSeries::from(call(name, args, order)?),
        ExprNode::BigO(_, k) => LaurentSeries::zero(k - 1),
    })
}

/// Evaluates `e` in Laurent arithmetic and truncates to `x^order`.
///
/// Division by series with positive valuation costs precision, so leaves are
/// evaluated with growing headroom until the result reaches `order` or stops
/// improving (an explicit `O(...)` term caps it).
pub fn eval_expr(e: &ExprNode, order: usize) -> Result<Value, EvalError> {
    variable_of(e)?;
    let mut previous: Option<i64> = None;
    let mut slack = 0usize;
    let result = loop {
        let value = eval_at(e, order + slack)?;
        if value.order() >= order as i64 {
            break value.truncate(order as i64);
        }
        if previous == Some(value.order()) || slack >= 1024 {
            break value;
        }
        previous = Some(value.order());
        slack = if slack == 0 { 8 } else { slack * 2 };
    };
    Ok(match result.to_power_series() {
        Some(s) => Value::Series(s),
        None => Value::Laurent(result),
    })
}
