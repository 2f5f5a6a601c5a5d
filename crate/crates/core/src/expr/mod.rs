//! A small expression language for series, so the command line can take
//! formulas such as `1/(1 - x*catalan())` or `G(8) - Ginf()`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? INT)*
//! primary := INT | 'x' | 'y' | NAME '(' INT,* ')' | 'O(' (1 | var | var^INT) ')'
//!          | '(' expr ')'
//! ```

mod eval;
mod parser;

pub use eval::{eval_expr, variable_of, EvalError, Value};
pub use parser::{parse, ExprNode, ParseError};
