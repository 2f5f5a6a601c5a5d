//! Command-line front end.
//!
//! Every command builds a [`Report`]; text mode prints its human-readable
//! lines, JSON mode prints `{command, inputs, result, pass}`. Exit codes:
//! 0 success, 1 failed verification, 2 usage or input error.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value as Json};

use crate::catalan::{
    catalan_numbers, fibonacci_ratio, fibonacci_ratio_error, golden_convergent, golden_ratio,
    theorem1_agreement, verify_quadratic, Agreement,
};
use crate::chebyshev::{chebyshev_poly, g_ratio_series, verify_trig_identity};
use crate::contfrac::{canonical_expand, closeness_trial, ContinuedFraction};
use crate::expr::{eval_expr, parse, variable_of, Value};
use crate::series::{
    render_polynomial, render_series, LaurentSeries, Polynomial, PowerSeries, Rational, Variable,
};

/// Terms shown in text output before the `O(...)` marker.
pub const DISPLAY_TERMS: usize = 12;

const GRAMMAR: &str = "\
Expressions use one variable (x or y), integer literals, + - * / ^,
parentheses, and the functions cheb(n) = T_n, catalan() = C(x),
G(n) = y*T_n(1/(2y))/T_{n-1}(1/(2y)) and Ginf() = 1 - y^2/(1 - y^2/(1 - ...)).
Exponents are integer literals and may be negative. O(x^k) marks a
truncation. Unary minus binds looser than ^ and tighter than * and /.";

#[derive(Debug, Parser)]
#[command(name = "chebcat", version, about = "Exact series, continued fractions, Chebyshev ratios and Catalan numbers", after_help = GRAMMAR)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chebyshev polynomials and their renormalised ratios.
    Cheb {
        #[command(subcommand)]
        action: ChebCommand,
    },
    /// Print the Catalan numbers c_0 through c_k.
    Catalan { k: usize },
    /// Exact and numeric verification checks.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Continued fractions of series.
    Cf {
        #[command(subcommand)]
        action: CfCommand,
    },
    /// Evaluate an expression as a series.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Numeric continued fractions.
    Demo {
        #[command(subcommand)]
        demo: DemoCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChebCommand {
    /// Print T_n(x).
    Show { n: usize },
    /// Print G_n(y) = y*T_n(1/(2y))/T_{n-1}(1/(2y)) as a power series.
    Ratio {
        n: usize,
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Agreement of G_n(y) with 1 - y^2 C(y^2) through y^(2n-4).
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: Option<usize>,
        /// Check every n from --n up to this value.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// C(x) - 1 = x C(x)^2.
    Quadratic {
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Random instances of the closeness property for continued fractions.
    Closeness {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// T_n(cos t) = cos(nt) on a grid of [0, pi], in floating point.
    Trig {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CfCommand {
    /// Expand a series into a continued fraction with monomial numerators.
    Expand {
        expr: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// F_{n+1}/F_n as a continued fraction of ones, against the golden ratio.
    Fibonacci {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Json,
    pub result: Json,
    pub pass: bool,
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> Json {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "pass": self.pass,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn default_order(n: usize) -> usize {
    (2 * n).max(16)
}

fn rational_json(r: &Rational) -> Json {
    Json::String(r.to_string())
}

pub fn series_json(s: &PowerSeries) -> Json {
    let start = s.valuation().unwrap_or(s.order() + 1);
    json!({
        "valuation": s.valuation(),
        "order": s.order(),
        "coeffs": s.coeffs()[start..].iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn laurent_json(s: &LaurentSeries) -> Json {
    let coeffs = match s.valuation() {
        Some(v) => s.coeffs_from(v).iter().map(rational_json).collect(),
        None => Vec::new(),
    };
    json!({
        "valuation": s.valuation(),
        "order": s.order(),
        "coeffs": coeffs,
    })
}

fn polynomial_json(p: &Polynomial) -> Json {
    json!({
        "degree": p.degree(),
        "coeffs": p.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Series(s) => series_json(s),
        Value::Laurent(l) => laurent_json(l),
    }
}

fn numerator_text(b: &PowerSeries, var: Variable) -> String {
    render_polynomial(&Polynomial::new(b.coeffs().to_vec()), var)
}

/// One level per line, indented by depth.
pub fn fraction_text(cf: &ContinuedFraction, var: Variable) -> String {
    let mut lines = vec![format!("head = {}", cf.head)];
    for (i, b) in cf.numerators.iter().enumerate() {
        lines.push(format!(
            "{}b{} = {}",
            "  ".repeat(i + 1),
            i + 1,
            numerator_text(b, var)
        ));
    }
    if let Some(d) = &cf.bottom {
        lines.push(format!(
            "{}bottom = {}",
            "  ".repeat(cf.numerators.len() + 1),
            numerator_text(d, var)
        ));
    }
    lines.join("\n")
}

fn agreement_line(a: &Agreement) -> String {
    let mismatch = a
        .first_mismatch
        .map_or_else(|| "none".to_string(), |d| d.to_string());
    format!(
        "agreement={} (required ≥ {}) first_mismatch={} {}",
        a.degree,
        a.required,
        mismatch,
        if a.passes() { "PASS" } else { "FAIL" }
    )
}

fn agreement_json(a: &Agreement) -> Json {
    json!({
        "n": a.n,
        "order": a.order,
        "agreement_degree": a.degree,
        "required": a.required,
        "first_mismatch": a.first_mismatch,
        "pass": a.passes(),
    })
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn theorem1(
    n: usize,
    order: Option<usize>,
    sweep: Option<usize>,
    jobs: usize,
) -> Result<Report, UsageError> {
    if n < 2 {
        return Err(UsageError(format!(
            "the agreement statement requires n > 1, got n = {n}"
        )));
    }
    let last = sweep.unwrap_or(n);
    if last < n {
        return Err(UsageError(format!("--sweep {last} is below --n {n}")));
    }
    let ns: Vec<usize> = (n..=last).collect();
    let run = |k: usize| theorem1_agreement(k, order.unwrap_or_else(|| default_order(k)));
    let mut results: BTreeMap<usize, Agreement> = BTreeMap::new();
    let jobs = jobs.clamp(1, ns.len());
    if jobs == 1 {
        for &k in &ns {
            results.insert(k, run(k)?);
        }
    } else {
        let chunks: Vec<Vec<usize>> = (0..jobs)
            .map(|j| ns.iter().copied().skip(j).step_by(jobs).collect())
            .collect();
        let outputs = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| scope.spawn(|| chunk.iter().map(|&k| (k, run(k))).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect::<Vec<_>>()
        });
        for (k, r) in outputs {
            results.insert(k, r?);
        }
    }
    let pass = results.values().all(Agreement::passes);
    let inputs = json!({ "n": n, "order": order, "sweep": sweep });
    if sweep.is_none() {
        let a = &results[&n];
        return Ok(Report {
            command: "verify theorem1".into(),
            inputs,
            result: agreement_json(a),
            pass,
            text: agreement_line(a),
        });
    }
    let mut text: Vec<String> = results
        .values()
        .map(|a| format!("n={} order={} {}", a.n, a.order, agreement_line(a)))
        .collect();
    text.push(format!(
        "{} values checked {}",
        results.len(),
        pass_word(pass)
    ));
    Ok(Report {
        command: "verify theorem1".into(),
        inputs,
        result: Json::Array(results.values().map(agreement_json).collect()),
        pass,
        text: text.join("\n"),
    })
}

fn closeness(trials: usize, levels: usize, seed: u64) -> Result<Report, UsageError> {
    if levels == 0 {
        return Err(UsageError("--levels must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let mut min_margin = i64::MAX;
    for t in 0..trials {
        let lv = 1 + t % levels;
        let trial = closeness_trial(&mut rng, lv)?;
        min_margin = min_margin.min(trial.agreement - lv as i64);
        if !trial.holds() {
            failures += 1;
        }
    }
    let pass = failures == 0;
    let margin = (trials > 0).then_some(min_margin);
    Ok(Report {
        command: "verify closeness".into(),
        inputs: json!({ "trials": trials, "levels": levels, "seed": seed }),
        result: json!({ "failures": failures, "min_margin": margin }),
        pass,
        text: format!(
            "trials={trials} levels=1..{levels} seed={seed} failures={failures} min_margin={} {}",
            margin.map_or_else(|| "n/a".to_string(), |m| m.to_string()),
            pass_word(pass)
        ),
    })
}

fn evaluate(text: &str, order: usize) -> Result<(Value, Variable), UsageError> {
    let e = parse(text)?;
    let var = variable_of(&e)?;
    Ok((eval_expr(&e, order)?, var))
}

fn execute(cli: &Cli) -> Result<Report, UsageError> {
    Ok(match &cli.command {
        Command::Cheb {
            action: ChebCommand::Show { n },
        } => {
            let p = chebyshev_poly(*n)?;
            Report {
                command: "cheb show".into(),
                inputs: json!({ "n": n }),
                result: polynomial_json(&p),
                pass: true,
                text: render_polynomial(&p, Variable::X),
            }
        }
        Command::Cheb {
            action: ChebCommand::Ratio { n, order },
        } => {
            if *n < 2 {
                return Err(UsageError(format!("G_n needs n >= 2, got {n}")));
            }
            let order = order.unwrap_or_else(|| default_order(*n));
            let g = g_ratio_series(*n, order)?;
            Report {
                command: "cheb ratio".into(),
                inputs: json!({ "n": n, "order": order }),
                result: series_json(&g),
                pass: true,
                text: render_series(&g, Variable::Y, Some(DISPLAY_TERMS)),
            }
        }
        Command::Catalan { k } => {
            let table = catalan_numbers(k + 1);
            let values: Vec<String> = table.values().iter().map(ToString::to_string).collect();
            Report {
                command: "catalan".into(),
                inputs: json!({ "k": k }),
                result: json!(values),
                pass: true,
                text: values.join(" "),
            }
        }
        Command::Verify { check } => match check {
            VerifyCommand::Theorem1 {
                n,
                order,
                sweep,
                jobs,
            } => theorem1(*n, *order, *sweep, *jobs)?,
            VerifyCommand::Quadratic { order } => {
                if *order < 1 {
                    return Err(UsageError("--order must be at least 1".into()));
                }
                let pass = verify_quadratic(*order);
                Report {
                    command: "verify quadratic".into(),
                    inputs: json!({ "order": order }),
                    result: json!({ "holds": pass }),
                    pass,
                    text: format!("C(x) - 1 = x*C(x)^2 through x^{order} {}", pass_word(pass)),
                }
            }
            VerifyCommand::Closeness {
                trials,
                levels,
                seed,
            } => closeness(*trials, *levels, *seed)?,
            VerifyCommand::Trig { n, samples } => {
                let check = verify_trig_identity(*n, *samples)?;
                let pass = check.max_abs_error < 1e-10 && check.sup_norm <= 1.0 + 1e-10;
                Report {
                    command: "verify trig".into(),
                    inputs: json!({ "n": n, "samples": samples }),
                    result: json!({
                        "max_abs_error": check.max_abs_error,
                        "sup_norm": check.sup_norm,
                    }),
                    pass,
                    text: format!(
                        "max_abs_error={:e} sup_norm={} {}",
                        check.max_abs_error,
                        check.sup_norm,
                        pass_word(pass)
                    ),
                }
            }
        },
        Command::Cf {
            action: CfCommand::Expand { expr, order },
        } => {
            let (value, var) = evaluate(expr, *order)?;
            let series =
                match value {
                    Value::Series(s) => s,
                    Value::Laurent(_) => return Err(UsageError(
                        "continued-fraction expansion needs a power series without negative powers"
                            .into(),
                    )),
                };
            let e = canonical_expand(&series);
            let numerators: Vec<Json> = e
                .fraction
                .numerators
                .iter()
                .zip(&e.exponents)
                .map(|(b, &k)| json!({ "coeff": rational_json(b.coeff(k)), "exponent": k }))
                .collect();
            Report {
                command: "cf expand".into(),
                inputs: json!({ "expr": expr, "order": order }),
                result: json!({
                    "head": rational_json(&e.fraction.head),
                    "numerators": numerators,
                    "certified_degree": e.certified_degree,
                }),
                pass: true,
                text: format!(
                    "{}\ncertified through {}^{}",
                    fraction_text(&e.fraction, var),
                    var,
                    e.certified_degree
                ),
            }
        }
        Command::Eval { expr, order } => {
            let (value, var) = evaluate(expr, *order)?;
            Report {
                command: "eval".into(),
                inputs: json!({ "expr": expr, "order": order }),
                result: value_json(&value),
                pass: true,
                text: value.render(var, Some(DISPLAY_TERMS)),
            }
        }
        Command::Demo {
            demo: DemoCommand::Fibonacci { n },
        } => {
            if *n < 1 {
                return Err(UsageError("--n must be at least 1".into()));
            }
            let ratio = fibonacci_ratio(*n);
            let fraction = golden_convergent(*n);
            let error = fibonacci_ratio_error(*n);
            let pass = ratio == fraction;
            Report {
                command: "demo fibonacci".into(),
                inputs: json!({ "n": n }),
                result: json!({
                    "ratio": rational_json(&ratio),
                    "continued_fraction": rational_json(&fraction),
                    "phi": golden_ratio(),
                    "abs_error": error,
                }),
                pass,
                text: format!(
                    "F_{}/F_{} = {ratio}\ndepth-{n} fraction 1 + 1/(1 + ...) = {fraction}\n|ratio - phi| = {error:e} {}",
                    n + 1,
                    n,
                    pass_word(pass)
                ),
            }
        }
    })
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    };
    let json_text = serde_json::to_string_pretty(&report.to_json()).expect("report is valid JSON");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{json_text}\n")) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    let stdout = match cli.format {
        Format::Text => format!("{}\n", report.text),
        Format::Json => format!("{json_text}\n"),
    };
    Outcome {
        code: if report.pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
