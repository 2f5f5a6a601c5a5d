//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails or overruns its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chebcat::catalan::{
    catalan_cf_series, catalan_convergent, catalan_series, fibonacci_ratio_error,
    golden_convergent, quadratic_residual, second_root_series, theorem1_agreement,
    verify_quadratic,
};
use chebcat::chebyshev::{chebyshev_poly, g_cf, g_ratio_series, verify_trig_identity};
use chebcat::contfrac::{agreement_degree, canonical_expand, closeness_trial};
use chebcat::series::{LaurentSeries, PowerSeries, Rational};

type Check = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `binom(2k, k) / (k + 1)`, independent of the convolution recurrence.
fn catalan_closed_form(k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(2 * k - i) / BigInt::from(i + 1);
    }
    b / BigInt::from(k + 1)
}

fn fib_pair(n: usize) -> (u128, u128) {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    (a, b)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-12i64..=12)),
        BigInt::from(rng.gen_range(1i64..=7)),
    )
}

fn random_series(rng: &mut ChaCha8Rng, order: usize, unit: bool) -> PowerSeries {
    let mut coeffs: Vec<Rational> = (0..=order).map(|_| random_rational(rng)).collect();
    if unit {
        while coeffs[0].is_zero() {
            coeffs[0] = random_rational(rng);
        }
    }
    PowerSeries::from_coeffs(coeffs, order)
}

fn criterion_1() -> Check {
    let mut worst = i64::MAX;
    for n in 3..=30 {
        let a = theorem1_agreement(n, 2 * n).map_err(|e| e.to_string())?;
        // Coefficients of 1 - y^2 C(y^2) from the closed form.
        let g = g_ratio_series(n, 2 * n).map_err(|e| e.to_string())?;
        for k in 0..=(2 * n - 4) {
            let expected = match k {
                0 => Rational::one(),
                k if k >= 2 && k % 2 == 0 => {
                    -Rational::from_integer(catalan_closed_form(k / 2 - 1))
                }
                _ => Rational::zero(),
            };
            ensure(g.coeff(k) == &expected, || {
                format!("n={n}: coefficient {k} differs")
            })?;
        }
        ensure(a.degree >= 2 * n as i64 - 4, || {
            format!("n={n}: agreement {} < {}", a.degree, 2 * n - 4)
        })?;
        worst = worst.min(a.degree - (2 * n as i64 - 4));
    }
    Ok(format!("n in 3..=30, minimum surplus over 2n-4 is {worst}"))
}

fn criterion_2() -> Check {
    for n in 2..=20 {
        let order = 2 * n;
        let direct = g_ratio_series(n, order).map_err(|e| e.to_string())?;
        let cf = g_cf(n, order)
            .and_then(|f| f.value(order))
            .map_err(|e| e.to_string())?;
        ensure(direct == cf, || format!("n={n}: routes differ"))?;
    }
    Ok("n in 2..=20 at order 2n".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let levels = 1 + i % 6;
        let t = closeness_trial(&mut rng, levels).map_err(|e| e.to_string())?;
        ensure(t.holds(), || {
            format!("trial {i}: levels {levels}, agreement {}", t.agreement)
        })?;
    }
    Ok("200 trials, levels 1..=6".into())
}

fn criterion_4() -> Check {
    ensure(verify_quadratic(60), || {
        "quadratic fails at order 60".into()
    })?;
    let c40 = catalan_series(40);
    for k in 0..=40 {
        ensure(
            c40.coeff(k) == &Rational::from_integer(catalan_closed_form(k)),
            || format!("c_{k} differs from closed form"),
        )?;
    }
    ensure(catalan_cf_series(40) == c40, || {
        "fraction differs at order 40".into()
    })?;
    let c20 = catalan_series(20);
    for k in 1..=20 {
        let conv = catalan_convergent(k, 20).map_err(|e| e.to_string())?;
        let d = agreement_degree(&conv, &c20).map_err(|e| e.to_string())?;
        ensure(d >= k as i64 - 1, || format!("depth {k}: agreement {d}"))?;
    }
    Ok("quadratic@60, fraction@40, convergents k<=20".into())
}

fn criterion_5() -> Check {
    let root = second_root_series(30);
    let r = quadratic_residual(&root);
    ensure(r.is_zero(), || "residual is nonzero".into())?;
    ensure(r.order() >= 30, || {
        format!("residual known only to {}", r.order())
    })?;
    ensure(root.valuation() == Some(-1), || {
        "valuation is not -1".into()
    })?;
    Ok("residual zero through x^30".into())
}

fn criterion_6() -> Check {
    for n in 1..=30 {
        let t = chebyshev_poly(n).map_err(|e| e.to_string())?;
        let expected = Rational::from_integer(BigInt::one() << (n - 1));
        ensure(
            t.degree() == Some(n) && t.leading_coeff() == Some(&expected),
            || format!("T_{n}: wrong leading term"),
        )?;
    }
    for m in 1..=8 {
        for n in 1..=8 {
            let (tm, tn) = (chebyshev_poly(m).unwrap(), chebyshev_poly(n).unwrap());
            let mn = tm.compose(&tn);
            ensure(mn == tn.compose(&tm), || {
                format!("T_{m}, T_{n} do not commute")
            })?;
            ensure(mn == chebyshev_poly(m * n).unwrap(), || {
                format!("T_{m} o T_{n} != T_{}", m * n)
            })?;
        }
    }
    let mut worst = 0f64;
    for n in 1..=12 {
        let c = verify_trig_identity(n, 1000).map_err(|e| e.to_string())?;
        ensure(c.max_abs_error < 1e-10, || {
            format!("n={n}: error {:e}", c.max_abs_error)
        })?;
        worst = worst.max(c.max_abs_error);
    }
    Ok(format!("max trig error {worst:.2e}"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let s = random_series(&mut rng, 10, false);
        let e = canonical_expand(&s);
        let back = e.fraction.value(10).map_err(|err| err.to_string())?;
        let d = agreement_degree(&back, &s).map_err(|err| err.to_string())?;
        ensure(d >= e.certified_degree as i64, || {
            format!(
                "series {i}: agreement {d} < certified {}",
                e.certified_degree
            )
        })?;
        ensure(canonical_expand(&s) == e, || {
            format!("series {i}: not deterministic")
        })?;
    }
    Ok("100 series of order 10".into())
}

fn criterion_8() -> Check {
    for n in 1..=30 {
        let (f_n, f_n1) = fib_pair(n);
        let expected = Rational::new(BigInt::from(f_n1), BigInt::from(f_n));
        ensure(golden_convergent(n) == expected, || {
            format!("depth {n} differs")
        })?;
    }
    let (f50, f51) = fib_pair(50);
    let independent = (f51 as f64 / f50 as f64 - (1.0 + 5f64.sqrt()) / 2.0).abs();
    let err = fibonacci_ratio_error(50);
    ensure(err < 1e-10 && independent < 1e-10, || {
        format!("error {err:e}")
    })?;
    Ok(format!("|F51/F50 - phi| = {err:.2e}"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..500 {
        let order = rng.gen_range(0..=12);
        let a = random_series(&mut rng, order, false);
        let b = random_series(&mut rng, order, true);
        let q = a.checked_div(&b).map_err(|e| e.to_string())?;
        ensure(&q * &b == a, || format!("power pair {i}"))?;
    }
    for i in 0..500 {
        let (oa, ob) = (rng.gen_range(0..=12), rng.gen_range(0..=12));
        let a = LaurentSeries::new(rng.gen_range(-4..=4), random_series(&mut rng, oa, true));
        let b = LaurentSeries::new(rng.gen_range(-4..=4), random_series(&mut rng, ob, true));
        let q = a.checked_div(&b).map_err(|e| e.to_string())?;
        let back = &q * &b;
        ensure(back.valuation() == a.valuation(), || {
            format!("laurent pair {i}: valuation")
        })?;
        ensure(back == a.truncate(back.order()), || {
            format!("laurent pair {i}: coefficients")
        })?;
    }
    Ok("500 power + 500 Laurent pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "agreement with 1 - y^2 C(y^2)",
            Duration::from_secs(5),
            criterion_1,
        ),
        (
            2,
            "ratio vs fraction routes",
            Duration::from_secs(2),
            criterion_2,
        ),
        (
            3,
            "closeness of shared-prefix fractions",
            Duration::from_secs(5),
            criterion_3,
        ),
        (4, "Catalan identities", Duration::from_secs(2), criterion_4),
        (
            5,
            "second root residual",
            Duration::from_secs(1),
            criterion_5,
        ),
        (
            6,
            "Chebyshev properties",
            Duration::from_secs(3),
            criterion_6,
        ),
        (
            7,
            "canonical expansion round trip",
            Duration::from_secs(3),
            criterion_7,
        ),
        (
            8,
            "golden ratio convergents",
            Duration::from_secs(1),
            criterion_8,
        ),
        (
            9,
            "division round trips",
            Duration::from_secs(5),
            criterion_9,
        ),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "[{}] criterion {id}: {name}: {detail} ({:.3}s)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 9 criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
