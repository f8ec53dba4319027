//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use tanhint::closed_form::{theorem_sum_with_bound, ClosedForm, IntegralSpec, ZetaCombination};
use tanhint::laurent_series::{cosh_power, sinhc, sinhc_inverse_power, TruncatedSeries};
use tanhint::numeric::{eval_combination, pi_digits, quadrature, zeta_odd};
use tanhint::residue_oracle::{pole_sum_factor, residue_kernel};
use tanhint::{oracle_closed_form, theorem_sum, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:.0?}"))
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn combo(terms: &[(u32, i64, i64)]) -> ZetaCombination {
    terms.iter().map(|&(s, n, d)| (s, r(n, d))).collect()
}

/// The ten published values.
fn golden() -> Vec<((i64, i64), ZetaCombination)> {
    vec![
        ((2, 2), combo(&[(3, 14, 1)])),
        ((3, 3), combo(&[(3, -7, 1), (5, 186, 1)])),
        ((4, 2), combo(&[(3, 56, 3), (5, -124, 1)])),
        ((4, 4), combo(&[(5, -496, 3), (7, 2540, 1)])),
        ((5, 3), combo(&[(3, -7, 1), (5, 310, 1), (7, -1905, 1)])),
        ((5, 5), combo(&[(5, 31, 1), (7, -3175, 1), (9, 35770, 1)])),
        ((6, 2), combo(&[(3, 322, 15), (5, -248, 1), (7, 762, 1)])),
        ((6, 4), combo(&[(5, -2852, 15), (7, 5080, 1), (9, -28616, 1)])),
        ((6, 6), combo(&[(7, 5842, 5), (9, -57232, 1), (11, 515844, 1)])),
        (
            (7, 7),
            combo(&[(7, -127, 1), (9, 1402184, 45), (11, -1003030, 1), (13, 7568484, 1)]),
        ),
    ]
}

fn golden_corpus() -> Outcome {
    let start = Instant::now();
    for ((m, n), expected) in golden() {
        let got = theorem_sum(IntegralSpec::new(m, n).unwrap());
        ensure(got == expected, || format!("J({m},{n}): got {got}, expected {expected}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("10/10 exact in {:.2?}", start.elapsed()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let specs = IntegralSpec::all_up_to(12);
    ensure(specs.len() == 36, || format!("expected 36 valid pairs, found {}", specs.len()))?;
    for &s in &specs {
        let a = theorem_sum(s);
        let b = oracle_closed_form(s);
        ensure(a == b, || format!("{s}: theorem {a} vs residues {b}"))?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{} pairs with m <= 12 identical in {:.2?}", specs.len(), start.elapsed()))
}

fn bound_stability() -> Outcome {
    let specs = IntegralSpec::all_up_to(12);
    for &s in &specs {
        let lo = theorem_sum_with_bound(s, i64::from(s.half_floor())).map_err(|e| e.to_string())?;
        let hi = theorem_sum_with_bound(s, i64::from(s.half_ceil())).map_err(|e| e.to_string())?;
        ensure(lo == hi, || format!("{s}: floor {lo} vs ceil {hi}"))?;
    }
    Ok(format!("{} pairs agree for P = floor(m/2) and ceil(m/2)", specs.len()))
}

fn numeric_cross_validation() -> Outcome {
    const TOLERANCE: f64 = 2e-10;
    let start = Instant::now();
    let specs = IntegralSpec::all_up_to(8);
    ensure(specs.len() == 16, || format!("expected 16 valid pairs, found {}", specs.len()))?;
    let mut worst = 0.0f64;
    for &s in &specs {
        let quad = quadrature(s, 1e-10).map_err(|e| format!("{s}: {e}"))?;
        let exact = eval_combination(&theorem_sum(s), 30);
        let diff = quad.sub(&exact).abs().to_f64();
        worst = worst.max(diff);
        ensure(diff <= TOLERANCE, || format!("{s}: |quadrature - closed form| = {diff:e}"))?;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{} pairs, max discrepancy {worst:.2e} <= {TOLERANCE:e} in {:.2?}",
        specs.len(),
        start.elapsed()
    ))
}

fn random_unit_series() -> impl Strategy<Value = TruncatedSeries> {
    let coeff = (-40i64..40, 1i64..12).prop_map(|(n, d)| r(n, d));
    (
        coeff.clone().prop_filter("unit", |c| !c.is_zero()),
        proptest::collection::vec(coeff, 0..10),
    )
        .prop_map(|(c0, rest)| {
            let mut cs = vec![c0];
            cs.extend(rest);
            TruncatedSeries::new(0, cs)
        })
}

fn series_kernel() -> Outcome {
    let seed = sinhc(6);
    for (e, expected) in [(0, r(1, 1)), (2, r(1, 6)), (4, r(1, 120))] {
        let got = seed.coefficient(e).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("[y^{e}] sinh(y)/y = {got}, expected {expected}"))?;
    }

    let config = Config { cases: 200, failure_persistence: None, ..Config::default() };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let cases = std::cell::Cell::new(0u32);
    runner
        .run(&random_unit_series(), |a| {
            cases.set(cases.get() + 1);
            let inv = a.reciprocal().expect("unit series invert");
            let one = &a * &inv;
            prop_assert_eq!(one.order(), a.order());
            prop_assert!(one.agrees_with(&TruncatedSeries::one(a.order())));
            Ok(())
        })
        .map_err(|e| format!("reciprocal round-trip: {e}"))?;
    let cases = cases.get();
    ensure(cases == 200, || format!("ran {cases} round-trips, expected 200"))?;

    for m in 2..=12u32 {
        let order = i64::from(m) + 1;
        let u = cosh_power(i64::from(m), order);
        let v = sinhc_inverse_power(i64::from(m), order);
        let w = residue_kernel(m);
        for (name, s) in [("U", &u), ("V", &v), ("U·V", &w)] {
            ensure(s.order() >= order, || format!("m = {m}: {name} truncated at {}", s.order()))?;
            ensure(s.is_even(), || format!("m = {m}: {name} has odd terms: {s}"))?;
            let c0 = s.coefficient(0).map_err(|e| e.to_string())?;
            ensure(c0.is_one(), || format!("m = {m}: {name}(0) = {c0}"))?;
        }
    }
    Ok("seed 1, 1/6, 1/120; 200 reciprocal round-trips; U, V, U·V even with unit constant for m <= 12".into())
}

/// `Σ_{k=lo}^{hi} term(k)`, added from the smallest term up with Kahan compensation.
fn compensated_sum(lo: u64, hi: u64, term: impl Fn(u64) -> f64) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for k in (lo..=hi).rev() {
        let y = term(k) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

fn zeta_pi_engine() -> Outcome {
    const K: u64 = 1_000_000;
    // ζ(3): partial sum to K plus the midpoint of the integral bracket
    // 1/(2(K+1)²) <= Σ_{k>K} k^-3 <= 1/(2K²).
    let partial = compensated_sum(1, K, |k| (k as f64).powi(-3));
    let (lo, hi) = (0.5 / ((K + 1) as f64).powi(2), 0.5 / (K as f64).powi(2));
    let zeta3_oracle = partial + 0.5 * (lo + hi);
    let zeta3 = zeta_odd(3, 30).map_err(|e| e.to_string())?;
    let dz = (zeta3.to_f64() - zeta3_oracle).abs();
    ensure(dz <= 1e-15, || format!("ζ(3) differs from direct summation by {dz:e}"))?;

    // π from the BBP series, summed exactly; the k-th term is below 4·16^-k.
    let mut bbp = Rational::zero();
    let mut sixteen = Rational::one();
    for k in 0..30i64 {
        let t = r(4, 8 * k + 1) - r(2, 8 * k + 4) - r(1, 8 * k + 5) - r(1, 8 * k + 6);
        bbp += t * &sixteen;
        sixteen = sixteen * r(1, 16);
    }
    let pi = pi_digits(30);
    let dpi = (pi.to_rational() - bbp).abs().to_f64();
    ensure(dpi <= 1e-15, || format!("π differs from BBP summation by {dpi:e}"))?;

    for e in [3u32, 5, 7] {
        let factor = pole_sum_factor(i64::from(e)).map_err(|err| err.to_string())?;
        let exact = zeta_odd(i64::from(e), 30).map_err(|err| err.to_string())?.to_f64()
            * factor.scale.to_string().parse::<f64>().unwrap();
        let two_e = 2f64.powi(e as i32);
        let partial = two_e * compensated_sum(1, K, |k| ((2 * k - 1) as f64).powi(-(e as i32)));
        // 2^e Σ_{k>K} (2k-1)^-e <= 2^e (2K-1)^(1-e) / (2(e-1)).
        let tail = two_e * ((2 * K - 1) as f64).powi(1 - e as i32) / (2.0 * f64::from(e - 1));
        let gap = exact - partial;
        // Both sides are f64 values near 2^e; allow a few ulps of rounding.
        let slack = 8.0 * f64::EPSILON * exact.abs();
        ensure(gap >= -slack && gap <= tail + slack, || {
            format!("e = {e}: (2^e-1)ζ(e) - partial sum = {gap:e}, tail bound {tail:e}")
        })?;
    }
    Ok(format!("ζ(3) Δ = {dz:.1e}, π Δ = {dpi:.1e}, pole sums e = 3, 5, 7 within tail bounds"))
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tanhint"))
        .args(args)
        .output()
        .expect("run tanhint binary");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn cli_contract() -> Outcome {
    let expect_code = |args: &[&str], code: i32| -> Result<(), String> {
        let (got, _, err) = run_cli(args);
        ensure(got == code, || format!("`{}` exited {got}, expected {code}: {err}", args.join(" ")))
    };
    expect_code(&["eval", "--m", "2", "--n", "2"], 0)?;
    expect_code(&["eval", "--m", "3", "--n", "2"], 2)?;
    expect_code(&["eval", "--m", "2", "--n", "2", "--format", "xml"], 2)?;
    expect_code(&["verify", "--m", "3", "--n", "4"], 2)?;
    expect_code(&["verify", "--m", "4", "--n", "2"], 0)?;
    expect_code(&["verify", "--m", "2", "--n", "2", "--tolerance", "1e-30"], 1)?;
    expect_code(&["table", "--max-m", "1"], 2)?;
    expect_code(&["frobnicate"], 2)?;

    for ((m, n), expected) in golden() {
        let (code, out, err) =
            run_cli(&["eval", "--m", &m.to_string(), "--n", &n.to_string(), "--format", "json"]);
        ensure(code == 0, || format!("eval J({m},{n}) json exited {code}: {err}"))?;
        let text = out.trim_end_matches('\n');
        let parsed = ClosedForm::from_json(text).map_err(|e| format!("J({m},{n}): {e}"))?;
        ensure(parsed.value == expected, || format!("J({m},{n}) json carries {}", parsed.value))?;
        let again = parsed.to_json();
        ensure(again == text, || format!("J({m},{n}) re-rendered as {again}, emitted {text}"))?;
    }
    Ok("exit codes 0/1/2 distinct; JSON byte-stable for the 10 published values".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden corpus", golden_corpus),
        ("oracle equivalence", oracle_equivalence),
        ("bound stability", bound_stability),
        ("numeric cross-validation", numeric_cross_validation),
        ("series kernel properties", series_kernel),
        ("zeta/pi engine", zeta_pi_engine),
        ("cli contract", cli_contract),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
