//! π and odd zeta values to a requested number of decimals, each with a
//! rigorous error radius, and evaluation of a [`ZetaCombination`].

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::bigfloat::{pow10, BigFloat};
use crate::closed_form::ZetaCombination;
use crate::error::NumericError;
use crate::exact_arith::{binomial, factorial, Rational};

/// Extra decimals carried internally beyond the requested output precision.
pub const GUARD_DIGITS: u32 = 10;

/// `floor(10^scale · arctan(1/x))`-ish: the alternating series with every
/// term truncated to an integer. Returns the sum and the number of terms,
/// which bounds the accumulated truncation error in ulps.
fn arctan_inv(x: u32, scale: u32) -> (BigInt, u32) {
    let x2 = BigInt::from(x) * x;
    let mut power = pow10(scale) / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        // floor(floor(a/b)/c) = floor(a/(bc)), so power stays exact-floored.
        power /= &x2;
        k += 1;
    }
    (sum, k)
}

/// π at `scale` decimals via Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub(crate) fn pi_at_scale(scale: u32) -> BigFloat {
    let (a, na) = arctan_inv(5, scale);
    let (b, nb) = arctan_inv(239, scale);
    // Each truncated term is off by < 1 ulp, and the dropped tail is below
    // one ulp because the loop stops once 10^scale / x^(2k+1) < 1.
    let err = 16 * (na + 1) + 4 * (nb + 1);
    BigFloat::new(a * 16 - b * 4, scale, BigUint::from(err))
}

/// π with an error radius below `10^-digits`.
pub fn pi_digits(digits: u32) -> BigFloat {
    pi_at_scale(digits + GUARD_DIGITS)
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` (with `B_1 = -1/2`), memoized.
pub(crate) fn bernoulli(n: usize) -> Rational {
    let mut b = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if b.is_empty() {
        b.push(Rational::one());
    }
    for k in b.len()..=n {
        // Odd indices above 1 vanish.
        if k > 1 && k % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let acc: Rational = (0..k).map(|i| binomial(k as i64 + 1, i as u32) * &b[i]).sum();
        b.push(-acc / Rational::from(k as i64 + 1));
    }
    b[n].clone()
}

/// `s (s+1) ... (s+len-1)`.
fn rising(s: u32, len: u32) -> BigInt {
    (0..len).fold(BigInt::one(), |acc, i| acc * (s + i))
}

/// `ζ(s)` at `scale` decimals by Euler–Maclaurin summation.
///
/// ```text
/// ζ(s) = Σ_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
///        + Σ_{i=1}^{p} B_2i/(2i)! · s(s+1)...(s+2i-2) · N^(-s-2i+1) + R_p
/// ```
///
/// For real `s > 1` the remainder satisfies `|R_p| <= |T_{p+1}|`, the first
/// omitted correction term.
pub(crate) fn zeta_at_scale(s: u32, scale: u32) -> BigFloat {
    let target = Rational::new(1, pow10(scale)).expect("nonzero");
    let mut cutoff = scale.max(10);
    loop {
        if let Some(v) = euler_maclaurin(s, scale, cutoff, &target) {
            return v;
        }
        cutoff *= 2;
    }
}

fn euler_maclaurin(s: u32, scale: u32, cutoff: u32, target: &Rational) -> Option<BigFloat> {
    let n_big = BigInt::from(cutoff);
    let unit = pow10(scale);

    let mut head = BigFloat::zero(scale);
    for k in 1..cutoff {
        let kth = BigFloat::from_rational(
            &Rational::new(BigInt::one(), BigInt::from(k).pow(s)).expect("nonzero"),
            scale,
        );
        head = head.add(&kth);
    }

    let inv_n = Rational::new(BigInt::one(), n_big.clone()).expect("nonzero");
    let mut correction = inv_n.pow(s as i32 - 1).ok()? / Rational::from(i64::from(s) - 1)
        + inv_n.pow(s as i32).ok()? / Rational::from(2);

    // Enough Bernoulli numbers for corrections up to order ~ scale; if the
    // asymptotic terms start growing first, the caller retries with larger N.
    let max_terms = (scale as usize).max(8) + 2;
    let mut previous: Option<Rational> = None;
    for i in 1..=max_terms as u32 {
        let term = bernoulli(2 * i as usize) / Rational::from_integer(factorial(2 * i))
            * Rational::from_integer(rising(s, 2 * i - 1))
            * inv_n.pow((s + 2 * i - 1) as i32).ok()?;
        let mag = term.abs();
        if mag < *target {
            let bound = (mag * Rational::from_integer(unit.clone())).as_big().ceil().to_integer();
            let mut out = head.add(&BigFloat::from_rational(&correction, scale));
            let extra = BigFloat::new(BigInt::zero(), scale, bound.to_biguint().expect("non-negative"));
            out = out.add(&extra);
            return Some(out);
        }
        if let Some(prev) = &previous {
            if &mag > prev {
                return None;
            }
        }
        correction += term;
        previous = Some(mag);
    }
    None
}

/// `ζ(s)` for odd `s >= 3` with an error radius below `10^-digits`.
pub fn zeta_odd(s: i64, digits: u32) -> Result<BigFloat, NumericError> {
    if s < 3 || s % 2 == 0 {
        return Err(NumericError::ZetaDomain { s });
    }
    let s = u32::try_from(s).map_err(|_| NumericError::ZetaDomain { s })?;
    Ok(zeta_at_scale(s, digits + GUARD_DIGITS))
}

/// `Σ_s c_s ζ(s) / π^(s-1)` with an error radius below `10^-digits`.
pub fn eval_combination(zc: &ZetaCombination, digits: u32) -> BigFloat {
    // Large coefficients amplify the error radii of ζ and π, so grow the
    // working precision by their size and retry if the bound is still too wide.
    let coeff_digits = zc
        .terms()
        .map(|(_, c)| c.numer().abs().to_string().len() as u32)
        .max()
        .unwrap_or(0);
    let mut scale = digits + GUARD_DIGITS + coeff_digits;
    loop {
        let v = eval_at_scale(zc, scale);
        if v.guarantees(digits + 1) {
            return v;
        }
        scale += GUARD_DIGITS;
    }
}

fn eval_at_scale(zc: &ZetaCombination, scale: u32) -> BigFloat {
    let pi = pi_at_scale(scale);
    let mut total = BigFloat::zero(scale);
    for (s, c) in zc.terms() {
        let zeta = zeta_at_scale(s, scale);
        let term = zeta
            .div(&pi.powi(s - 1))
            .expect("π^(s-1) is bounded away from zero")
            .mul_rational(c);
        total = total.add(&term);
    }
    total
}
