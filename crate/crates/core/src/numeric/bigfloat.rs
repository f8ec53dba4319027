use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_arith::Rational;

/// Decimal fixed-point number with a rigorous error radius.
///
/// Represents `mantissa · 10^-scale` with `|true value - mantissa · 10^-scale|
/// <= err · 10^-scale`. Every operation rounds to nearest and widens `err` to
/// cover both the rounding and the propagated input errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mantissa: BigInt,
    scale: u32,
    err: BigUint,
}

pub(crate) fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Nearest integer to `n / d`, ties away from zero.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
    let (q, r) = n.div_mod_floor(&d);
    if (r << 1u32) >= d {
        q + 1
    } else {
        q
    }
}

/// Smallest integer `>= n / d` for positive `d`.
fn div_ceil_u(n: &BigUint, d: &BigUint) -> BigUint {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

impl BigFloat {
    pub fn new(mantissa: BigInt, scale: u32, err: BigUint) -> Self {
        BigFloat { mantissa, scale, err }
    }

    pub fn zero(scale: u32) -> Self {
        BigFloat::new(BigInt::zero(), scale, BigUint::zero())
    }

    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let num = r.numer() * pow10(scale);
        let exact = (&num % r.denom()).is_zero();
        let mantissa = div_round(&num, r.denom());
        BigFloat::new(mantissa, scale, if exact { BigUint::zero() } else { BigUint::one() })
    }

    /// Exact decimal expansion of an `f64`, rounded to `scale`, with an extra
    /// caller-supplied error radius.
    pub fn from_f64(x: f64, err: f64, scale: u32) -> Self {
        let r = num_rational::BigRational::from_float(x).expect("finite float");
        let mut out = BigFloat::from_rational(&Rational::from(r), scale);
        let e = num_rational::BigRational::from_float(err.abs()).expect("finite error bound");
        let e_ulps = (e * num_rational::BigRational::from_integer(pow10(scale))).ceil().to_integer();
        out.err += e_ulps.to_biguint().expect("non-negative");
        out
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Error radius in units of `10^-scale`.
    pub fn err_ulps(&self) -> &BigUint {
        &self.err
    }

    /// Error radius as a float (rounded up slightly).
    pub fn error_bound(&self) -> f64 {
        let e = self.err.to_f64().unwrap_or(f64::INFINITY);
        e * 10f64.powi(-(self.scale as i32)) * (1.0 + 1e-12)
    }

    /// True if the error radius is below `10^-digits`.
    pub fn guarantees(&self, digits: u32) -> bool {
        if digits > self.scale {
            return false;
        }
        BigInt::from(self.err.clone()) < pow10(self.scale - digits)
    }

    pub fn to_f64(&self) -> f64 {
        num_rational::BigRational::new(self.mantissa.clone(), pow10(self.scale))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale)).expect("nonzero power of ten")
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa > BigInt::from(self.err.clone())
    }

    /// Re-expresses the value at another scale, rounding when coarsening.
    pub fn rescale(&self, scale: u32) -> BigFloat {
        if scale >= self.scale {
            let f = pow10(scale - self.scale);
            return BigFloat::new(&self.mantissa * &f, scale, &self.err * f.magnitude());
        }
        let f = pow10(self.scale - scale);
        let exact = (&self.mantissa % &f).is_zero();
        let mantissa = div_round(&self.mantissa, &f);
        let mut err = div_ceil_u(&self.err, f.magnitude());
        if !exact {
            err += 1u32;
        }
        BigFloat::new(mantissa, scale, err)
    }

    fn aligned(&self, other: &BigFloat) -> (BigFloat, BigFloat) {
        let s = self.scale.max(other.scale);
        (self.rescale(s), other.rescale(s))
    }

    pub fn add(&self, other: &BigFloat) -> BigFloat {
        let (a, b) = self.aligned(other);
        BigFloat::new(a.mantissa + b.mantissa, a.scale, a.err + b.err)
    }

    pub fn sub(&self, other: &BigFloat) -> BigFloat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat::new(-&self.mantissa, self.scale, self.err.clone())
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat::new(self.mantissa.abs(), self.scale, self.err.clone())
    }

    pub fn mul(&self, other: &BigFloat) -> BigFloat {
        let (a, b) = self.aligned(other);
        let unit = pow10(a.scale);
        let mantissa = div_round(&(&a.mantissa * &b.mantissa), &unit);
        let spread = a.mantissa.magnitude() * &b.err + b.mantissa.magnitude() * &a.err + &a.err * &b.err;
        let err = div_ceil_u(&spread, unit.magnitude()) + 1u32;
        BigFloat::new(mantissa, a.scale, err)
    }

    /// Quotient; `None` if the divisor's error interval contains zero.
    pub fn div(&self, other: &BigFloat) -> Option<BigFloat> {
        let (a, b) = self.aligned(other);
        let b_mag = b.mantissa.magnitude();
        if b_mag <= &b.err {
            return None;
        }
        let unit = pow10(a.scale);
        let mantissa = div_round(&(&a.mantissa * &unit), &b.mantissa);
        // |A/B - a/b| <= (ea |b| + |a| eb) / ((|b| - eb) |b|), in ulps after scaling.
        let spread = (&a.err * b_mag + a.mantissa.magnitude() * &b.err) * unit.magnitude();
        let floor = (b_mag - &b.err) * b_mag;
        let err = div_ceil_u(&spread, &floor) + 1u32;
        Some(BigFloat::new(mantissa, a.scale, err))
    }

    pub fn mul_rational(&self, r: &Rational) -> BigFloat {
        let mantissa = div_round(&(&self.mantissa * r.numer()), r.denom());
        let num = r.numer().magnitude();
        let den = r.denom().magnitude();
        let err = div_ceil_u(&(&self.err * num), den) + 1u32;
        BigFloat::new(mantissa, self.scale, err)
    }

    pub fn powi(&self, k: u32) -> BigFloat {
        let mut acc = BigFloat::from_rational(&Rational::one(), self.scale);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Decimal rendering with exactly `digits` places after the point,
    /// rounded to nearest.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let r = self.rescale(digits);
        let mag = r.mantissa.magnitude().to_string();
        let sign = if r.mantissa.sign() == Sign::Minus { "-" } else { "" };
        let d = digits as usize;
        let padded = if mag.len() <= d { format!("{}{}", "0".repeat(d + 1 - mag.len()), mag) } else { mag };
        let (int, frac) = padded.split_at(padded.len() - d);
        if d == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Upper bound on `|self - other|` including both error radii.
    pub fn distance_bound(&self, other: &BigFloat) -> f64 {
        let d = self.sub(other);
        let mag = BigFloat::new(d.mantissa.abs(), d.scale, BigUint::zero()).to_f64();
        mag + d.error_bound()
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.1e}", self.to_decimal_string(self.scale), self.error_bound())
    }
}
