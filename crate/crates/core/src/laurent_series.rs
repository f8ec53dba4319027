//! Truncated Laurent series in one formal variable `y` over [`Rational`].
//!
//! A series stores exact coefficients for the exponents
//! `lowest, lowest + 1, ..., order - 1`; everything from `y^order` upwards is
//! unknown. Arithmetic propagates that bound so a result never claims a
//! coefficient its inputs could not determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::exact_arith::{factorial, Rational};

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    lowest: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with coefficients for `y^lowest ..` and order `lowest + coeffs.len()`.
    pub fn new(lowest: i64, coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { lowest, coeffs }
    }

    /// The zero series, known up to `O(y^order)`.
    pub fn zero(order: i64) -> Self {
        TruncatedSeries { lowest: order, coeffs: Vec::new() }
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        Self::monomial(c, 0, order)
    }

    pub fn one(order: i64) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c * y^exponent + O(y^order)`.
    pub fn monomial(c: Rational, exponent: i64, order: i64) -> Self {
        if exponent >= order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Rational::zero(); (order - exponent) as usize];
        coeffs[0] = c;
        TruncatedSeries { lowest: exponent, coeffs }
    }

    /// Maclaurin series of `exp(c y)`: `sum_{k < order} c^k / k! y^k`.
    pub fn exponential(c: &Rational, order: i64) -> Self {
        let mut coeffs = Vec::with_capacity(order.max(0) as usize);
        let mut power = Rational::one();
        for k in 0..order.max(0) {
            coeffs.push(&power / &Rational::from_integer(factorial(k as u32)));
            power *= c;
        }
        TruncatedSeries { lowest: 0, coeffs }
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn order(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Trims leading zero coefficients, raising `lowest`. The order is unchanged.
    pub fn normalize(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.lowest += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Coefficient of `y^e`. Exponents below `lowest` are zero; exponents at
    /// or beyond the truncation order are unknown.
    pub fn coefficient(&self, e: i64) -> Result<Rational, SeriesError> {
        if e >= self.order() {
            return Err(SeriesError::BeyondOrder { exponent: e, order: self.order() });
        }
        if e < self.lowest {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(e - self.lowest) as usize].clone())
    }

    /// Multiplication by `y^k`.
    pub fn shift(mut self, k: i64) -> Self {
        self.lowest += k;
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Reduces the truncation order to `order` (no-op if already lower).
    pub fn truncate(mut self, order: i64) -> Self {
        if order <= self.lowest {
            return Self::zero(order);
        }
        let keep = (order - self.lowest) as usize;
        self.coeffs.truncate(keep);
        self
    }

    /// True if every odd-exponent coefficient below the order is zero.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, c)| e % 2 == 0 || c.is_zero())
    }

    /// Exponent/coefficient pairs for every stored coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.lowest + i as i64, c))
    }

    /// Equality on the overlap of both reliable ranges.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        let top = self.order().min(other.order());
        let bottom = self.lowest.min(other.lowest);
        (bottom..top).all(|e| self.coefficient(e) == other.coefficient(e))
    }

    pub fn reciprocal(&self) -> Result<TruncatedSeries, SeriesError> {
        let a = self.clone().normalize();
        if a.coeffs.is_empty() {
            return Err(SeriesError::NotInvertible);
        }
        let lead_inv = a.coeffs[0].recip().map_err(|_| SeriesError::NotInvertible)?;
        let len = a.coeffs.len();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for i in 1..len {
            let acc: Rational = (1..=i).map(|t| &a.coeffs[t] * &out[i - t]).sum();
            out.push(-(acc * &lead_inv));
        }
        Ok(TruncatedSeries { lowest: -a.lowest, coeffs: out })
    }

    /// `self^p`; negative powers go through [`Self::reciprocal`].
    pub fn pow(&self, p: i64) -> Result<TruncatedSeries, SeriesError> {
        if p < 0 {
            return self.reciprocal()?.pow(-p);
        }
        let base = self.clone().normalize();
        // Relative precision is what survives powering.
        let rel = base.coeffs.len() as i64;
        let mut result = TruncatedSeries::one(rel);
        let mut square = base;
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &square;
            }
            e >>= 1;
            if e > 0 {
                square = &square * &square;
            }
        }
        Ok(result)
    }

    fn combine(&self, other: &TruncatedSeries, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order().min(other.order());
        let lowest = self.lowest.min(other.lowest).min(order);
        let zero = Rational::zero();
        let coeffs = (lowest..order)
            .map(|e| {
                let a = self.get(e).unwrap_or(&zero);
                let b = other.get(e).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        TruncatedSeries { lowest, coeffs }
    }

    fn get(&self, e: i64) -> Option<&Rational> {
        if e < self.lowest {
            return None;
        }
        self.coeffs.get((e - self.lowest) as usize)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

/// Product of two truncated series. With lowest exponents `la`, `lb` and
/// orders `oa`, `ob`, the result is reliable below `min(la + ob, lb + oa)`.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let a = self.clone().normalize();
        let b = rhs.clone().normalize();
        let lowest = a.lowest + b.lowest;
        let order = (a.lowest + b.order()).min(b.lowest + a.order());
        let len = (order - lowest).max(0) as usize;
        let coeffs = (0..len)
            .map(|i| (0..=i).map(|t| &a.coeffs[t] * &b.coeffs[i - t]).sum())
            .collect();
        TruncatedSeries { lowest, coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms().filter(|(_, c)| !c.is_zero()) {
            write!(f, "{c}·y^{e} + ")?;
        }
        write!(f, "O(y^{})", self.order())
    }
}

pub fn series_from_exponential(c: &Rational, order: i64) -> TruncatedSeries {
    TruncatedSeries::exponential(c, order)
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a + b
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a * b
}

pub fn series_int_pow(a: &TruncatedSeries, p: i64) -> Result<TruncatedSeries, SeriesError> {
    a.pow(p)
}

pub fn series_reciprocal(a: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.reciprocal()
}

/// `(e^y - e^{-y}) / (2y)`, known up to `O(y^order)`.
pub fn sinhc(order: i64) -> TruncatedSeries {
    let plus = TruncatedSeries::exponential(&Rational::one(), order + 1);
    let minus = TruncatedSeries::exponential(&-Rational::one(), order + 1);
    (&plus - &minus)
        .scale(&Rational::new(1, 2).unwrap())
        .shift(-1)
        .truncate(order)
}

/// `((e^y + e^{-y}) / 2)^m`, known up to `O(y^order)`.
pub fn cosh_power(m: i64, order: i64) -> TruncatedSeries {
    let plus = TruncatedSeries::exponential(&Rational::one(), order);
    let minus = TruncatedSeries::exponential(&-Rational::one(), order);
    let cosh = (&plus + &minus).scale(&Rational::new(1, 2).unwrap());
    cosh.pow(m).expect("non-negative power")
}

/// `{1 - (1 - (e^y - e^{-y}) / (2y))}^{-m}`, known up to `O(y^order)`.
pub fn sinhc_inverse_power(m: i64, order: i64) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let w = &one - &sinhc(order);
    (&one - &w).pow(-m).expect("sinh(y)/y has unit constant term")
}
