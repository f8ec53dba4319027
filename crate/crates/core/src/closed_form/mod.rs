//! Exact evaluation of `J(m, n) = ∫_0^∞ tanh^m(z) / z^n dz`.
//!
//! For `m >= n >= 2` of equal parity the integral is a finite rational
//! combination of `ζ(s)/π^(s-1)` over odd `s` in `[n, m + n - 1]`. The
//! coefficients come from a quadruple sum over `j`, `λ`, `μ`, `ν`:
//!
//! ```text
//! J(m,n) = C(m+P, m) Σ_{j≡m} C(-n, j-1) (2^(n+j-1) - 1) ζ(n+j-1) / (πi)^(n+j-2)
//!          × Σ_λ Σ_μ Σ_ν (-1)^(μ+ν) m/(m+μ) C(m,λ) C(P,μ) C(μ,ν)
//!                        (m-2λ+μ-2ν)^(m+μ-j) / (2^(m+μ) (m+μ-j)!)
//! ```
//!
//! with `P = ceil(m/2)`. Since `j ≡ m ≡ n (mod 2)`, the power of `πi` is even
//! and reduces to a real sign.

mod combination;
mod render;

pub use combination::ZetaCombination;
pub use render::{ClosedForm, RenderError};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ClosedFormError, SpecError};
use crate::exact_arith::{binomial, factorial, int_pow, mersenne, Rational};

/// A validated parameter pair for `J(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegralSpec {
    m: u32,
    n: u32,
}

impl IntegralSpec {
    pub fn new(m: i64, n: i64) -> Result<Self, SpecError> {
        validate_spec(m, n)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `ceil(m/2)`, the half-m bound used by [`theorem_sum`].
    pub fn half_ceil(&self) -> u32 {
        self.m.div_ceil(2)
    }

    pub fn half_floor(&self) -> u32 {
        self.m / 2
    }

    /// Indices `j` in `1..=m` with `j ≡ m (mod 2)`, ascending.
    pub fn j_range(&self) -> impl Iterator<Item = u32> {
        let m = self.m;
        (1..=m).filter(move |j| (m - j).is_multiple_of(2))
    }

    /// Every valid pair with `m <= max_m`, ordered by `m` then `n`.
    pub fn all_up_to(max_m: u32) -> Vec<IntegralSpec> {
        (2..=max_m)
            .flat_map(|m| (2..=m).filter(move |n| (m - n) % 2 == 0).map(move |n| IntegralSpec { m, n }))
            .collect()
    }
}

impl std::fmt::Display for IntegralSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "J({},{})", self.m, self.n)
    }
}

pub fn validate_spec(m: i64, n: i64) -> Result<IntegralSpec, SpecError> {
    if n < 2 {
        return Err(SpecError::NTooSmall { n });
    }
    if m < n {
        return Err(SpecError::Ordering { m, n });
    }
    if (m - n) % 2 != 0 {
        return Err(SpecError::Parity { m, n });
    }
    let m = u32::try_from(m).map_err(|_| SpecError::Ordering { m, n })?;
    Ok(IntegralSpec { m, n: n as u32 })
}

/// Real value of `1 / (πi)^(e-1)` times `π^(e-1)` for odd `e`: `(-1)^((e-1)/2)`.
pub(crate) fn inverse_i_power_sign(e: u32) -> i64 {
    debug_assert!(e % 2 == 1);
    if ((e - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Closed form of `J(m, n)` with the production bound `P = ceil(m/2)`.
pub fn theorem_sum(spec: IntegralSpec) -> ZetaCombination {
    quadruple_sum(spec, spec.half_ceil())
}

/// Same sum with the half-m bound `P` chosen explicitly; only `floor(m/2)`
/// and `ceil(m/2)` are accepted.
pub fn theorem_sum_with_bound(spec: IntegralSpec, bound: i64) -> Result<ZetaCombination, ClosedFormError> {
    if bound != i64::from(spec.half_floor()) && bound != i64::from(spec.half_ceil()) {
        return Err(ClosedFormError::InvalidBound { m: i64::from(spec.m), bound });
    }
    Ok(quadruple_sum(spec, bound as u32))
}

fn quadruple_sum(spec: IntegralSpec, p: u32) -> ZetaCombination {
    let m = spec.m;
    let n = spec.n;
    let prefactor = binomial(i64::from(m + p), m);

    let mut out = ZetaCombination::new();
    for j in spec.j_range() {
        let inner = inner_triple_sum(m, p, j);
        if inner.is_zero() {
            continue;
        }
        let s = n + j - 1;
        let scale = Rational::from_integer(mersenne(s) * inverse_i_power_sign(s));
        let c = &prefactor * &binomial(-i64::from(n), j - 1) * scale * inner;
        out.add_term(s, c);
    }
    out
}

/// `Σ_λ Σ_μ Σ_ν (-1)^(μ+ν) m/(m+μ) C(m,λ) C(P,μ) C(μ,ν)
///     (m-2λ+μ-2ν)^(m+μ-j) / (2^(m+μ) (m+μ-j)!)`
///
/// For fixed `μ` everything but the power sum is a common rational factor, so
/// the `λ, ν` double sum is accumulated in integers.
fn inner_triple_sum(m: u32, p: u32, j: u32) -> Rational {
    let mut total = Rational::zero();
    for mu in 0..=p {
        let exp = m + mu - j;
        let mut acc = BigInt::zero();
        for lambda in 0..=m {
            let c_lambda = binomial(i64::from(m), lambda);
            for nu in 0..=mu {
                let base = i64::from(m + mu) - 2 * i64::from(lambda) - 2 * i64::from(nu);
                let term = c_lambda.numer() * binomial(i64::from(mu), nu).numer() * int_pow(base, exp);
                if nu % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        if acc.is_zero() {
            continue;
        }
        let denom = (BigInt::one() << (m + mu)) * BigInt::from(factorial(exp)) * BigInt::from(m + mu);
        let numer = acc * BigInt::from(m) * binomial(i64::from(p), mu).numer();
        let factor = Rational::new(numer, denom).expect("positive denominator");
        if mu % 2 == 0 {
            total += factor;
        } else {
            total -= &factor;
        }
    }
    total
}
