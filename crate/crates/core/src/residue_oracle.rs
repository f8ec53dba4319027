//! Independent derivation of `J(m, n)` from residues.
//!
//! `J(m, n)` is `πi` times the sum of residues of `tanh^m(z)/z^n` at the poles
//! `z_k = (k - 1/2)πi`, `k >= 1`. Around `z_k`, with `y = z - z_k`,
//! `tanh(z) = coth(y) = W(y)^(1/m) / y` where
//! `W(y) = cosh(y)^m · (sinh(y)/y)^(-m)` is even with `W(0) = 1`. Expanding
//! `(y + z_k)^(-n)` binomially gives
//!
//! ```text
//! res_{z_k} = Σ_{j ≡ m} C(-n, j-1) [y^(m-j)] W(y) · z_k^-(n+j-1)
//! ```
//!
//! and `Σ_k z_k^-e = (2^e - 1) ζ(e) / (πi)^e` turns each power into a zeta
//! value. Everything here goes through raw series arithmetic; nothing from
//! the closed-form rearrangement is reused.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::closed_form::{inverse_i_power_sign, IntegralSpec, ZetaCombination};
use crate::error::{NumericError, SeriesError};
use crate::exact_arith::{binomial, mersenne, Rational};
use crate::laurent_series::{cosh_power, sinhc_inverse_power, TruncatedSeries};

/// Residue of `T_{m,n}` at a generic pole, as `Σ_j r_j · z_k^-(n+j-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    spec: IntegralSpec,
    coeffs: BTreeMap<u32, Rational>,
}

impl ResidueProfile {
    pub fn spec(&self) -> IntegralSpec {
        self.spec
    }

    /// `r_j`; zero for indices that do not share the parity of `m`.
    pub fn coefficient(&self, j: u32) -> Rational {
        self.coeffs.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(j, r)| (*j, r))
    }
}

impl fmt::Display for ResidueProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.spec.n();
        let parts: Vec<String> = self
            .iter()
            .map(|(j, r)| format!("({r})·z_k^-{}", n + j - 1))
            .collect();
        write!(f, "Σ {}", parts.join(" + "))
    }
}

/// `W(y) = U(y) V(y)` with `U = cosh^m`, `V = (sinh y / y)^(-m)`, to `O(y^(m+1))`.
pub fn residue_kernel(m: u32) -> TruncatedSeries {
    let m = i64::from(m);
    let order = m + 1;
    let u = cosh_power(m, order);
    let v = sinhc_inverse_power(m, order);
    &u * &v
}

pub fn residue_profile(spec: IntegralSpec) -> Result<ResidueProfile, SeriesError> {
    let m = spec.m();
    let w = residue_kernel(m);
    assert!(w.is_even(), "cosh^m (sinh y/y)^-m must be even");
    let neg_n = -i64::from(spec.n());
    let mut coeffs = BTreeMap::new();
    for j in spec.j_range() {
        let r = binomial(neg_n, j - 1) * w.coefficient(i64::from(m - j))?;
        coeffs.insert(j, r);
    }
    Ok(ResidueProfile { spec, coeffs })
}

/// Exact data for `πi · Σ_{k>=1} z_k^-e = sign · scale · ζ(s) / π^(s-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleSumFactor {
    pub sign: i8,
    pub s: u32,
    pub scale: BigInt,
}

pub fn pole_sum_factor(e: i64) -> Result<PoleSumFactor, NumericError> {
    if e < 2 {
        return Err(NumericError::DivergentPoleSum { e });
    }
    if e % 2 == 0 {
        return Err(NumericError::NonRealPoleSum { e });
    }
    let s = e as u32;
    Ok(PoleSumFactor {
        sign: inverse_i_power_sign(s) as i8,
        s,
        scale: mersenne(s),
    })
}

/// `J(m, n)` as `πi` times the pole sum of the residue profile.
pub fn oracle_closed_form(spec: IntegralSpec) -> ZetaCombination {
    let profile = residue_profile(spec).expect("series order m + 1 covers every queried coefficient");
    let n = spec.n();
    profile
        .iter()
        .map(|(j, r)| {
            let factor = pole_sum_factor(i64::from(n + j - 1)).expect("n + j - 1 is odd and >= 3");
            let scale = Rational::from_integer(factor.scale * i64::from(factor.sign));
            (factor.s, r * &scale)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::theorem_sum;

    fn spec(m: i64, n: i64) -> IntegralSpec {
        IntegralSpec::new(m, n).unwrap()
    }

    #[test]
    fn profile_for_2_2() {
        // W(0) = 1 and C(-2, 1) = -2, so res = -2 / z_k^3.
        let p = residue_profile(spec(2, 2)).unwrap();
        assert_eq!(p.iter().count(), 1);
        assert_eq!(p.coefficient(2), Rational::from(-2));
        assert_eq!(p.coefficient(1), Rational::zero());
        assert_eq!(p.to_string(), "Σ (-2)·z_k^-3");
    }

    #[test]
    fn diagonal_leading_coefficient() {
        for m in 2..=12 {
            let p = residue_profile(spec(m, m)).unwrap();
            assert_eq!(p.coefficient(m as u32), binomial(-m, (m - 1) as u32), "m = {m}");
        }
    }

    #[test]
    fn profile_for_4_2() {
        // W = cosh^4 (sinh y/y)^-4 = 1 + (4/2 - 4/6) y² + ... = 1 + 4/3 y² + ...
        let w = residue_kernel(4);
        assert_eq!(w.coefficient(2).unwrap(), Rational::new(4, 3).unwrap());
        let p = residue_profile(spec(4, 2)).unwrap();
        let keys: Vec<u32> = p.iter().map(|(j, _)| j).collect();
        assert_eq!(keys, vec![2, 4]);
        // j = 2: C(-2,1)·[y²]W = -2·4/3; j = 4: C(-2,3)·[y⁰]W = -4.
        assert_eq!(p.coefficient(2), Rational::new(-8, 3).unwrap());
        assert_eq!(p.coefficient(4), Rational::from(-4));
        assert_eq!(oracle_closed_form(spec(4, 2)), theorem_sum(spec(4, 2)));
    }

    #[test]
    fn pole_sum_factors() {
        // i^3 = -i, so πi/(πi)^3 = -1/π².
        assert_eq!(
            pole_sum_factor(3).unwrap(),
            PoleSumFactor { sign: -1, s: 3, scale: BigInt::from(7) }
        );
        assert_eq!(
            pole_sum_factor(5).unwrap(),
            PoleSumFactor { sign: 1, s: 5, scale: BigInt::from(31) }
        );
        assert_eq!(pole_sum_factor(7).unwrap().sign, -1);
        assert_eq!(pole_sum_factor(1), Err(NumericError::DivergentPoleSum { e: 1 }));
        assert_eq!(pole_sum_factor(4), Err(NumericError::NonRealPoleSum { e: 4 }));
    }

    #[test]
    fn oracle_values() {
        let expect = |terms: &[(u32, i64, i64)]| -> ZetaCombination {
            terms.iter().map(|&(s, n, d)| (s, Rational::new(n, d).unwrap())).collect()
        };
        assert_eq!(oracle_closed_form(spec(2, 2)), expect(&[(3, 14, 1)]));
        assert_eq!(oracle_closed_form(spec(3, 3)), expect(&[(3, -7, 1), (5, 186, 1)]));
        assert_eq!(
            oracle_closed_form(spec(6, 6)),
            expect(&[(7, 5842, 5), (9, -57232, 1), (11, 515844, 1)])
        );
    }

    #[test]
    fn kernel_is_even_with_unit_constant() {
        for m in 2..=12 {
            let w = residue_kernel(m);
            assert_eq!(w.order(), i64::from(m) + 1);
            assert!(w.is_even());
            assert!(w.coefficient(0).unwrap().is_one());
        }
    }
}
