//! Exact evaluation of `J(m, n) = ∫_0^∞ tanh^m(z) / z^n dz` for integers
//! `m >= n >= 2` of equal parity.
//!
//! Every such integral is a finite combination `Σ c_s ζ(s) / π^(s-1)` with
//! rational `c_s`. [`closed_form::theorem_sum`] computes the coefficients from
//! an explicit quadruple sum; [`residue_oracle::oracle_closed_form`] derives
//! them again from the residues at the poles of the integrand using series
//! arithmetic; [`numeric`] evaluates both sides and compares them with a
//! direct quadrature of the integral.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod exact_arith;
pub mod laurent_series;
pub mod numeric;
pub mod residue_oracle;

pub use closed_form::{theorem_sum, validate_spec, ClosedForm, IntegralSpec, ZetaCombination};
pub use error::Error;
pub use exact_arith::Rational;
pub use residue_oracle::oracle_closed_form;
