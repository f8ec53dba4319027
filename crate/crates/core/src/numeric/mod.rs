//! High-precision constants and numerical checks.
//!
//! Exact results are evaluated with decimal fixed-point arithmetic that
//! carries a rigorous error radius; the integral itself is approximated
//! independently by double-precision quadrature.

mod bigfloat;
mod constants;
mod quadrature;

pub use bigfloat::BigFloat;
pub use constants::{eval_combination, pi_digits, zeta_odd, GUARD_DIGITS};
pub use quadrature::{integrand, quadrature, tail_start, MIN_TOLERANCE};
