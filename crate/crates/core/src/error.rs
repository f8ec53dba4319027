use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series vanishes up to its truncation order and cannot be inverted")]
    NotInvertible,
    #[error("coefficient of y^{exponent} is unknown: series is truncated at O(y^{order})")]
    BeyondOrder { exponent: i64, order: i64 },
}

/// Why a pair `(m, n)` does not describe one of the integrals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("m and n must have the same parity (got m = {m}, n = {n})")]
    Parity { m: i64, n: i64 },
    #[error("m must be at least n (got m = {m}, n = {n})")]
    Ordering { m: i64, n: i64 },
    #[error("n must be at least 2 (got n = {n})")]
    NTooSmall { n: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("half-m bound {bound} is neither floor(m/2) nor ceil(m/2) for m = {m}")]
    InvalidBound { m: i64, bound: i64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("zeta({s}) is outside the supported domain (odd s >= 3)")]
    ZetaDomain { s: i64 },
    #[error("pole sum with exponent {e} diverges (need e >= 2)")]
    DivergentPoleSum { e: i64 },
    #[error("pole sum with even exponent {e} is not real")]
    NonRealPoleSum { e: i64 },
    #[error("requested tolerance {requested:e} is unreachable; best achieved bound {achieved:e}")]
    UnreachableTolerance { requested: f64, achieved: f64 },
}

/// Top-level error for library entry points that span modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}
