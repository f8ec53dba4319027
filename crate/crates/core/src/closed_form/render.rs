//! Wire and display formats for evaluated closed forms.
//!
//! JSON: `{"m":M,"n":N,"terms":[{"s":S,"coeff":"num/den"},...]}` with terms
//! ascending in `s` and coefficients as canonical rational strings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{IntegralSpec, ZetaCombination};
use crate::exact_arith::Rational;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("malformed closed-form JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid (m, n) in closed-form JSON: {0}")]
    Spec(#[from] crate::error::SpecError),
    #[error("invalid coefficient in closed-form JSON: {0}")]
    Coefficient(#[from] crate::error::ArithError),
    #[error("invalid zeta argument {0}: must be odd and >= 3")]
    ZetaArgument(u32),
    #[error("terms are not strictly ascending in s with nonzero coefficients")]
    NonCanonical,
}

/// `J(m, n)` together with its exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub spec: IntegralSpec,
    pub value: ZetaCombination,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    s: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonClosedForm {
    m: i64,
    n: i64,
    terms: Vec<JsonTerm>,
}

impl ClosedForm {
    pub fn new(spec: IntegralSpec, value: ZetaCombination) -> Self {
        ClosedForm { spec, value }
    }

    fn to_wire(&self) -> JsonClosedForm {
        JsonClosedForm {
            m: i64::from(self.spec.m()),
            n: i64::from(self.spec.n()),
            terms: self
                .value
                .terms()
                .map(|(s, c)| JsonTerm { s, coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("closed form serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("closed form serializes")
    }

    /// Parses the JSON form, rejecting anything that is not canonical.
    pub fn from_json(text: &str) -> Result<Self, RenderError> {
        let wire: JsonClosedForm = serde_json::from_str(text)?;
        let spec = IntegralSpec::new(wire.m, wire.n)?;
        let mut value = ZetaCombination::new();
        let mut last = 0;
        for t in wire.terms {
            if t.s < 3 || t.s % 2 == 0 {
                return Err(RenderError::ZetaArgument(t.s));
            }
            let c: Rational = t.coeff.parse()?;
            if t.s <= last || c.is_zero() {
                return Err(RenderError::NonCanonical);
            }
            last = t.s;
            value.add_term(t.s, c);
        }
        Ok(ClosedForm { spec, value })
    }

    /// `J(m,n) = <combination>`.
    pub fn to_text(&self) -> String {
        format!("{} = {}", self.spec, self.value)
    }

    pub fn to_latex(&self) -> String {
        latex_combination(&self.value)
    }
}

/// Sum of `\frac{c\,\zeta(s)}{\pi^{s-1}}` terms in ascending `s`; a
/// non-integer coefficient puts its denominator under the fraction bar.
pub fn latex_combination(zc: &ZetaCombination) -> String {
    if zc.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (s, c)) in zc.terms().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let num = c.numer().magnitude().to_string();
        let numerator = if num == "1" {
            format!("\\zeta({s})")
        } else {
            format!("{num}\\,\\zeta({s})")
        };
        let pi = format!("\\pi^{{{}}}", s - 1);
        let denominator = if c.is_integer() {
            pi
        } else {
            format!("{}\\,{pi}", c.denom())
        };
        out.push_str(&format!("\\frac{{{numerator}}}{{{denominator}}}"));
    }
    out
}
