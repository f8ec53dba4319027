//! Command-line front end: `eval`, `verify` and `table`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::closed_form::{theorem_sum, validate_spec, ClosedForm, IntegralSpec};
use crate::error::SpecError;
use crate::numeric::{eval_combination, quadrature, BigFloat, MIN_TOLERANCE};
use crate::residue_oracle::oracle_closed_form;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "tanhint", version, about = "Closed forms for ∫_0^∞ tanh^m(z)/z^n dz")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact closed form of J(m,n).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Cross-check the closed form against the residue derivation and quadrature.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Closed forms of every valid J(m,n) with m <= max-m.
    Table {
        #[arg(long = "max-m", allow_hyphen_values = true)]
        max_m: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Also verify each row numerically.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
}

/// Result of one CLI invocation, with output captured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Eval { m, n, format } => cmd_eval(m, n, format),
        Command::Verify { m, n, digits, tolerance } => cmd_verify(m, n, digits, tolerance),
        Command::Table { max_m, format, check, digits, tolerance } => {
            cmd_table(max_m, format, check, digits, tolerance)
        }
    }
}

fn render(form: &ClosedForm, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => form.to_text(),
        OutputFormat::Json => form.to_json(),
        OutputFormat::Latex => form.to_latex(),
    }
}

fn spec_or_usage(m: i64, n: i64) -> Result<IntegralSpec, Outcome> {
    validate_spec(m, n).map_err(|e: SpecError| Outcome::usage(e))
}

fn check_numeric_args(digits: u32, tolerance: f64) -> Result<(), Outcome> {
    if digits == 0 {
        return Err(Outcome::usage("--digits must be positive"));
    }
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Outcome::usage(format!("--tolerance must be a positive number (got {tolerance})")));
    }
    Ok(())
}

pub fn cmd_eval(m: i64, n: i64, format: OutputFormat) -> Outcome {
    let spec = match spec_or_usage(m, n) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let form = ClosedForm::new(spec, theorem_sum(spec));
    Outcome::ok(render(&form, format) + "\n")
}

/// Everything computed by one three-way check of `J(m, n)`.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub closed_form: ClosedForm,
    pub residue_form: ClosedForm,
    pub exact_value: BigFloat,
    pub quadrature: Result<BigFloat, String>,
    pub digits: u32,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn exact_match(&self) -> bool {
        self.closed_form == self.residue_form
    }

    /// `|quadrature - closed form value|`, if the quadrature succeeded.
    pub fn discrepancy(&self) -> Option<f64> {
        self.quadrature.as_ref().ok().map(|q| q.sub(&self.exact_value).abs().to_f64())
    }

    pub fn passed(&self) -> bool {
        self.exact_match() && self.discrepancy().is_some_and(|d| d <= self.tolerance)
    }

    fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        match (&self.quadrature, self.discrepancy()) {
            (Ok(_), Some(d)) => format!("{verdict} (discrepancy {d:.2e})"),
            (Err(e), _) => format!("{verdict} (quadrature: {e})"),
            _ => verdict.to_string(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let spec = self.closed_form.spec;
        let _ = writeln!(out, "{spec}");
        let _ = writeln!(out, "  closed form   : {}", self.closed_form.value);
        let _ = writeln!(out, "  residue sum   : {}", self.residue_form.value);
        let _ = writeln!(out, "  exact match   : {}", if self.exact_match() { "yes" } else { "NO" });
        let _ = writeln!(
            out,
            "  value         : {} ({} digits)",
            self.exact_value.to_decimal_string(self.digits),
            self.digits
        );
        match &self.quadrature {
            Ok(q) => {
                let _ = writeln!(out, "  quadrature    : {} ± {:.1e}", q.to_decimal_string(16), q.error_bound());
            }
            Err(e) => {
                let _ = writeln!(out, "  quadrature    : failed: {e}");
            }
        }
        if let Some(d) = self.discrepancy() {
            let _ = writeln!(out, "  discrepancy   : {d:.3e} (tolerance {:.1e})", self.tolerance);
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Runs the exact and numeric checks for one spec.
pub fn verify_spec(spec: IntegralSpec, digits: u32, tolerance: f64) -> VerificationReport {
    let closed = theorem_sum(spec);
    let residue = oracle_closed_form(spec);
    let exact_value = eval_combination(&closed, digits);
    let quad = quadrature(spec, (tolerance / 4.0).max(MIN_TOLERANCE)).map_err(|e| e.to_string());
    VerificationReport {
        closed_form: ClosedForm::new(spec, closed),
        residue_form: ClosedForm::new(spec, residue),
        exact_value,
        quadrature: quad,
        digits,
        tolerance,
    }
}

pub fn cmd_verify(m: i64, n: i64, digits: u32, tolerance: f64) -> Outcome {
    let spec = match spec_or_usage(m, n) {
        Ok(s) => s,
        Err(o) => return o,
    };
    if let Err(o) = check_numeric_args(digits, tolerance) {
        return o;
    }
    let report = verify_spec(spec, digits, tolerance);
    Outcome {
        code: if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout: report.to_text(),
        stderr: String::new(),
    }
}

pub fn cmd_table(max_m: i64, format: OutputFormat, check: bool, digits: u32, tolerance: f64) -> Outcome {
    if max_m < 2 {
        return Outcome::usage(format!("--max-m must be at least 2 (got {max_m})"));
    }
    let Ok(max_m) = u32::try_from(max_m) else {
        return Outcome::usage("--max-m is too large");
    };
    if check {
        if let Err(o) = check_numeric_args(digits, tolerance) {
            return o;
        }
    }
    let specs = IntegralSpec::all_up_to(max_m);
    let forms: Vec<ClosedForm> = specs.iter().map(|&s| ClosedForm::new(s, theorem_sum(s))).collect();
    let reports: Option<Vec<VerificationReport>> =
        check.then(|| specs.par_iter().map(|&s| verify_spec(s, digits, tolerance)).collect());

    let status = |i: usize| reports.as_ref().map(|r| &r[i]);
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (i, f) in forms.iter().enumerate() {
                match status(i) {
                    Some(r) => {
                        let _ = writeln!(out, "{}  [{}]", f.to_text(), r.summary());
                    }
                    None => {
                        let _ = writeln!(out, "{}", f.to_text());
                    }
                }
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = forms
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let mut v = f.to_json_value();
                    if let Some(r) = status(i) {
                        v["check"] = json!({
                            "pass": r.passed(),
                            "exact_match": r.exact_match(),
                            "discrepancy": r.discrepancy(),
                        });
                    }
                    v
                })
                .collect();
            out = serde_json::to_string(&rows).expect("table serializes") + "\n";
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{align*}\n");
            for (i, f) in forms.iter().enumerate() {
                let sep = if i + 1 == forms.len() { "." } else { ",\\\\" };
                let _ = write!(out, "J({},{}) &= {}{sep}", f.spec.m(), f.spec.n(), f.to_latex());
                if let Some(r) = status(i) {
                    let _ = write!(out, " % {}", r.summary());
                }
                out.push('\n');
            }
            out.push_str("\\end{align*}\n");
        }
    }
    let all_pass = reports.as_ref().is_none_or(|rs| rs.iter().all(VerificationReport::passed));
    Outcome {
        code: if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout: out,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_latex() {
        let o = run(["tanhint", "eval", "--m", "2", "--n", "2", "--format", "latex"]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, "\\frac{14\\,\\zeta(3)}{\\pi^{2}}\n");
    }

    #[test]
    fn eval_parity_error() {
        let o = run(["tanhint", "eval", "--m", "3", "--n", "2"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("parity"), "{}", o.stderr);
        assert_eq!(o.stderr.lines().count(), 1);
    }

    #[test]
    fn unknown_format_rejected() {
        let o = run(["tanhint", "eval", "--m", "2", "--n", "2", "--format", "yaml"]);
        assert_eq!(o.code, EXIT_USAGE);
    }

    #[test]
    fn negative_arguments_are_validation_errors() {
        let o = run(["tanhint", "eval", "--m", "-2", "--n", "-2"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("n must be at least 2"));
    }

    #[test]
    fn table_small() {
        let o = run(["tanhint", "table", "--max-m", "2"]);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, "J(2,2) = 14·ζ(3)/π^2\n");
        assert_eq!(run(["tanhint", "table", "--max-m", "1"]).code, EXIT_USAGE);
    }

    #[test]
    fn table_latex_layout() {
        let o = run(["tanhint", "table", "--max-m", "3", "--format", "latex"]);
        assert_eq!(
            o.stdout,
            "\\begin{align*}\nJ(2,2) &= \\frac{14\\,\\zeta(3)}{\\pi^{2}},\\\\\n\
             J(3,3) &= -\\frac{7\\,\\zeta(3)}{\\pi^{2}}+\\frac{186\\,\\zeta(5)}{\\pi^{4}}.\n\\end{align*}\n"
        );
    }

    #[test]
    fn bad_numeric_flags() {
        assert_eq!(cmd_verify(2, 2, 0, 1e-10).code, EXIT_USAGE);
        assert_eq!(cmd_verify(2, 2, 30, -1.0).code, EXIT_USAGE);
        assert_eq!(cmd_verify(2, 2, 30, f64::NAN).code, EXIT_USAGE);
    }
}
