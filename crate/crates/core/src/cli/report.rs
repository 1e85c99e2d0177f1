use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::oracle::OracleEstimate;

pub const REPORT_VERSION: u32 = 1;

/// A closed-form value checked against the oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub report_version: u32,
    pub name: String,
    pub spec: String,
    pub closed_form: f64,
    pub oracle: OracleEstimate,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub exact_form: Option<String>,
    /// Set when one side could not be evaluated; the entry then fails.
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn new(
        name: impl Into<String>,
        spec: impl Into<String>,
        closed_form: f64,
        oracle: OracleEstimate,
        tolerance: f64,
    ) -> Self {
        let abs_diff = (closed_form - oracle.value).abs();
        VerificationReport {
            report_version: REPORT_VERSION,
            name: name.into(),
            spec: spec.into(),
            closed_form,
            oracle,
            abs_diff,
            tolerance,
            pass: abs_diff <= tolerance + oracle.error_bound,
            exact_form: None,
            error: None,
        }
    }

    pub fn failed(name: impl Into<String>, spec: impl Into<String>, tolerance: f64, error: String) -> Self {
        VerificationReport {
            report_version: REPORT_VERSION,
            name: name.into(),
            spec: spec.into(),
            closed_form: 0.0,
            oracle: OracleEstimate {
                value: 0.0,
                error_bound: 0.0,
                terms_used: 0,
            },
            abs_diff: 0.0,
            tolerance,
            pass: false,
            exact_form: None,
            error: Some(error),
        }
    }

    pub fn with_exact(mut self, exact: impl Into<String>) -> Self {
        self.exact_form = Some(exact.into());
        self
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.spec);
        if let Some(e) = &self.exact_form {
            let _ = writeln!(s, "  exact form   {e}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "  error        {e}");
        } else {
            let _ = writeln!(s, "  closed form  {}", self.closed_form);
            let _ = writeln!(
                s,
                "  oracle       {} ± {:.1e} ({} terms)",
                self.oracle.value, self.oracle.error_bound, self.oracle.terms_used
            );
            let _ = writeln!(s, "  abs diff     {:.3e} (tolerance {:.1e})", self.abs_diff, self.tolerance);
        }
        let _ = writeln!(s, "  result       {}", if self.pass { "PASS" } else { "FAIL" });
        s
    }

    /// One-line summary used by the suites.
    pub fn render_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match &self.error {
            Some(e) => format!("{status} {}: {e}", self.name),
            None => format!(
                "{status} {}: closed {} oracle {} ± {:.1e} diff {:.1e}",
                self.name, self.closed_form, self.oracle.value, self.oracle.error_bound, self.abs_diff
            ),
        }
    }
}
