//! Uniform pass/fail records produced by the verification batteries.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, params: Value, pass: bool) -> Self {
        CheckReport {
            check: check.into(),
            params,
            pass,
            counterexample: None,
        }
    }

    pub fn fail(
        check: impl Into<String>,
        params: Value,
        counterexample: impl Into<String>,
    ) -> Self {
        CheckReport {
            check: check.into(),
            params,
            pass: false,
            counterexample: Some(counterexample.into()),
        }
    }

    /// Passes unless a counterexample is given.
    pub fn from_outcome(
        check: impl Into<String>,
        params: Value,
        counterexample: Option<String>,
    ) -> Self {
        CheckReport {
            check: check.into(),
            params,
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// One line per report: `PASS check {params}` or `FAIL check {params}: why`.
pub fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(if r.pass { "PASS " } else { "FAIL " });
        out.push_str(&r.check);
        if !r.params.is_null() {
            out.push(' ');
            out.push_str(&r.params.to_string());
        }
        if let Some(c) = &r.counterexample {
            out.push_str(": ");
            out.push_str(c);
        }
        out.push('\n');
    }
    out
}
