//! Machine-readable verification reports (JSON and CSV).

use crate::C64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexField {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexField {
    fn from(z: C64) -> Self {
        ComplexField { re: z.re, im: z.im }
    }
}

/// One identity check at one parameter point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub identity: String,
    pub param: ComplexField,
    pub lhs: ComplexField,
    pub rhs: ComplexField,
    pub abs_diff: f64,
    pub tol: f64,
    pub passed: bool,
    pub lhs_method: String,
    pub rhs_method: String,
    pub wall_time_ms: f64,
    /// Present when either side failed to evaluate.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub max_abs_diff: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    /// Unix seconds at run start.
    pub timestamp: u64,
    pub tool_version: String,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Same columns as the JSON schema, complex fields split into re/im.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "identity,param_re,param_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,tol,passed,wall_time_ms\n",
        );
        for r in &self.records {
            out.push_str(&format!(
                "{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.3e},{:.3e},{},{:.3}\n",
                r.identity,
                r.param.re,
                r.param.im,
                r.lhs.re,
                r.lhs.im,
                r.rhs.re,
                r.rhs.im,
                r.abs_diff,
                r.tol,
                r.passed,
                r.wall_time_ms
            ));
        }
        out
    }

    /// Copy with timing fields zeroed; two runs of the same config are
    /// bit-identical under this view.
    pub fn canonical(&self) -> Report {
        let mut c = self.clone();
        c.timestamp = 0;
        for r in &mut c.records {
            r.wall_time_ms = 0.0;
        }
        c
    }
}
