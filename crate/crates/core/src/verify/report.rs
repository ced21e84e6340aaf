//! Machine-readable verification report: named residual checks with
//! tolerances, deterministic ordering and JSON serialization.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub parameters: BTreeMap<String, String>,
}

impl Check {
    pub fn new(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        // keep the report JSON-serializable: a non-finite residual is a bug
        // in the producing check and must read as a failure, not as null
        let max_residual = if max_residual.is_finite() {
            max_residual
        } else {
            f64::MAX
        };
        Self {
            name: name.into(),
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Checks sorted by name; names are unique by construction (cell
    /// parameters are embedded), which makes serialization deterministic.
    pub fn from_checks(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: checks.len(),
            passed,
        };
        Self { checks, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are always serializable")
    }

    /// Replace every tolerance (for the CLI tolerance override); pass flags
    /// and the summary are recomputed.
    pub fn with_tolerance(self, tolerance: f64) -> Self {
        let checks = self
            .checks
            .into_iter()
            .map(|mut c| {
                c.tolerance = tolerance;
                c.pass = c.max_residual <= tolerance;
                c
            })
            .collect();
        Self::from_checks(checks)
    }
}
