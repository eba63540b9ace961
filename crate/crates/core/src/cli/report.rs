use std::fmt::Write as _;

use serde::Serialize;

use crate::galois::ConventionSummary;
use crate::report::{Check, Status};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportParams {
    pub algebra: String,
    pub max_deg: u32,
    pub range: i64,
    pub window: i64,
    /// Numeric `θ`, or `"symbolic"` for suites that never evaluate `q`.
    pub theta: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_root: Option<u32>,
    pub convention: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub params: ReportParams,
    pub cleaving_convention: ConventionSummary,
    pub checks: Vec<Check>,
    /// First failure witness, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub duration_ms: u128,
}

impl Report {
    pub fn new(
        suite: impl Into<String>,
        params: ReportParams,
        cleaving_convention: ConventionSummary,
        mut checks: Vec<Check>,
        duration_ms: u128,
    ) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let witness = checks
            .iter()
            .find_map(|c| c.witness.clone().map(|w| format!("{}: {w}", c.name)));
        let status = if checks.iter().all(Check::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: suite.into(),
            status,
            params,
            cleaving_convention,
            checks,
            witness,
            duration_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

/// `emitReport`.
pub fn emit_report(r: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(r).expect("report serializes"),
        ReportFormat::Text => {
            let mut out = String::new();
            let p = &r.params;
            let _ = writeln!(
                out,
                "suite {}: {}",
                r.suite,
                if r.passed() { "PASS" } else { "FAIL" }
            );
            let _ = writeln!(
                out,
                "  algebra {}, max-deg {}, range {}, window {}, theta {}, convention {}{}",
                p.algebra,
                p.max_deg,
                p.range,
                p.window,
                p.theta,
                p.convention,
                p.q_root
                    .map(|m| format!(", q-root {m}"))
                    .unwrap_or_default()
            );
            if let Some(m) = &p.mutate {
                let _ = writeln!(out, "  mutation {m}");
            }
            let c = &r.cleaving_convention;
            let _ = writeln!(
                out,
                "  cleaving convention {} (sigma consistent: {}, ell consistent: {}, colinear: {})",
                c.label, c.sigma_consistent, c.ell_consistent, c.colinear
            );
            for check in &r.checks {
                let tag = if check.passed() { "PASS" } else { "FAIL" };
                let _ = write!(out, "{tag} {}", check.name);
                if let Some(d) = &check.detail {
                    let _ = write!(out, " ({d})");
                }
                let _ = writeln!(out);
                if let Some(w) = &check.witness {
                    let _ = writeln!(out, "     witness: {w}");
                }
            }
            let passed = r.checks.iter().filter(|c| c.passed()).count();
            let _ = writeln!(
                out,
                "{passed}/{} checks passed in {} ms",
                r.checks.len(),
                r.duration_ms
            );
            out
        }
    }
}
