//! Rendering of check reports as JSON or aligned plain text.

use std::fmt::Write as _;

use reslat_core::{CheckReport, Status};
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Roles whose values are counts or corpus indices rather than elements.
const NUMERIC_ROLES: [&str; 2] = ["algebra", "count"];

/// Role used for set-valued info witnesses; rendered without a label.
pub const MEMBER: &str = "member";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessValue {
    pub role: String,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: String,
    pub witnesses: Vec<Vec<WitnessValue>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryCounts {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub algebra: String,
    pub version: String,
    pub checks: Vec<CheckEntry>,
    pub summary: SummaryCounts,
}

impl ReportDocument {
    /// `names` maps element indices to display tokens; at most `max_witnesses`
    /// tuples are kept per check.
    pub fn new(
        algebra: &str,
        report: &CheckReport,
        names: &[String],
        max_witnesses: Option<usize>,
    ) -> Self {
        let limit = max_witnesses.unwrap_or(usize::MAX);
        let checks = report
            .checks
            .iter()
            .map(|c| CheckEntry {
                name: c.name.clone(),
                status: c.status.as_str().to_string(),
                witnesses: c
                    .witnesses
                    .iter()
                    .take(limit)
                    .map(|w| {
                        w.0.iter()
                            .map(|&(role, v)| WitnessValue {
                                role: role.to_string(),
                                element: if NUMERIC_ROLES.contains(&role) {
                                    v.to_string()
                                } else {
                                    names.get(v).cloned().unwrap_or_else(|| v.to_string())
                                },
                            })
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        let s = report.summary();
        ReportDocument {
            algebra: algebra.to_string(),
            version: VERSION.to_string(),
            checks,
            summary: SummaryCounts {
                passed: s.passed,
                failed: s.failed,
                skipped: s.skipped,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Failing checks first, then the rest in report order.
    pub fn to_text(&self) -> String {
        let fail = Status::Fail.as_str();
        let ordered: Vec<&CheckEntry> = self
            .checks
            .iter()
            .filter(|c| c.status == fail)
            .chain(self.checks.iter().filter(|c| c.status != fail))
            .collect();
        let width = ordered
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(out, "algebra: {}", self.algebra);
        for c in ordered {
            let tuples: Vec<String> = c.witnesses.iter().map(|w| render_tuple(w)).collect();
            let line = format!(
                "{:<7} {:<width$}  {}",
                c.status.to_uppercase(),
                c.name,
                tuples.join(" ")
            );
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} skipped",
            self.summary.passed, self.summary.failed, self.summary.skipped
        );
        out
    }
}

fn render_tuple(w: &[WitnessValue]) -> String {
    if w.iter().all(|v| v.role == MEMBER) {
        let toks: Vec<&str> = w.iter().map(|v| v.element.as_str()).collect();
        return format!("{{{}}}", toks.join(", "));
    }
    let parts: Vec<String> = w
        .iter()
        .map(|v| format!("{}={}", v.role, v.element))
        .collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use reslat_core::{Check, Witness};

    fn sample() -> CheckReport {
        let mut r = CheckReport::new();
        r.push(Check::pass("first"));
        r.push(Check::from_violations(
            "second_law",
            vec![
                Witness(vec![("x", 1), ("y", 0)]),
                Witness(vec![("x", 1), ("y", 1)]),
            ],
        ));
        r.push(Check::skipped("third"));
        r
    }

    #[test]
    fn text_lists_failures_first() {
        let names = vec!["0".to_string(), "1".to_string()];
        let doc = ReportDocument::new("t", &sample(), &names, Some(1));
        let text = doc.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "FAIL    second_law  (x=1, y=0)");
        assert_eq!(lines[2], "PASS    first");
        assert_eq!(lines[4], "summary: 1 passed, 1 failed, 1 skipped");
    }

    #[test]
    fn json_top_level_keys() {
        let doc = ReportDocument::new("t", &sample(), &[], None);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["algebra", "checks", "summary", "version"]);
        assert_eq!(v["checks"][1]["witnesses"].as_array().unwrap().len(), 2);
        assert_eq!(v["checks"][1]["witnesses"][0][0]["role"], "x");
        assert_eq!(v["summary"]["failed"], 1);
    }
}
