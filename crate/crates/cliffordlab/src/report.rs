//! Verification reports: named check records with identity anchors.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check with the identity it verifies and what was measured.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The identity the check pins down, in plain ASCII math.
    pub anchor: String,
    pub status: Status,
    pub details: Value,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(command: &str, parameters: Value) -> Self {
        Report {
            command: command.to_string(),
            parameters,
            checks: Vec::new(),
            summary: Summary { total: 0, failures: 0 },
            wall_time_ms: 0.0,
        }
    }

    pub fn push(&mut self, name: &str, anchor: &str, pass: bool, details: Value) {
        debug_assert!(!anchor.is_empty(), "every check carries an anchor");
        self.checks.push(CheckRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            details,
        });
    }

    /// Sorts records by name (report assembly is order-independent) and
    /// fills the summary.
    pub fn finalize(&mut self, wall_time_ms: f64) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.summary = Summary {
            total: self.checks.len(),
            failures: self.checks.iter().filter(|c| c.status == Status::Fail).count(),
        };
        self.wall_time_ms = wall_time_ms;
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failures == 0
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,anchor,status\n");
        for check in &self.checks {
            out.push_str(&format!(
                "{},\"{}\",{}\n",
                check.name,
                check.anchor.replace('"', "\"\""),
                match check.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                }
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let mark = match check.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{mark}  {:<34} {}\n", check.name, check.anchor));
            if check.status == Status::Fail {
                out.push_str(&format!("      details: {}\n", check.details));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failures ({:.1} ms)\n",
            self.summary.total, self.summary.failures, self.wall_time_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_counts_failures() {
        let mut report = Report::new("verify", json!({}));
        report.push("b_check", "x = y", true, json!({}));
        report.push("a_check", "y = z", false, json!({"dev": 1.0}));
        report.finalize(1.5);
        assert_eq!(report.summary.total, 2);
        assert_eq!(report.summary.failures, 1);
        assert!(!report.all_pass());
        // Sorted by name.
        assert_eq!(report.checks[0].name, "a_check");
        let text = report.to_text();
        assert!(text.contains("FAIL"));
        assert!(text.contains("2 checks, 1 failures"));
    }
}
