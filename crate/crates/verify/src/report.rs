use ellq_core::numerics::format_sci;
use ellq_core::Real;
use serde::Serialize;

use crate::check::{Severity, Status};

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub severity: Severity,
    /// Largest error over the samples, each scaled by `max(1, |expected|)`.
    pub max_abs_error: Real,
    pub tolerance: Real,
    pub samples: u64,
    /// Wall-clock time; only kept when timings were requested, so that
    /// reports stay byte-identical between runs otherwise.
    pub seconds: Option<f64>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub digits: u32,
    pub seed: u64,
    /// Sorted by id.
    pub checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    id: &'a str,
    status: Status,
    severity: Severity,
    max_abs_error: String,
    samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    digits: u32,
    seed: u64,
    checks: Vec<JsonRecord<'a>>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn normative_failures(&self) -> Vec<&CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.severity == Severity::Normative && c.status == Status::Fail)
            .collect()
    }

    /// 0 when every normative check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.normative_failures().is_empty() {
            0
        } else {
            1
        }
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let report = JsonReport {
            suite: &self.suite,
            digits: self.digits,
            seed: self.seed,
            checks: self
                .checks
                .iter()
                .map(|c| JsonRecord {
                    id: &c.id,
                    status: c.status,
                    severity: c.severity,
                    max_abs_error: format_sci(&c.max_abs_error, 3),
                    samples: c.samples,
                    seconds: c.seconds.map(|s| (s * 100.0).round() / 100.0),
                    note: c.note.as_deref(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let id_width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let timed = self.checks.iter().any(|c| c.seconds.is_some());
        let mut out = format!(
            "{:<id_width$}  {:<11}  {:<19}  {:>13}  {:>7}{}\n",
            "id",
            "status",
            "severity",
            "max_abs_error",
            "samples",
            if timed { "  seconds" } else { "" }
        );
        for c in &self.checks {
            let seconds = c.seconds.map_or(String::new(), |s| format!("  {s:>7.2}"));
            out.push_str(&format!(
                "{:<id_width$}  {:<11}  {:<19}  {:>13}  {:>7}{seconds}\n",
                c.id,
                c.status.to_string(),
                c.severity.to_string(),
                format_sci(&c.max_abs_error, 3),
                c.samples,
            ));
            if let Some(note) = &c.note {
                out.push_str(&format!("{:id_width$}  note: {note}\n", ""));
            }
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn summary(&self) -> String {
        let failures = self.normative_failures();
        let verdict = if failures.is_empty() {
            "all normative checks pass".to_string()
        } else {
            let ids: Vec<&str> = failures.iter().map(|c| c.id.as_str()).collect();
            format!("normative failures: {}", ids.join(", "))
        };
        format!(
            "suite {} at {} digits, seed {}: {} checks, {} pass, {} fail, {} discrepancy, {} skip; {verdict}",
            self.suite,
            self.digits,
            self.seed,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Discrepancy),
            self.count(Status::Skip),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    fn record(id: &str, status: Status, severity: Severity, err: f64) -> CheckRecord {
        CheckRecord {
            id: id.into(),
            status,
            severity,
            max_abs_error: Float::with_val(64, err),
            tolerance: Float::with_val(64, 1e-45),
            samples: 3,
            seconds: None,
            note: None,
        }
    }

    fn sample() -> Report {
        Report {
            suite: "all".into(),
            digits: 60,
            seed: 42,
            checks: vec![
                record("a.one", Status::Pass, Severity::Normative, 1.5e-70),
                record("b.two", Status::Discrepancy, Severity::DiscrepancyAllowed, 0.25),
            ],
        }
    }

    #[test]
    fn json_shape() {
        let json: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(json["digits"], 60);
        assert_eq!(json["seed"], 42);
        let first = &json["checks"][0];
        assert_eq!(first["status"], "pass");
        assert_eq!(first["severity"], "normative");
        assert_eq!(first["max_abs_error"], "1.5e-70");
        assert!(first.get("seconds").is_none());
        assert_eq!(json["checks"][1]["severity"], "discrepancy-allowed");
    }

    #[test]
    fn exit_code_follows_normative_failures() {
        let mut report = sample();
        assert_eq!(report.exit_code(), 0);
        report.checks.push(record("c.three", Status::Fail, Severity::Normative, 1.0));
        assert_eq!(report.exit_code(), 1);
        assert!(report.summary().contains("normative failures: c.three"));
        assert_eq!(report.get("b.two").unwrap().status, Status::Discrepancy);
    }

    #[test]
    fn text_has_one_line_per_check() {
        let text = sample().to_text();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(1).unwrap().starts_with("a.one"));
    }
}
