//! Run reports, rendered as JSON or plain text.

use std::fmt::Write as _;

use algebroid::verify::{Finding, Verification};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NoneFound,
    NotApplicable,
    Inconclusive,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NoneFound => "none-found",
            Status::NotApplicable => "not-applicable",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub name: String,
    pub status: Status,
    pub summary: String,
    /// Every checked identity; failures carry the offending basis data.
    pub checks: Vec<Finding>,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl TaskReport {
    pub fn new(name: &str) -> Self {
        TaskReport {
            name: name.to_string(),
            status: Status::Pass,
            summary: String::new(),
            checks: Vec::new(),
            detail: Value::Object(Default::default()),
            timing_ms: None,
        }
    }

    /// Appends checks with `prefix` on their names.
    pub fn add(&mut self, prefix: &str, v: Verification) {
        self.checks.extend(v.findings.into_iter().map(|mut f| {
            f.name = format!("{prefix}{}", f.name);
            f
        }));
    }

    pub fn check(&mut self, name: &str, holds: bool, witness: impl Into<String>) {
        self.checks.push(Finding { name: name.to_string(), holds, witness: witness.into() });
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        if let Value::Object(m) = &mut self.detail {
            m.insert(key.to_string(), v);
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Finding> {
        self.checks.iter().filter(|f| !f.holds)
    }

    /// Downgrades a passing status to `fail` when any check failed.
    pub fn settle(&mut self) {
        if self.status == Status::Pass {
            let first = self.checks.iter().find(|f| !f.holds).map(|f| format!("{}: {}", f.name, f.witness));
            if let Some(msg) = first {
                self.status = Status::Fail;
                if self.summary.is_empty() {
                    self.summary = msg;
                }
            }
        }
        if self.summary.is_empty() {
            self.summary = format!("{} checks hold", self.checks.len());
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub field: String,
    pub tasks: Vec<TaskReport>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.tasks.iter().any(|t| t.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario {} over {}", self.scenario, self.field);
        for t in &self.tasks {
            let _ = write!(out, "{:<22} {:<15} {}", t.name, t.status.label(), t.summary);
            if let Some(ms) = t.timing_ms {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            for f in t.failed_checks() {
                let _ = writeln!(out, "    failed: {} [{}]", f.name, f.witness);
            }
        }
        out
    }
}
