use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one named check. Serializes with the fields in declaration order.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check_id: impl Into<String>, passed: bool, expected: impl Serialize, computed: impl Serialize) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            expected: to_value(expected),
            computed: to_value(computed),
            witness: None,
            elapsed_ms: 0,
        }
    }

    /// A skipped check; the reason goes into `computed`.
    pub fn skipped(check_id: impl Into<String>, reason: impl Into<String>) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            status: Status::Skipped,
            expected: Value::Null,
            computed: Value::String(reason.into()),
            witness: None,
            elapsed_ms: 0,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// One human-readable line.
    pub fn summary_line(&self) -> String {
        let mut s = format!("{:<7} {}", self.status.to_string(), self.check_id);
        match self.status {
            Status::Skipped => s += &format!("  ({})", compact(&self.computed)),
            _ => s += &format!("  expected={} computed={}", compact(&self.expected), compact(&self.computed)),
        }
        if let Some(w) = &self.witness {
            s += &format!("  witness: {w}");
        }
        s
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Canonical text for a rational point: `name=value` pairs.
pub fn format_point(names: &[String], point: &[crate::exactpoly::Scalar]) -> String {
    names
        .iter()
        .zip(point)
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
