//! Verification reports and their JSON encoding.
//!
//! The JSON output is deterministic: keys keep insertion order and floats
//! are written with 17 significant digits, so equal runs give byte-identical
//! text.

use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Outcome of one named identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub tol: f64,
    pub max_error: f64,
    /// Serialized operands of the worst sample; present iff the check failed.
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, tol: f64, max_error: f64, counterexample: Option<Value>) -> Self {
        let passed = max_error <= tol;
        Self {
            name: name.into(),
            passed,
            tol,
            max_error,
            counterexample: if passed {
                None
            } else {
                counterexample.or(Some(Value::Null))
            },
        }
    }
}

/// Tracks the worst error seen for a check across many samples.
#[derive(Clone, Debug)]
pub struct Accumulator {
    name: String,
    tol: f64,
    worst: f64,
    witness: Option<Value>,
}

impl Accumulator {
    pub fn new(name: impl Into<String>, tol: f64) -> Self {
        Self {
            name: name.into(),
            tol,
            worst: 0.0,
            witness: None,
        }
    }

    /// Records one sample; NaN counts as an infinitely bad sample. The
    /// witness closure only runs when the sample becomes the new worst.
    pub fn record(&mut self, error: f64, witness: impl FnOnce() -> Value) {
        let error = if error.is_nan() { f64::INFINITY } else { error };
        if error > self.worst || (self.witness.is_none() && error > self.tol) {
            self.worst = error;
            self.witness = Some(witness());
        }
    }

    /// Records an operation that failed outright.
    pub fn record_failure(&mut self, message: String) {
        self.record(f64::INFINITY, || Value::String(message));
    }

    pub fn finish(self) -> Check {
        Check::new(self.name, self.tol, self.worst, self.witness)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub tol: f64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64, trials: usize, tol: f64) -> Self {
        Self {
            suite: suite.into(),
            seed,
            trials,
            tol,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends the checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("schema".into(), Value::from(SCHEMA_VERSION));
        root.insert("suite".into(), Value::from(self.suite.clone()));
        root.insert("seed".into(), Value::from(self.seed));
        root.insert("trials".into(), Value::from(self.trials as u64));
        root.insert("tol".into(), float(self.tol));
        root.insert("passed".into(), Value::from(self.passed()));
        let checks = self
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), Value::from(c.name.clone()));
                m.insert("passed".into(), Value::from(c.passed));
                m.insert("tol".into(), float(c.tol));
                m.insert("max_error".into(), float(c.max_error));
                if let Some(ce) = &c.counterexample {
                    m.insert("counterexample".into(), ce.clone());
                }
                Value::Object(m)
            })
            .collect();
        root.insert("checks".into(), Value::Array(checks));
        Value::Object(root)
    }

    pub fn to_json_string(&self) -> String {
        to_json_string(&self.to_json())
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (seed {}, trials {}, tol {:e})\n",
            self.suite, self.seed, self.trials, self.tol
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {} max_error={:e} tol={:e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.max_error,
                c.tol
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed() {
                "ALL PASSED"
            } else {
                "FAILURES PRESENT"
            }
        );
        out
    }
}

fn float(x: f64) -> Value {
    // non-finite values have no JSON number form and become null
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Pretty JSON with floats at 17 significant digits.
pub fn to_json_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Null | Value::Bool(_) | Value::String(_) => out.push_str(&value.to_string()),
        Value::Number(n) => {
            if n.is_f64() {
                let _ = write!(out, "{:.16e}", n.as_f64().unwrap_or(f64::NAN));
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::Array(items) => {
            if items.iter().all(|v| !v.is_array() && !v.is_object()) {
                out.push('[');
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_value(out, v, indent);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, v, indent + 1);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, v, indent + 1);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            pad(out, indent);
            out.push('}');
        }
    }
}

fn pad(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_iff_within_tolerance() {
        let ok = Check::new("a", 1e-9, 1e-12, Some(Value::from("x")));
        assert!(ok.passed);
        assert!(ok.counterexample.is_none());
        let bad = Check::new("b", 1e-9, 1e-3, None);
        assert!(!bad.passed);
        assert!(bad.counterexample.is_some());
    }

    #[test]
    fn accumulator_keeps_worst_witness() {
        let mut acc = Accumulator::new("c", 1e-9);
        acc.record(1e-12, || Value::from(1));
        acc.record(0.5, || Value::from(2));
        acc.record(0.1, || Value::from(3));
        let c = acc.finish();
        assert_eq!(c.max_error, 0.5);
        assert_eq!(c.counterexample, Some(Value::from(2)));
        let mut acc = Accumulator::new("d", 1e-9);
        acc.record(f64::NAN, || Value::from("nan"));
        assert!(!acc.finish().passed);
    }

    #[test]
    fn floats_use_seventeen_digits() {
        let s = to_json_string(&serde_json::json!({"x": 0.1, "n": 3, "v": [1.5, 2]}));
        assert!(s.contains("1.0000000000000001e-1"), "{s}");
        assert!(s.contains("\"n\": 3"));
        assert!(s.contains("[1.5000000000000000e0, 2]"));
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["x"].as_f64(), Some(0.1));
    }
}
