//! Structured probe output.
//!
//! Every probe and scan produces a [`ProbeReport`]: the command name, an echo
//! of all parameters (including seed and precision), the per-sample gaps or
//! values, the minimum gap, the violation list, and a pass flag. Reports are
//! plain data with a fixed field order so that serializing one twice with the
//! same inputs yields byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One evaluated sample: a human-readable description of the input and the
/// resulting gap or value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleRecord {
    pub input: String,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProbeReport {
    pub command: String,
    /// Echo of every input, seed and precision included. BTreeMap keeps the
    /// serialization order stable.
    pub parameters: BTreeMap<String, String>,
    pub samples: Vec<SampleRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap: Option<f64>,
    /// Full-precision decimal rendering of the minimum gap, when the probe
    /// ran at extended precision.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap_decimal: Option<String>,
    pub violations: Vec<String>,
    pub pass: bool,
    /// Named high-precision constants the probe relied on.
    pub fixture_values: BTreeMap<String, String>,
}

impl ProbeReport {
    pub fn new(command: &str) -> Self {
        ProbeReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            samples: Vec::new(),
            min_gap: None,
            min_gap_decimal: None,
            violations: Vec::new(),
            pass: true,
            fixture_values: BTreeMap::new(),
        }
    }

    pub fn set_parameter(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn push_sample(&mut self, input: impl ToString, value: f64) {
        self.samples.push(SampleRecord {
            input: input.to_string(),
            value,
        });
    }

    pub fn push_violation(&mut self, description: impl ToString) {
        self.violations.push(description.to_string());
        self.pass = false;
    }

    pub fn set_fixture(&mut self, name: &str, value: impl ToString) {
        self.fixture_values.insert(name.to_string(), value.to_string());
    }

    /// Record the minimum gap; keeps `pass == violations.is_empty()`.
    pub fn set_min_gap(&mut self, gap: f64, decimal: Option<String>) {
        self.min_gap = Some(gap);
        self.min_gap_decimal = decimal;
    }

    /// Recompute the invariant `pass == violations.is_empty()`.
    pub fn finalize(mut self) -> Self {
        self.pass = self.violations.is_empty();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_violations() {
        let mut r = ProbeReport::new("demo");
        assert!(r.pass);
        r.push_violation("gap below tolerance");
        assert!(!r.pass);
        let r = r.finalize();
        assert_eq!(r.pass, r.violations.is_empty());
    }

    #[test]
    fn serialization_is_stable() {
        let mut r = ProbeReport::new("demo");
        r.set_parameter("seed", 42);
        r.set_parameter("alpha", "2");
        r.push_sample("(t1, t1^2)", 0.5);
        let a = serde_json::to_string_pretty(&r).unwrap();
        let b = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(a, b);
        // parameters iterate in key order regardless of insertion order
        assert!(a.find("\"alpha\"").unwrap() < a.find("\"seed\"").unwrap());
    }
}
