//! Subcommand runners. Each returns a report plus optional CSV bytes.

pub mod fock;
pub mod periodic;
pub mod scan;
pub mod twolevel;

use std::collections::BTreeMap;

use antilinear_core::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::report::{AnalysisReport, Provenance, SCHEMA_VERSION};

/// Global options forwarded to every runner.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Overrides every verification tolerance when set.
    pub tol: Option<f64>,
    /// Seed for randomized runs.
    pub seed: u64,
}

impl Options {
    /// The override or `default`.
    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct RunOutput {
    /// Report.
    pub report: AnalysisReport,
    /// CSV payload for `--csv`.
    pub csv: Vec<u8>,
    /// Whether a sidecar CSV should be written next to the report by default.
    pub sidecar: bool,
}

/// Parameter map from a serializable struct.
pub fn parameters<T: Serialize>(value: &T) -> BTreeMap<String, Value> {
    match serde_json::to_value(value).expect("parameters are serializable") {
        Value::Object(map) => map.into_iter().collect(),
        other => BTreeMap::from([("value".to_owned(), other)]),
    }
}

/// `[re, im]` JSON pair.
pub fn complex_value(z: Complex64) -> Value {
    Value::from(vec![z.re, z.im])
}

/// Provenance hashed over the model, the options and any extra input.
pub fn provenance(report: &AnalysisReport, options: &Options, extra: &[u8]) -> Provenance {
    let mut input = serde_json::to_vec(&report.model).expect("model is serializable");
    input.extend_from_slice(format!("|tol={:?}|seed={}|", options.tol, options.seed).as_bytes());
    input.extend_from_slice(extra);
    Provenance::new(&input)
}

/// Report skeleton with empty provenance, filled in by [`finish`].
pub fn finish(mut report: AnalysisReport, options: &Options, extra: &[u8]) -> AnalysisReport {
    report.schema_version = SCHEMA_VERSION;
    report.provenance = provenance(&report, options, extra);
    report
}

/// Pairs closed-form values with numerical ones by the better of both
/// orderings and returns the largest mismatch.
pub fn two_value_error(closed: (Complex64, Complex64), numeric: &[Complex64]) -> f64 {
    let straight = (closed.0 - numeric[0]).norm().max((closed.1 - numeric[1]).norm());
    let crossed = (closed.0 - numeric[1]).norm().max((closed.1 - numeric[0]).norm());
    straight.min(crossed)
}

/// Placeholder provenance replaced by [`finish`].
pub fn pending_provenance() -> Provenance {
    Provenance { tool: String::new(), version: String::new(), config_hash: String::new(), timestamp: String::new() }
}
