//! Report schema, provenance and atomic output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use antilinear_core::{
    classify::{DefectivenessReport, QuasiHermitianCertificate, SpectrumClassification, Verdict},
    Complex64,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Version of the JSON layout below.
pub const SCHEMA_VERSION: u32 = 1;

/// One eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

impl From<Complex64> for Eigenvalue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Converts a spectrum.
pub fn spectrum(eigs: &[Complex64]) -> Vec<Eigenvalue> {
    eigs.iter().copied().map(Eigenvalue::from).collect()
}

/// Model tag plus echoed parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Model {
    /// Family identifier, e.g. `twolevel/wph`.
    pub tag: String,
    /// Parameters exactly as used.
    pub parameters: BTreeMap<String, Value>,
}

/// Serialized [`SpectrumClassification`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    /// `AllReal`, `PseudoRealWithPairs` or `NotPseudoReal`.
    pub verdict: String,
    /// Conjugate pairing.
    pub pairing: Vec<(usize, usize)>,
    /// Largest pairing defect.
    pub max_pairing_defect: f64,
    /// Defectiveness flag.
    pub defective: bool,
    /// Tolerance used.
    pub tol: f64,
}

/// Verdict name.
pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::AllReal => "AllReal",
        Verdict::PseudoRealWithPairs => "PseudoRealWithPairs",
        Verdict::NotPseudoReal => "NotPseudoReal",
    }
}

impl From<&SpectrumClassification> for Classification {
    fn from(c: &SpectrumClassification) -> Self {
        Self {
            verdict: verdict_name(c.verdict).to_owned(),
            pairing: c.pairing.clone(),
            max_pairing_defect: c.max_pairing_defect,
            defective: c.defective,
            tol: c.tol,
        }
    }
}

/// Raw defectiveness numbers; infinite values serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Defectiveness {
    /// Decision.
    pub defective: bool,
    /// Smallest eigenvalue gap.
    pub min_gap: Option<f64>,
    /// Eigenvector condition number.
    pub cond: Option<f64>,
}

/// `Some(x)` for finite `x`.
pub fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl From<&DefectivenessReport> for Defectiveness {
    fn from(d: &DefectivenessReport) -> Self {
        Self { defective: d.defective, min_gap: finite(d.min_gap), cond: finite(d.cond) }
    }
}

/// Quasi-Hermiticity certificate or the reason it was refused.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    /// Reconstruction succeeded.
    Passed {
        /// Relative reconstruction residual.
        residual: f64,
        /// Condition number of the basis.
        cond: f64,
        /// Real spectrum used.
        eigenvalues: Vec<f64>,
    },
    /// Certificate could not be issued.
    Refused {
        /// Error message.
        reason: String,
    },
}

impl Certificate {
    /// Converts a certificate attempt.
    pub fn from_result(r: antilinear_core::Result<QuasiHermitianCertificate>) -> Self {
        match r {
            Ok(c) => Self::Passed { residual: c.residual, cond: c.cond, eigenvalues: c.eigenvalues },
            Err(e) => Self::Refused { reason: e.to_string() },
        }
    }

    /// Whether the certificate was issued.
    pub fn passed(&self) -> bool {
        matches!(self, Self::Passed { .. })
    }
}

/// One asserted bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    /// What was checked.
    pub name: String,
    /// Observed value, `null` if not finite.
    pub value: Option<f64>,
    /// Bound the value must not exceed.
    pub tol: f64,
    /// Outcome.
    pub passed: bool,
}

impl Check {
    /// `value ≤ tol` (non-finite values fail).
    pub fn at_most(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { name: name.into(), value: finite(value), tol, passed: value <= tol }
    }

    /// A boolean condition recorded with value 1 (true) or 0 (false).
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self { name: name.into(), value: Some(if ok { 0.0 } else { 1.0 }), tol: 0.0, passed: ok }
    }
}

/// Exceptional-point scan result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionalPoint {
    /// Scanned parameter name.
    pub parameter: String,
    /// Scan interval.
    pub range: (f64, f64),
    /// Located value, `null` if no sign change.
    pub location: Option<f64>,
    /// Eigenvector condition number at the located value.
    pub cond: Option<f64>,
    /// Error message when the search failed.
    pub error: Option<String>,
}

/// Tool version, input hash and wall-clock time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    /// Tool name.
    pub tool: String,
    /// Crate version.
    pub version: String,
    /// SHA-256 of the canonical input.
    pub config_hash: String,
    /// RFC 3339 timestamp.
    pub timestamp: String,
}

impl Provenance {
    /// Provenance for the given canonical input bytes.
    pub fn new(input: &[u8]) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            config_hash: sha256_hex(input),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }
}

/// Lowercase hex SHA-256.
pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Full analysis report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// [`SCHEMA_VERSION`].
    pub schema_version: u32,
    /// Model and parameters.
    pub model: Model,
    /// Named residuals.
    pub residuals: BTreeMap<String, f64>,
    /// Numerical spectrum sorted by (re, im).
    pub spectrum: Vec<Eigenvalue>,
    /// Closed-form spectrum, when available.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_spectrum: Option<Vec<Eigenvalue>>,
    /// Pairing verdict.
    pub classification: Classification,
    /// Defectiveness numbers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defectiveness: Option<Defectiveness>,
    /// Quasi-Hermiticity certificate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Exceptional-point search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exceptional_point: Option<ExceptionalPoint>,
    /// Named eigenvectors (component lists).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub eigenvectors: BTreeMap<String, Vec<Eigenvalue>>,
    /// Asserted bounds; any failure gives exit status 2.
    pub checks: Vec<Check>,
    /// Precondition violations; any entry gives exit status 2.
    pub violations: Vec<String>,
    /// Provenance.
    pub provenance: Provenance,
}

impl AnalysisReport {
    /// Whether every check passed and nothing was violated.
    pub fn verified(&self) -> bool {
        self.violations.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are serializable");
        s.push('\n');
        s
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// `index,re,im` rows with 17 significant digits.
pub fn spectrum_csv(eigs: &[Eigenvalue]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "re", "im"]).map_err(CliError::csv)?;
    for (i, z) in eigs.iter().enumerate() {
        w.write_record([i.to_string(), format!("{:.16e}", z.re), format!("{:.16e}", z.im)]).map_err(CliError::csv)?;
    }
    w.into_inner().map_err(|e| CliError::csv(e.into_error().into()))
}

/// Arbitrary table with 17-significant-digit floats.
pub fn table_csv(header: &[&str], rows: &[Vec<f64>]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(CliError::csv)?;
    for row in rows {
        w.write_record(row.iter().map(|x| format!("{x:.16e}"))).map_err(CliError::csv)?;
    }
    w.into_inner().map_err(|e| CliError::csv(e.into_error().into()))
}
