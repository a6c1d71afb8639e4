//! `periodic`: verify a 1D family described by a TOML file or preset.

use std::collections::BTreeMap;

use antilinear_core::{classify, periodic};

use super::{finish, parameters, pending_provenance, Options, RunOutput};
use crate::{
    args::PeriodicArgs,
    config::{self, PeriodicConfig},
    error::CliError,
    report::{self, AnalysisReport, Check, Model},
};

/// Bound on the family's target residual.
pub const SYMMETRY_TOL: f64 = 1e-10;
/// Bound on the `[H, Q²]` residual.
pub const Q_SQUARED_TOL: f64 = 1e-12;
/// Bound on the pairing defect relative to the spectral radius.
pub const PAIRING_TOL: f64 = 1e-8;

/// Reads the configuration text named by the arguments.
pub fn config_text(args: &PeriodicArgs) -> Result<String, CliError> {
    match (&args.preset, &args.config) {
        (Some(name), _) => Ok(config::preset(name)?.to_owned()),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display()))),
        (None, None) => Err(CliError::Usage("a config path or --preset is required".into())),
    }
}

/// Verifies a parsed configuration.
pub fn analyse(cfg: &PeriodicConfig, options: &Options) -> Result<AnalysisReport, CliError> {
    let model = cfg.to_model()?;
    let family = periodic::verify_family(model.family, &model.scalar, &model.vector, &model.grid)?;
    let radius = classify::spectral_radius(&family.eigenvalues).max(1.0);
    let pairing_rel = family.classification.max_pairing_defect / radius;
    let target_name = match model.family {
        periodic::Family::WeakPseudoHermitian => "wph",
        periodic::Family::QtSymmetric => "qt",
    };
    let residuals = BTreeMap::from([
        ("qt".to_owned(), family.qt),
        ("wph".to_owned(), family.wph),
        ("qt_wph_gap".to_owned(), (family.qt - family.wph).abs()),
        ("q_squared".to_owned(), family.q_squared),
        ("symmetric_defect".to_owned(), family.symmetric_defect),
        ("scalar_parity".to_owned(), family.scalar_parity),
        ("vector_parity".to_owned(), family.vector_parity),
        ("pairing_relative".to_owned(), pairing_rel),
    ]);
    let checks = vec![
        Check::at_most(target_name, family.target_residual(), options.tol_or(SYMMETRY_TOL)),
        Check::at_most("q_squared", family.q_squared, options.tol_or(Q_SQUARED_TOL)),
        Check::at_most("pairing_relative", pairing_rel, options.tol_or(PAIRING_TOL)),
        Check::holds("pseudo_real", family.classification.verdict.is_pseudo_real()),
    ];
    Ok(AnalysisReport {
        schema_version: 0,
        model: Model { tag: format!("periodic/{target_name}"), parameters: parameters(cfg) },
        residuals,
        spectrum: report::spectrum(&family.eigenvalues),
        closed_form_spectrum: None,
        classification: (&family.classification).into(),
        defectiveness: None,
        certificate: None,
        exceptional_point: None,
        eigenvectors: BTreeMap::new(),
        checks,
        violations: family.violations.clone(),
        provenance: pending_provenance(),
    })
}

/// Runs `periodic`.
pub fn run(args: &PeriodicArgs, options: &Options) -> Result<RunOutput, CliError> {
    let text = config_text(args)?;
    let cfg = PeriodicConfig::parse(&text)?;
    let report = analyse(&cfg, options)?;
    let csv = report::spectrum_csv(&report.spectrum)?;
    Ok(RunOutput { report: finish(report, options, text.as_bytes()), csv, sidecar: true })
}
