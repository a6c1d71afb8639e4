//! `fock`: reduced or general quadratic Fock-space models.

use std::collections::BTreeMap;

use antilinear_core::{
    c64, classify, eigen,
    fock::{self, FockModelParams, QtConstraintResiduals, ReducedFockParams},
    symmetry, Complex64,
};
use serde_json::Value;

use super::{complex_value, finish, pending_provenance, Options, RunOutput};
use crate::{
    args::FockArgs,
    error::CliError,
    report::{self, AnalysisReport, Certificate, Check, Eigenvalue, Model},
};

/// Largest accepted truncation.
pub const MAX_TRUNCATION: usize = 1024;
/// Bound on `|E_num − γ(2n+1)|`.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Bound on the projected `QT` residual.
pub const PROJECTED_TOL: f64 = 1e-10;
/// Bound on each analytic constraint residual.
pub const CONSTRAINT_TOL: f64 = 1e-12;

fn real(name: &str, z: Complex64) -> Result<f64, CliError> {
    if z.im != 0.0 {
        return Err(CliError::Usage(format!("--{name} must be real for the reduced model, got {z}")));
    }
    Ok(z.re)
}

fn check_truncation(n: usize, min: usize) -> Result<(), CliError> {
    if n < min || n > MAX_TRUNCATION {
        return Err(CliError::Usage(format!("--N must lie in {min}..={MAX_TRUNCATION}, got {n}")));
    }
    Ok(())
}

/// Reduced model report.
pub fn reduced(args: &FockArgs, options: &Options) -> Result<AnalysisReport, CliError> {
    let n = args.truncation;
    check_truncation(n, 3)?;
    let p = ReducedFockParams::new(real("alpha", args.alpha)?, real("gamma", args.gamma)?, args.mu, args.q)?;
    let h = fock::build_reduced_fock(&p, n)?;
    let eigs = eigen::eigenvalues(&h)?;
    let mut exact: Vec<Complex64> = fock::reduced_spectrum(&p, n).into_iter().map(|e| c64(e, 0.0)).collect();
    exact.sort_by(eigen::cmp_re_im);
    let spectrum_error = eigs.iter().zip(&exact).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let classification = classify::classify_spectrum(&eigs, classify::default_tol(&eigs));

    let s = fock::fock_symmetry(p.qfr(), n)?;
    let projected = fock::projected_qt_residual(&h, &s, n - 2)?;
    let pt = symmetry::pt_residual(&h, &fock::parity_matrix(n))?;

    let mut eigenvectors = BTreeMap::new();
    let mut closed_vs_solved = 0.0f64;
    for k in 0..=2usize.min(n - 3) {
        if let Ok(closed) = fock::closed_form_eigenvector(&p, k, n) {
            let solved = fock::reduced_eigenvector(&p, k, n)?;
            closed_vs_solved = closed
                .iter()
                .zip(&solved)
                .map(|(a, b)| (a - b).norm() / a.norm().max(1.0))
                .fold(closed_vs_solved, f64::max);
            eigenvectors.insert(format!("psi{k}"), closed[..=k].iter().copied().map(Eigenvalue::from).collect());
        }
    }

    let certificate = Certificate::from_result(fock::quasi_hermitian_check(&p, n));
    let residuals = BTreeMap::from([
        ("spectrum".to_owned(), spectrum_error),
        ("projected_qt".to_owned(), projected),
        ("pt".to_owned(), pt),
        ("eigenvector_closed_form".to_owned(), closed_vs_solved),
    ]);
    let checks = vec![
        Check::at_most("spectrum", spectrum_error, options.tol_or(SPECTRUM_TOL)),
        Check::at_most("projected_qt", projected, options.tol_or(PROJECTED_TOL)),
        Check::at_most("eigenvector_closed_form", closed_vs_solved, options.tol_or(PROJECTED_TOL)),
        Check::holds("certificate", certificate.passed()),
    ];
    let parameters = BTreeMap::from([
        ("alpha".to_owned(), Value::from(p.alpha)),
        ("gamma".to_owned(), Value::from(p.gamma)),
        ("mu".to_owned(), Value::from(p.mu)),
        ("q".to_owned(), Value::from(p.q)),
        ("N".to_owned(), Value::from(n)),
    ]);
    Ok(AnalysisReport {
        schema_version: 0,
        model: Model { tag: "fock/reduced".into(), parameters },
        residuals,
        spectrum: report::spectrum(&eigs),
        closed_form_spectrum: Some(report::spectrum(&exact)),
        classification: (&classification).into(),
        defectiveness: None,
        certificate: Some(certificate),
        exceptional_point: None,
        eigenvectors,
        checks,
        violations: Vec::new(),
        provenance: pending_provenance(),
    })
}

/// General model report.
pub fn general(args: &FockArgs, options: &Options) -> Result<AnalysisReport, CliError> {
    let n = args.truncation;
    check_truncation(n, 3)?;
    let p = FockModelParams {
        alpha: args.alpha,
        beta: args.beta,
        gamma: args.gamma,
        mfr: args.mfr,
        nfr: args.nfr,
        qfr: args.qfr,
        truncation: n,
    };
    let constraints = fock::qt_constraint_residuals(&p)?;
    let h = fock::build_general_fock(&p)?;
    let s = fock::fock_symmetry(p.qfr, n)?;
    let projected = fock::projected_qt_residual(&h, &s, n - 2)?;
    let eigs = eigen::eigenvalues(&h)?;
    let classification = classify::classify_spectrum(&eigs, classify::default_tol(&eigs));

    let tol = options.tol_or(CONSTRAINT_TOL);
    let mut residuals = BTreeMap::from([("projected_qt".to_owned(), projected)]);
    let mut checks = Vec::new();
    let mut violations = Vec::new();
    for (name, value) in QtConstraintResiduals::NAMES.iter().zip(constraints.as_array()) {
        let key = format!("constraint_{name}");
        residuals.insert(key.clone(), value);
        let check = Check::at_most(key, value, tol);
        if !check.passed {
            violations.push(format!("QT constraint {name} violated (residual {value:e})"));
        }
        checks.push(check);
    }
    checks.push(Check::at_most("projected_qt", projected, options.tol_or(PROJECTED_TOL)));

    let parameters = BTreeMap::from([
        ("alpha".to_owned(), complex_value(p.alpha)),
        ("beta".to_owned(), complex_value(p.beta)),
        ("gamma".to_owned(), complex_value(p.gamma)),
        ("m".to_owned(), complex_value(p.mfr)),
        ("n".to_owned(), complex_value(p.nfr)),
        ("qfr".to_owned(), complex_value(p.qfr)),
        ("N".to_owned(), Value::from(n)),
    ]);
    Ok(AnalysisReport {
        schema_version: 0,
        model: Model { tag: "fock/general".into(), parameters },
        residuals,
        spectrum: report::spectrum(&eigs),
        closed_form_spectrum: None,
        classification: (&classification).into(),
        defectiveness: None,
        certificate: None,
        exceptional_point: None,
        eigenvectors: BTreeMap::new(),
        checks,
        violations,
        provenance: pending_provenance(),
    })
}

/// Runs `fock`.
pub fn run(args: &FockArgs, options: &Options) -> Result<RunOutput, CliError> {
    let report = if args.general { general(args, options)? } else { reduced(args, options)? };
    let csv = report::spectrum_csv(&report.spectrum)?;
    Ok(RunOutput { report: finish(report, options, b""), csv, sidecar: false })
}
