//! `twolevel`: build one two-level family member and verify it.

use std::collections::BTreeMap;

use antilinear_core::{
    c64,
    classify::{self, DefectivenessReport},
    eigen,
    symmetry::{self, AntilinearSymmetry},
    twolevel::{self, ExceptionalPointScan, QtScanParam, TwoLevelQtParams, TwoLevelWphParams},
    Complex64, ComplexMatrix,
};
use serde_json::Value;

use super::{complex_value, finish, pending_provenance, two_value_error, Options, RunOutput};
use crate::{
    args::{Family, ScanParam, TwoLevelArgs, TwoLevelParams},
    error::CliError,
    report::{self, AnalysisReport, Certificate, Check, Defectiveness, ExceptionalPoint, Model},
};

/// Default bound on symmetry residuals and closed-form agreement.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Closed-form agreement bound at a defective point, where eigenvalues are
/// only determined to about the square root of machine precision.
pub const DEFECTIVE_TOL: f64 = 1e-6;

/// A concrete family member.
pub struct Member {
    /// Report tag.
    pub tag: &'static str,
    /// Echoed parameters.
    pub parameters: BTreeMap<String, Value>,
    /// Matrix.
    pub h: ComplexMatrix,
    /// Closed-form eigenvalues.
    pub closed: (Complex64, Complex64),
    /// Symmetry operator `Q`.
    pub symmetry: AntilinearSymmetry,
    /// Residual the family is built to annihilate (`qt` or `wph`).
    pub target: &'static str,
}

fn real_q(p: &TwoLevelParams) -> Result<f64, CliError> {
    if p.q.im != 0.0 {
        return Err(CliError::Usage(format!("--q must be real for this family, got {}", p.q)));
    }
    Ok(p.q.re)
}

/// Builds the member selected by the flags.
pub fn member(p: &TwoLevelParams) -> Result<Member, CliError> {
    let num = |v: f64| Value::from(v);
    Ok(match p.family {
        Family::QtReal => {
            let q = real_q(p)?;
            Member {
                tag: "twolevel/qt-real",
                parameters: BTreeMap::from([("a".into(), num(p.a)), ("c".into(), num(p.c)), ("q".into(), num(q))]),
                h: twolevel::build_qt_real(p.a, p.c),
                closed: (c64(p.a, 0.0), c64(p.a, 0.0)),
                symmetry: symmetry::two_level_q(c64(q, 0.0)),
                target: "qt",
            }
        }
        Family::QtImag => {
            let q = real_q(p)?;
            let params = TwoLevelQtParams { a: p.a, b: p.b, c: p.c, d: p.d, q };
            Member {
                tag: "twolevel/qt-imag",
                parameters: BTreeMap::from([
                    ("a".into(), num(p.a)),
                    ("b".into(), num(p.b)),
                    ("c".into(), num(p.c)),
                    ("d".into(), num(p.d)),
                    ("q".into(), num(q)),
                ]),
                h: twolevel::build_qt_imaginary(&params),
                closed: twolevel::qt_eigenvalues(&params),
                symmetry: twolevel::qt_symmetry(q),
                target: "qt",
            }
        }
        Family::Hermitian => Member {
            tag: "twolevel/hermitian",
            parameters: BTreeMap::from([
                ("a".into(), num(p.a)),
                ("b1".into(), num(p.b1)),
                ("b2".into(), num(p.b2)),
                ("d".into(), num(p.d)),
            ]),
            h: twolevel::build_hermitian(p.a, p.b1, p.b2, p.d),
            closed: twolevel::hermitian_eigenvalues(p.a, p.b1, p.b2, p.d),
            symmetry: symmetry::two_level_q(Complex64::new(0.0, 0.0)),
            target: "wph",
        },
        Family::Wph => {
            let params = TwoLevelWphParams { a1: p.a1, a2: p.a2, q: p.q };
            Member {
                tag: "twolevel/wph",
                parameters: BTreeMap::from([("a1".into(), num(p.a1)), ("a2".into(), num(p.a2)), ("q".into(), complex_value(p.q))]),
                h: twolevel::build_wph_nonzero(&params)?,
                closed: twolevel::wph_eigenvalues(&params)?,
                symmetry: twolevel::wph_symmetry(p.q),
                target: "wph",
            }
        }
    })
}

/// Scan over the parameter chosen by the flags.
pub fn scan_for(p: &TwoLevelParams, param: ScanParam) -> Result<(ExceptionalPointScan, &'static str), CliError> {
    match p.family {
        Family::Wph => Ok((ExceptionalPointScan::Wph { base: TwoLevelWphParams { a1: p.a1, a2: p.a2, q: p.q } }, "|q|")),
        Family::QtImag => {
            let base = TwoLevelQtParams { a: p.a, b: p.b, c: p.c, d: p.d, q: real_q(p)? };
            let (param, name) = match param {
                ScanParam::A => (QtScanParam::A, "a"),
                ScanParam::B => (QtScanParam::B, "b"),
                ScanParam::C => (QtScanParam::C, "c"),
                ScanParam::D => (QtScanParam::D, "d"),
                ScanParam::Q => (QtScanParam::Q, "q"),
            };
            Ok((ExceptionalPointScan::Qt { base, param }, name))
        }
        other => Err(CliError::Usage(format!("exceptional-point scans need --family wph or qt-imag, got {other:?}"))),
    }
}

/// Locates an exceptional point and records the condition number there.
pub fn exceptional_point(scan: &ExceptionalPointScan, name: &str, range: (f64, f64)) -> ExceptionalPoint {
    match twolevel::find_exceptional_point(scan, range.0, range.1) {
        Ok(x) => {
            let cond = scan.matrix(x).ok().and_then(|h| eigen::eigendecompose(&h).ok()).map(|ed| ed.vector_condition_number);
            ExceptionalPoint {
                parameter: name.to_owned(),
                range,
                location: Some(x),
                cond: cond.and_then(report::finite),
                error: None,
            }
        }
        Err(e) => ExceptionalPoint { parameter: name.to_owned(), range, location: None, cond: None, error: Some(e.to_string()) },
    }
}

/// Verifies one member: residuals, spectrum, classification, certificate.
pub fn analyse(m: Member, options: &Options) -> Result<AnalysisReport, CliError> {
    let tol = options.tol_or(DEFAULT_TOL);
    let ed = eigen::eigendecompose(&m.h)?;
    let classification = classify::classify_decomposition(&ed);
    let defect: DefectivenessReport = classify::defectiveness_report(&ed, classify::default_gap_tol(&ed.eigenvalues));
    let closed_error = two_value_error(m.closed, &ed.eigenvalues);
    let gap = symmetry::equivalence_gap(&m.h, &m.symmetry)?;
    let residuals = BTreeMap::from([
        ("qt".to_owned(), gap.qt),
        ("wph".to_owned(), gap.wph),
        ("symmetric_defect".to_owned(), gap.symmetric_defect),
        ("q_squared".to_owned(), symmetry::q_squared_commutator_residual(&m.h, &m.symmetry)?),
        ("closed_form".to_owned(), closed_error),
    ]);
    let target = residuals[m.target];
    let closed_tol = if defect.defective { options.tol_or(DEFECTIVE_TOL) } else { tol };
    let checks = vec![
        Check::at_most(m.target, target, tol),
        Check::at_most("closed_form", closed_error, closed_tol),
        Check::holds("pseudo_real", classification.verdict.is_pseudo_real()),
    ];
    let certificate = Certificate::from_result(classify::quasi_hermitian_certificate(&m.h, &ed, 1e-8));
    let mut closed = [m.closed.0, m.closed.1];
    closed.sort_by(eigen::cmp_re_im);
    Ok(AnalysisReport {
        schema_version: 0,
        model: Model { tag: m.tag.to_owned(), parameters: m.parameters },
        residuals,
        spectrum: report::spectrum(&ed.eigenvalues),
        closed_form_spectrum: Some(report::spectrum(&closed)),
        classification: (&classification).into(),
        defectiveness: Some(Defectiveness::from(&defect)),
        certificate: Some(certificate),
        exceptional_point: None,
        eigenvectors: BTreeMap::new(),
        checks,
        violations: Vec::new(),
        provenance: pending_provenance(),
    })
}

/// Runs `twolevel`.
pub fn run(args: &TwoLevelArgs, options: &Options) -> Result<RunOutput, CliError> {
    let m = member(&args.params)?;
    let mut report = analyse(m, options)?;
    if let Some(range) = args.ep_scan {
        let (scan, name) = scan_for(&args.params, args.ep_param)?;
        report.exceptional_point = Some(exceptional_point(&scan, name, range));
    }
    let csv = report::spectrum_csv(&report.spectrum)?;
    let extra = format!("{:?}|{:?}", args.ep_scan, args.ep_param);
    Ok(RunOutput { report: finish(report, options, extra.as_bytes()), csv, sidecar: false })
}
