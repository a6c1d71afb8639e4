//! `scan`: exceptional-point parameter scans and seeded random checks of the
//! two-level closed forms.

use std::collections::BTreeMap;

use antilinear_core::{classify, eigen, twolevel::ExceptionalPointScan, Complex64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use super::{finish, twolevel, two_value_error, Options, RunOutput};
use crate::{
    args::{Family, ScanArgs, TwoLevelParams},
    error::CliError,
    report::{self, AnalysisReport, Check},
};

/// Parameter range of random draws.
pub const DRAW_RANGE: f64 = 5.0;

fn grid(range: (f64, f64), points: u32) -> Vec<f64> {
    let last = (points - 1) as f64;
    (0..points).map(|k| range.0 + (range.1 - range.0) * k as f64 / last).collect()
}

fn scan_rows(scan: &ExceptionalPointScan, xs: &[f64]) -> Result<Vec<Vec<f64>>, CliError> {
    xs.iter()
        .map(|&x| {
            let h = scan.matrix(x).map_err(|e| CliError::Usage(format!("scan point {x}: {e}")))?;
            let e = eigen::eigenvalues(&h)?;
            Ok(vec![x, scan.discriminant(x), e[0].re, e[0].im, e[1].re, e[1].im])
        })
        .collect()
}

fn parameter_scan(args: &ScanArgs, range: (f64, f64), options: &Options) -> Result<RunOutput, CliError> {
    let (scan, name) = twolevel::scan_for(&args.params, args.param)?;
    let rows = scan_rows(&scan, &grid(range, args.points))?;
    let member = twolevel::member(&args.params)?;
    let mut report = twolevel::analyse(member, options)?;
    report.model.tag = format!("scan/{}", report.model.tag);
    report.model.parameters.insert("scan_points".into(), Value::from(args.points));
    report.exceptional_point = Some(twolevel::exceptional_point(&scan, name, range));
    let min_disc = rows.iter().map(|r| r[1].abs()).fold(f64::INFINITY, f64::min);
    report.residuals.insert("min_abs_discriminant".into(), min_disc);
    let csv = report::table_csv(&["x", "discriminant", "re0", "im0", "re1", "im1"], &rows)?;
    let extra = format!("{range:?}|{}|{:?}", args.points, args.param);
    Ok(RunOutput { report: finish(report, options, extra.as_bytes()), csv, sidecar: false })
}

fn draw(family: Family, r: &mut ChaCha8Rng) -> TwoLevelParams {
    let mut u = || r.random_range(-DRAW_RANGE..DRAW_RANGE);
    let mut p = TwoLevelParams {
        family,
        a: u(),
        b: u(),
        c: u(),
        d: u(),
        b1: u(),
        b2: u(),
        a1: u(),
        a2: u(),
        q: Complex64::new(u(), 0.0),
    };
    if family == Family::Wph {
        p.q = Complex64::from_polar(r.random_range(0.1..DRAW_RANGE), r.random_range(0.0..std::f64::consts::TAU));
    }
    p
}

fn random_check(args: &ScanArgs, draws: usize, options: &Options) -> Result<RunOutput, CliError> {
    if draws == 0 {
        return Err(CliError::Usage("--random needs at least one draw".into()));
    }
    let tol = options.tol_or(twolevel::DEFAULT_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut rows = Vec::with_capacity(draws);
    let mut worst: Option<(f64, AnalysisReport)> = None;
    let mut not_pseudo_real = 0usize;
    let mut max_symmetry = 0.0f64;
    for k in 0..draws {
        let member = twolevel::member(&draw(args.params.family, &mut rng))?;
        let target = member.target;
        let closed = member.closed;
        let h = member.h.clone();
        let sub = twolevel::analyse(member, options)?;
        let eigs = eigen::eigenvalues(&h)?;
        let err = two_value_error(closed, &eigs);
        let c = classify::classify_spectrum(&eigs, classify::default_tol(&eigs));
        not_pseudo_real += (!c.verdict.is_pseudo_real()) as usize;
        max_symmetry = max_symmetry.max(sub.residuals[target]);
        rows.push(vec![k as f64, err, c.max_pairing_defect, sub.residuals[target]]);
        if worst.as_ref().is_none_or(|(w, _)| err > *w) {
            worst = Some((err, sub));
        }
    }
    let (max_err, mut report) = worst.expect("at least one draw");
    report.model.tag = format!("scan/random/{}", report.model.tag.trim_start_matches("twolevel/"));
    report.model.parameters = BTreeMap::from([
        ("draws".into(), Value::from(draws)),
        ("seed".into(), Value::from(options.seed)),
        ("range".into(), Value::from(DRAW_RANGE)),
    ]);
    report.residuals = BTreeMap::from([
        ("max_closed_form".into(), max_err),
        ("max_symmetry".into(), max_symmetry),
        ("not_pseudo_real".into(), not_pseudo_real as f64),
    ]);
    report.checks = vec![
        Check::at_most("max_closed_form", max_err, tol),
        Check::at_most("max_symmetry", max_symmetry, tol),
        Check::holds("all_pseudo_real", not_pseudo_real == 0),
    ];
    let csv = report::table_csv(&["draw", "closed_form_error", "pairing_defect", "symmetry_residual"], &rows)?;
    Ok(RunOutput { report: finish(report, options, b"random"), csv, sidecar: false })
}

/// Runs `scan`.
pub fn run(args: &ScanArgs, options: &Options) -> Result<RunOutput, CliError> {
    match (args.random, args.range) {
        (Some(draws), _) => random_check(args, draws, options),
        (None, Some(range)) => parameter_scan(args, range, options),
        (None, None) => Err(CliError::Usage("scan needs --range LO:HI or --random DRAWS".into())),
    }
}
