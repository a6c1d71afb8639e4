//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
//! any criterion fails. Every random draw comes from a seed-pinned ChaCha
//! stream so reruns are bit-identical.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use antilinear_core::{
    c64,
    classify,
    eigen::{self, cmp_re_im},
    fock::{self, FockModelParams, ReducedFockParams},
    periodic::{self, Assignment, FourierPotentialSpec, GridSpec, Potential, SinCosPreset},
    symmetry::{self, AntilinearSymmetry, BasisConvention},
    twolevel::{self, ExceptionalPointScan, TwoLevelQtParams, TwoLevelWphParams},
    Complex64, ComplexMatrix, Error,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_a11e;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn uniform(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    r.random_range(lo..hi)
}

fn random_complex(r: &mut ChaCha8Rng) -> Complex64 {
    c64(uniform(r, -1.0, 1.0), uniform(r, -1.0, 1.0))
}

fn within_time(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

/// Distance between two eigenvalue pairs under the better of both matchings.
fn pair_distance(x: (Complex64, Complex64), y: &[Complex64]) -> f64 {
    let straight = (x.0 - y[0]).norm().max((x.1 - y[1]).norm());
    let crossed = (x.0 - y[1]).norm().max((x.1 - y[0]).norm());
    straight.min(crossed)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let grid = [-2.0, 1.0, 3.0];
    let n = 64;
    let mut worst = 0.0f64;
    let mut cases = 0;
    for gamma in [0.5, 1.0, 2.0] {
        for alpha in grid {
            for mu in grid {
                for q in grid {
                    let p = ReducedFockParams::new(alpha, gamma, mu, q).unwrap();
                    let h = fock::build_reduced_fock(&p, n).unwrap();
                    let mut got = eigen::eigenvalues(&h).unwrap();
                    got.sort_by(cmp_re_im);
                    let mut want: Vec<Complex64> =
                        fock::reduced_spectrum(&p, n).into_iter().map(|e| c64(e, 0.0)).collect();
                    want.sort_by(cmp_re_im);
                    for (g, w) in got.iter().zip(&want) {
                        worst = worst.max((g - w).norm());
                    }
                    cases += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst <= 1e-8 && within_time(elapsed, 5),
        format!("{cases} spectra at N = {n}, max |E - gamma(2n+1)| = {worst:.3e}, {:.2}s", elapsed.as_secs_f64()),
    )
}

/// Eigenvector of `h` for eigenvalue nearest `e`, scaled so component 0 is one.
fn oracle_eigenvector(h: &ComplexMatrix, e: f64) -> Vec<Complex64> {
    let ed = eigen::eigendecompose(h).unwrap();
    let k = (0..ed.dim())
        .min_by(|&i, &j| {
            (ed.eigenvalues[i] - e).norm().partial_cmp(&(ed.eigenvalues[j] - e).norm()).unwrap()
        })
        .unwrap();
    let v = ed.eigenvectors.column(k);
    v.iter().map(|z| z / v[0]).collect()
}

fn criterion_2() -> Outcome {
    let p = ReducedFockParams::new(1.0, 1.0, 2.0, 1.0).unwrap();
    let n = 16;
    let h = fock::build_reduced_fock(&p, n).unwrap();
    let psi1 = oracle_eigenvector(&h, 3.0);
    let psi2 = oracle_eigenvector(&h, 5.0);

    let stated1 = c64(0.8, -0.4);
    let stated2 = [c64(1.5, -0.5), c64(1.0, -1.0) * (SQRT_2 / 4.0)];
    let d1 = (psi1[1] - stated1).norm();
    let d2 = (psi2[1] - stated2[0]).norm().max((psi2[2] - stated2[1]).norm());

    let closed2 = fock::closed_form_eigenvector(&p, 2, n).unwrap();
    let closed_gap = (psi2[1] - closed2[1]).norm().max((psi2[2] - closed2[2]).norm());
    Outcome::new(
        d1 <= 1e-10 && d2 <= 1e-10,
        format!(
            "psi1 ratio err {d1:.3e}; psi2 stated components err {d2:.3e} \
             (oracle gives {:.6}{:+.6}i, {:.6}{:+.6}i; corrected closed form err {closed_gap:.3e})",
            psi2[1].re, psi2[1].im, psi2[2].re, psi2[2].im
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    let draws = 1000;
    let mut worst = [0.0f64; 4];
    for _ in 0..draws {
        let (a, c) = (uniform(&mut r, -2.0, 2.0), uniform(&mut r, -2.0, 2.0));
        let h = twolevel::build_qt_real(a, c);
        worst[0] = worst[0].max(pair_distance((c64(a, 0.0), c64(a, 0.0)), &eigen::eigenvalues(&h).unwrap()));

        let p = TwoLevelQtParams {
            a: uniform(&mut r, -2.0, 2.0),
            b: uniform(&mut r, -2.0, 2.0),
            c: uniform(&mut r, -2.0, 2.0),
            d: uniform(&mut r, -2.0, 2.0),
            q: uniform(&mut r, -2.0, 2.0),
        };
        let h = twolevel::build_qt_imaginary(&p);
        worst[1] = worst[1].max(pair_distance(twolevel::qt_eigenvalues(&p), &eigen::eigenvalues(&h).unwrap()));

        let (a, b1, b2, d) =
            (uniform(&mut r, -2.0, 2.0), uniform(&mut r, -2.0, 2.0), uniform(&mut r, -2.0, 2.0), uniform(&mut r, -2.0, 2.0));
        let h = twolevel::build_hermitian(a, b1, b2, d);
        worst[2] = worst[2].max(pair_distance(twolevel::hermitian_eigenvalues(a, b1, b2, d), &eigen::eigenvalues(&h).unwrap()));

        let q = Complex64::from_polar(uniform(&mut r, 0.2, 4.0), uniform(&mut r, 0.0, std::f64::consts::TAU));
        let p = TwoLevelWphParams { a1: uniform(&mut r, -2.0, 2.0), a2: uniform(&mut r, -2.0, 2.0), q };
        let h = twolevel::build_wph_nonzero(&p).unwrap();
        worst[3] = worst[3].max(pair_distance(twolevel::wph_eigenvalues(&p).unwrap(), &eigen::eigenvalues(&h).unwrap()));
    }
    let scan = ExceptionalPointScan::Wph { base: TwoLevelWphParams { a1: 0.0, a2: 1.0, q: c64(1.0, 0.0) } };
    let ep = twolevel::find_exceptional_point(&scan, 1.0, 3.0).unwrap();
    let elapsed = start.elapsed();
    let max = worst.iter().copied().fold(0.0, f64::max);
    Outcome::new(
        max <= 1e-10 && (ep - 2.0).abs() <= 1e-6 && within_time(elapsed, 5),
        format!(
            "{draws} draws x 4 families, max err [qt-real {:.1e}, qt-imag {:.1e}, hermitian {:.1e}, wph {:.1e}]; EP at |q| = {ep:.12}; {:.2}s",
            worst[0], worst[1], worst[2], worst[3], elapsed.as_secs_f64()
        ),
    )
}

fn random_invertible(r: &mut ChaCha8Rng, dim: usize) -> AntilinearSymmetry {
    loop {
        let q = ComplexMatrix::from_fn(dim, |_, _| random_complex(r));
        if let Ok(s) = AntilinearSymmetry::new(q, BasisConvention::Standard) {
            return s;
        }
    }
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut worst_sym = 0.0f64;
    for _ in 0..200 {
        let dim = r.random_range(1..=6);
        let m = ComplexMatrix::from_fn(dim, |_, _| random_complex(&mut r));
        let h = &m + &m.transpose();
        let s = random_invertible(&mut r, dim);
        let gap = symmetry::equivalence_gap(&h, &s).unwrap();
        worst_sym = worst_sym.max((gap.qt - gap.wph).abs());
    }
    let mut separated = 0;
    for _ in 0..200 {
        let dim = r.random_range(2..=6);
        let h = ComplexMatrix::from_fn(dim, |_, _| random_complex(&mut r));
        let s = random_invertible(&mut r, dim);
        let gap = symmetry::equivalence_gap(&h, &s).unwrap();
        if (gap.qt - gap.wph).abs() > 1e-6 {
            separated += 1;
        }
    }
    Outcome::new(
        worst_sym <= 1e-10 && separated >= 190,
        format!("symmetric max |qt - wph| = {worst_sym:.3e}; non-symmetric separated in {separated}/200"),
    )
}

fn random_series(r: &mut ChaCha8Rng) -> Vec<(f64, f64)> {
    let modes = r.random_range(1..=4);
    (0..modes).map(|_| (uniform(r, -1.0, 1.0), uniform(r, -1.0, 1.0))).collect()
}

fn family_bounds(report: &periodic::FamilyReport) -> (bool, f64) {
    let radius = classify::spectral_radius(&report.eigenvalues).max(1.0);
    let rel_defect = report.classification.max_pairing_defect / radius;
    let ok = report.violations.is_empty()
        && report.wph <= 1e-10
        && report.q_squared <= 1e-12
        && report.classification.verdict.is_pseudo_real()
        && rel_defect <= 1e-8;
    (ok, rel_defect)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let preset = SinCosPreset::DEFAULT;
    let grid = GridSpec::with_default_units(128, preset.ell()).unwrap();
    let report = periodic::verify_wph_family(&Potential::SinCos(preset), &Potential::Zero, &grid).unwrap();
    let (preset_ok, preset_defect) = family_bounds(&report);
    let preset_detail = format!(
        "preset wph {:.1e}, Q^2 {:.1e}, pairing {:.1e}",
        report.wph, report.q_squared, preset_defect
    );

    let mut r = rng(5);
    let mut passed = 0;
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..50 {
        let ell = uniform(&mut r, 0.5, 4.0);
        let grid = GridSpec::with_default_units(128, ell).unwrap();
        let v = FourierPotentialSpec::new(ell, random_series(&mut r), random_series(&mut r), Assignment::RealPeriodic).unwrap();
        let a = FourierPotentialSpec::new(ell, random_series(&mut r), random_series(&mut r), Assignment::RealPeriodic).unwrap();
        let report = periodic::verify_wph_family(&Potential::Fourier(v), &Potential::Fourier(a), &grid).unwrap();
        let (ok, defect) = family_bounds(&report);
        worst = (worst.0.max(report.wph), worst.1.max(report.q_squared), worst.2.max(defect));
        passed += ok as usize;
    }
    let elapsed = start.elapsed();
    Outcome::new(
        preset_ok && passed == 50 && within_time(elapsed, 30),
        format!(
            "{preset_detail}; random {passed}/50 (worst wph {:.1e}, Q^2 {:.1e}, pairing {:.1e}); {:.2}s",
            worst.0, worst.1, worst.2, elapsed.as_secs_f64()
        ),
    )
}

fn conforming_general(r: &mut ChaCha8Rng, truncation: usize) -> FockModelParams {
    let gamma = uniform(r, 0.5, 2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 };
    let q = uniform(r, 0.5, 2.0);
    FockModelParams {
        alpha: c64(uniform(r, -2.0, 2.0), 0.0),
        beta: c64(0.0, 0.0),
        gamma: c64(gamma, 0.0),
        mfr: c64(uniform(r, -2.0, 2.0), gamma * q),
        nfr: c64(0.0, 0.0),
        qfr: c64(0.0, q),
        truncation,
    }
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    let mut analytic_max = 0.0f64;
    let mut operator_max = 0.0f64;
    for n in [8, 16, 32] {
        for _ in 0..10 {
            let p = conforming_general(&mut r, n);
            analytic_max = analytic_max.max(fock::qt_constraint_residuals(&p).unwrap().max());
            let h = fock::build_general_fock(&p).unwrap();
            let s = fock::fock_symmetry(p.qfr, n).unwrap();
            operator_max = operator_max.max(fock::projected_qt_residual(&h, &s, n - 2).unwrap());
        }
    }

    let base = conforming_general(&mut r, 16);
    let violations: [(&str, usize, FockModelParams); 6] = [
        ("alpha", 0, FockModelParams { alpha: base.alpha + c64(0.0, 0.3), ..base }),
        ("beta", 1, FockModelParams { beta: c64(0.0, 0.3), ..base }),
        ("gamma", 2, FockModelParams { gamma: base.gamma + c64(0.0, 0.3), ..base }),
        ("m", 3, FockModelParams { mfr: base.mfr + c64(0.0, 0.3), ..base }),
        ("n", 4, FockModelParams { nfr: c64(0.0, 0.3), ..base }),
        ("nq", 5, FockModelParams { nfr: c64(0.3, 0.0), ..base }),
    ];
    let mut detected = Vec::new();
    for (name, idx, p) in violations {
        let res = fock::qt_constraint_residuals(&p).unwrap();
        if res.as_array()[idx] > 1e-3 && !res.all_within(1e-12) {
            detected.push(name);
        }
    }
    Outcome::new(
        analytic_max == 0.0 && operator_max <= 1e-10 && detected.len() == 6,
        format!(
            "analytic max {analytic_max:.1e}, projected operator max {operator_max:.1e} over N in {{8,16,32}}; violations detected: {}",
            detected.join(",")
        ),
    )
}

fn criterion_7() -> Outcome {
    let p = ReducedFockParams::new(1.0, 1.0, 0.0, 1.0).unwrap();
    let cert = fock::quasi_hermitian_check(&p, 32);
    let h = twolevel::build_qt_real(1.0, 1.0);
    let ed = eigen::eigendecompose(&h).unwrap();
    let refused = matches!(
        classify::quasi_hermitian_certificate(&h, &ed, 1e-8),
        Err(Error::Defective { .. })
    );
    match cert {
        Ok(c) => Outcome::new(
            c.residual <= 1e-8 && refused,
            format!("N = 32 interior block residual {:.3e}, cond(S) {:.3e}; defective matrix refused: {refused}", c.residual, c.cond),
        ),
        Err(e) => Outcome::new(false, format!("certificate failed: {e}; defective matrix refused: {refused}")),
    }
}

fn criterion_8() -> Outcome {
    let n = 16;
    let parity = fock::parity_matrix(n);
    let broken = ReducedFockParams::new(1.0, 1.0, 2.0, 1.0).unwrap();
    let r_broken = symmetry::pt_residual(&fock::build_reduced_fock(&broken, n).unwrap(), &parity).unwrap();
    let intact = ReducedFockParams::new(1.0, 1.0, 0.0, 1.0).unwrap();
    let r_intact = symmetry::pt_residual(&fock::build_reduced_fock(&intact, n).unwrap(), &parity).unwrap();
    Outcome::new(
        r_broken > 1e-3 && r_intact <= 1e-12,
        format!("PT residual mu = 2: {r_broken:.3e}; mu = 0: {r_intact:.3e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Fock exact spectrum", criterion_1),
        ("Fock eigenvectors", criterion_2),
        ("two-level closed forms and exceptional point", criterion_3),
        ("QT / weak pseudo-Hermiticity equivalence", criterion_4),
        ("periodic family verification", criterion_5),
        ("Fock QT constraint set", criterion_6),
        ("quasi-Hermiticity certificate", criterion_7),
        ("non-PT witness", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failures += (!outcome.pass) as usize;
        println!("{tag} criterion {}: {name}: {}", i + 1, outcome.detail);
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
