//! Two-level (2×2) families with `Q = [[1, 0], [𝔮, 1]]`.
//!
//! * `QT`-symmetric, real 𝔮: `[[a, 0], [c, a]]`, never diagonalizable unless `c = 0`.
//! * `QT`-symmetric, 𝔮 = iq: `[[a − ibq/2, b], [c + i(a−d)q/2, d + ibq/2]]`.
//! * `Q⁻¹`-weakly pseudo-Hermitian, 𝔮 = 0: any Hermitian matrix.
//! * `Q⁻¹`-weakly pseudo-Hermitian, 𝔮 ≠ 0:
//!   `[[a₁ + ia₂, −2ia₂/𝔮], [2ia₂/𝔮*, a₁ − ia₂]]`.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{
    c64,
    error::{domain, Error, Result},
    matrix::ComplexMatrix,
    symmetry::{two_level_q, AntilinearSymmetry},
};

/// Parameters of the `QT`-symmetric family with 𝔮 = iq.
///
/// The real-𝔮 family is the sub-case `b = 0, a = d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelQtParams {
    /// Real diagonal parameter `a`.
    pub a: f64,
    /// Upper off-diagonal `b`.
    pub b: f64,
    /// Lower off-diagonal real part `c`.
    pub c: f64,
    /// Real diagonal parameter `d`.
    pub d: f64,
    /// Imaginary part of 𝔮.
    pub q: f64,
}

/// Parameters of the weakly pseudo-Hermitian family with 𝔮 ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelWphParams {
    /// Real part of the diagonal.
    pub a1: f64,
    /// Imaginary part of the upper diagonal entry.
    pub a2: f64,
    /// 𝔮, must be nonzero.
    pub q: Complex64,
}

/// `[[a, 0], [c, a]]`.
pub fn build_qt_real(a: f64, c: f64) -> ComplexMatrix {
    let mut h = ComplexMatrix::identity(2).scale(c64(a, 0.0));
    h[(1, 0)] = c64(c, 0.0);
    h
}

/// The `QT`-symmetric matrix for 𝔮 = iq.
pub fn build_qt_imaginary(p: &TwoLevelQtParams) -> ComplexMatrix {
    let TwoLevelQtParams { a, b, c, d, q } = *p;
    let mut h = ComplexMatrix::zeros(2);
    h[(0, 0)] = c64(a, -0.5 * b * q);
    h[(0, 1)] = c64(b, 0.0);
    h[(1, 0)] = c64(c, 0.5 * (a - d) * q);
    h[(1, 1)] = c64(d, 0.5 * b * q);
    h
}

/// `(a − d)² − b(bq² − 4c)`.
pub fn qt_discriminant(p: &TwoLevelQtParams) -> f64 {
    (p.a - p.d).powi(2) - p.b * (p.b * p.q * p.q - 4.0 * p.c)
}

/// `E± = ½[a + d ± √disc]` with `√(−x) = +i√x`.
pub fn qt_eigenvalues(p: &TwoLevelQtParams) -> (Complex64, Complex64) {
    let root = real_sqrt(qt_discriminant(p));
    let mean = c64(0.5 * (p.a + p.d), 0.0);
    (mean + root * 0.5, mean - root * 0.5)
}

/// The symmetry `Θ = QT` for the imaginary-𝔮 family.
pub fn qt_symmetry(q: f64) -> AntilinearSymmetry {
    two_level_q(c64(0.0, q))
}

/// The weakly pseudo-Hermitian matrix for 𝔮 ≠ 0.
pub fn build_wph_nonzero(p: &TwoLevelWphParams) -> Result<ComplexMatrix> {
    check_nonzero_q(p.q)?;
    let i2a = c64(0.0, 2.0 * p.a2);
    let mut h = ComplexMatrix::zeros(2);
    h[(0, 0)] = c64(p.a1, p.a2);
    h[(0, 1)] = -i2a / p.q;
    h[(1, 0)] = i2a / p.q.conj();
    h[(1, 1)] = c64(p.a1, -p.a2);
    Ok(h)
}

/// `4 − |𝔮|²`.
pub fn wph_discriminant(p: &TwoLevelWphParams) -> f64 {
    4.0 - p.q.norm_sqr()
}

/// `E± = a₁ ± |a₂||𝔮|⁻¹√(4 − |𝔮|²)`.
pub fn wph_eigenvalues(p: &TwoLevelWphParams) -> Result<(Complex64, Complex64)> {
    check_nonzero_q(p.q)?;
    let split = real_sqrt(wph_discriminant(p)) * (p.a2.abs() / p.q.norm());
    let a1 = c64(p.a1, 0.0);
    Ok((a1 + split, a1 - split))
}

/// `Q = [[1, 0], [𝔮, 1]]` for the weakly pseudo-Hermitian family.
pub fn wph_symmetry(q: Complex64) -> AntilinearSymmetry {
    two_level_q(q)
}

/// Hermitian `[[a, b₁ + ib₂], [b₁ − ib₂, d]]` (the 𝔮 = 0 case, `Q = I`).
pub fn build_hermitian(a: f64, b1: f64, b2: f64, d: f64) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(2);
    h[(0, 0)] = c64(a, 0.0);
    h[(0, 1)] = c64(b1, b2);
    h[(1, 0)] = c64(b1, -b2);
    h[(1, 1)] = c64(d, 0.0);
    h
}

/// Closed-form eigenvalues of the Hermitian family.
pub fn hermitian_eigenvalues(a: f64, b1: f64, b2: f64, d: f64) -> (Complex64, Complex64) {
    let r = (0.25 * (a - d).powi(2) + b1 * b1 + b2 * b2).sqrt();
    let m = 0.5 * (a + d);
    (c64(m + r, 0.0), c64(m - r, 0.0))
}

/// Recovers weakly pseudo-Hermitian family parameters from a 2×2 matrix that fits the
/// template within `tol` (relative to `max(1, ‖H‖)`).
pub fn fit_wph_template(h: &ComplexMatrix, tol: f64) -> Option<TwoLevelWphParams> {
    if h.dim() != 2 {
        return None;
    }
    let scale = h.frobenius_norm().max(1.0);
    let (h00, h01) = (h[(0, 0)], h[(0, 1)]);
    let (a1, a2) = (h00.re, h00.im);
    if h01.norm() <= tol * scale {
        return None;
    }
    let q = c64(0.0, -2.0 * a2) / h01;
    let p = TwoLevelWphParams { a1, a2, q };
    let fitted = build_wph_nonzero(&p).ok()?;
    ((&fitted - h).frobenius_norm() <= tol * scale).then_some(p)
}

/// Parameter of the `QT` family that an exceptional-point scan varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QtScanParam {
    /// `a`
    A,
    /// `b`
    B,
    /// `c`
    C,
    /// `d`
    D,
    /// `q`
    Q,
}

/// Family and fixed parameters for an exceptional-point search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExceptionalPointScan {
    /// Scan one parameter of the `QT` family; the discriminant is
    /// `(a − d)² − b(bq² − 4c)`.
    Qt {
        /// Parameters held fixed (the scanned field is overwritten).
        base: TwoLevelQtParams,
        /// Which field to scan.
        param: QtScanParam,
    },
    /// Scan `|𝔮|` of the weakly pseudo-Hermitian family (phase of `base.q`
    /// is kept, or taken as real when `base.q = 0`); the discriminant is
    /// `4 − |𝔮|²`.
    Wph {
        /// Parameters held fixed.
        base: TwoLevelWphParams,
    },
}

impl ExceptionalPointScan {
    /// Discriminant at scan value `x`.
    pub fn discriminant(&self, x: f64) -> f64 {
        match *self {
            Self::Qt { base, param } => qt_discriminant(&with_param(base, param, x)),
            Self::Wph { base } => {
                let phase = if base.q.norm() > 0.0 { base.q / base.q.norm() } else { c64(1.0, 0.0) };
                wph_discriminant(&TwoLevelWphParams { q: phase * x, ..base })
            }
        }
    }

    /// Matrix at scan value `x`.
    pub fn matrix(&self, x: f64) -> Result<ComplexMatrix> {
        match *self {
            Self::Qt { base, param } => Ok(build_qt_imaginary(&with_param(base, param, x))),
            Self::Wph { base } => {
                let phase = if base.q.norm() > 0.0 { base.q / base.q.norm() } else { c64(1.0, 0.0) };
                build_wph_nonzero(&TwoLevelWphParams { q: phase * x, ..base })
            }
        }
    }
}

/// Writes `x` into the field selected by `param`.
pub fn with_param(mut p: TwoLevelQtParams, param: QtScanParam, x: f64) -> TwoLevelQtParams {
    match param {
        QtScanParam::A => p.a = x,
        QtScanParam::B => p.b = x,
        QtScanParam::C => p.c = x,
        QtScanParam::D => p.d = x,
        QtScanParam::Q => p.q = x,
    }
    p
}

/// Absolute tolerance of the bisection in the scan parameter.
pub const EP_TOL: f64 = 1e-10;

/// Locates a zero of the analytic discriminant in `[lo, hi]` by bisection.
pub fn find_exceptional_point(scan: &ExceptionalPointScan, lo: f64, hi: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain("scan range must be finite with lo < hi"));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (scan.discriminant(a), scan.discriminant(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::ExceptionalPointNotFound { lo, hi });
    }
    // Bisect well below the advertised tolerance.
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if b - a <= EP_TOL * 1e-3 || m <= a || m >= b {
            break;
        }
        let fm = scan.discriminant(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

fn check_nonzero_q(q: Complex64) -> Result<()> {
    if q.norm() == 0.0 {
        return Err(domain("q = 0: use build_hermitian for the Hermitian family"));
    }
    Ok(())
}

/// Principal square root of a real number: `√(−x) = +i√x`.
fn real_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        c64(x.sqrt(), 0.0)
    } else {
        c64(0.0, (-x).sqrt())
    }
}
