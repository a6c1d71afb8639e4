//! Antilinear symmetries `Θ = QT` and the residuals of their defining
//! identities.
//!
//! `T` is fixed as entrywise complex conjugation in the working basis, so the
//! antilinear symmetry is carried entirely by the invertible linear factor
//! `Q`. All residuals are relative: a Frobenius norm divided by the natural
//! operator scale (floored at one), so tolerances hold across parameter ranges
//! and are invariant under `Q → cQ`.

use num_complex::Complex64;

use crate::{
    error::{domain, Result},
    matrix::ComplexMatrix,
    svd,
};

/// Relative bound on the smallest singular value below which `Q` counts as
/// singular.
pub const INVERTIBILITY_TOL: f64 = 1e-12;

/// Basis in which `T` acts as entrywise conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisConvention {
    /// Standard basis of `ℂᴺ`.
    Standard,
    /// Position grid of a discretized wave function.
    PositionGrid,
    /// Number (Fock) basis; oscillator eigenfunctions are real.
    Number,
}

/// The antilinear operator `Θ = QT`, represented by `Q`.
#[derive(Debug, Clone)]
pub struct AntilinearSymmetry {
    q: ComplexMatrix,
    basis: BasisConvention,
}

impl AntilinearSymmetry {
    /// Wraps `q`, checking `σ_min(q) > 1e-12 ‖q‖_F`.
    pub fn new(q: ComplexMatrix, basis: BasisConvention) -> Result<Self> {
        let smin = svd::smallest_singular_value(&q);
        if !(smin > INVERTIBILITY_TOL * q.frobenius_norm()) {
            return Err(domain("Q must be invertible (smallest singular value too small)"));
        }
        Ok(Self { q, basis })
    }

    /// `Θ = T` in the standard basis.
    pub fn conjugation(dim: usize) -> Self {
        Self { q: ComplexMatrix::identity(dim), basis: BasisConvention::Standard }
    }

    /// The linear factor `Q`.
    pub fn q(&self) -> &ComplexMatrix {
        &self.q
    }

    /// Basis in which `T` is conjugation.
    pub fn basis(&self) -> BasisConvention {
        self.basis
    }

    /// Dimension of `Q`.
    pub fn dim(&self) -> usize {
        self.q.dim()
    }
}

/// `QT`-symmetry defect: `‖Q·H̄ − H·Q‖_F / max(1, ‖H‖_F‖Q‖_F)`.
///
/// Zero iff `H̄ = Q⁻¹HQ`.
pub fn qt_residual(h: &ComplexMatrix, s: &AntilinearSymmetry) -> Result<f64> {
    h.check_dim(s.q())?;
    let q = s.q();
    let diff = &(q * &h.conj()) - &(h * q);
    Ok(diff.frobenius_norm() / scale(h, q))
}

/// Weak pseudo-Hermiticity defect: `‖Q·H† − H·Q‖_F / max(1, ‖H‖_F‖Q‖_F)`.
///
/// Zero iff `H† = Q⁻¹HQ`.
pub fn wph_residual(h: &ComplexMatrix, s: &AntilinearSymmetry) -> Result<f64> {
    h.check_dim(s.q())?;
    let q = s.q();
    let diff = &(q * &h.adjoint()) - &(h * q);
    Ok(diff.frobenius_norm() / scale(h, q))
}

/// Transpose-symmetry defect `‖H − Hᵀ‖_F / max(1, ‖H‖_F)`.
pub fn symmetric_defect(h: &ComplexMatrix) -> f64 {
    (h - &h.transpose()).frobenius_norm() / h.frobenius_norm().max(1.0)
}

/// `‖H·Q² − Q²·H‖_F / max(1, ‖H‖_F‖Q‖_F²)`.
pub fn q_squared_commutator_residual(h: &ComplexMatrix, s: &AntilinearSymmetry) -> Result<f64> {
    h.check_dim(s.q())?;
    let q = s.q();
    let q2 = q * q;
    let diff = &(h * &q2) - &(&q2 * h);
    let qn = q.frobenius_norm();
    Ok(diff.frobenius_norm() / (h.frobenius_norm() * qn * qn).max(1.0))
}

/// The three residuals whose agreement characterizes symmetric matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceGap {
    /// [`qt_residual`].
    pub qt: f64,
    /// [`wph_residual`].
    pub wph: f64,
    /// [`symmetric_defect`].
    pub symmetric_defect: f64,
}

impl EquivalenceGap {
    /// `|qt − wph|`.
    pub fn gap(&self) -> f64 {
        (self.qt - self.wph).abs()
    }
}

/// Bundles [`qt_residual`], [`wph_residual`] and [`symmetric_defect`].
///
/// For transpose-symmetric `H` the first two coincide because `H† = H̄`.
pub fn equivalence_gap(h: &ComplexMatrix, s: &AntilinearSymmetry) -> Result<EquivalenceGap> {
    Ok(EquivalenceGap {
        qt: qt_residual(h, s)?,
        wph: wph_residual(h, s)?,
        symmetric_defect: symmetric_defect(h),
    })
}

/// `‖P·H̄·P − H‖_F / max(1, ‖H‖_F)` for a linear involution `P`; zero iff `H`
/// commutes with `PT`.
pub fn pt_residual(h: &ComplexMatrix, parity: &ComplexMatrix) -> Result<f64> {
    h.check_dim(parity)?;
    let diff = &(&(parity * &h.conj()) * parity) - h;
    Ok(diff.frobenius_norm() / h.frobenius_norm().max(1.0))
}

fn scale(h: &ComplexMatrix, q: &ComplexMatrix) -> f64 {
    (h.frobenius_norm() * q.frobenius_norm()).max(1.0)
}

/// `Q = [[1, 0], [𝔮, 1]]`, the two-level symmetry factor.
pub fn two_level_q(qfr: Complex64) -> AntilinearSymmetry {
    let mut q = ComplexMatrix::identity(2);
    q[(1, 0)] = qfr;
    // Unit lower-triangular: always invertible.
    AntilinearSymmetry { q, basis: BasisConvention::Standard }
}
