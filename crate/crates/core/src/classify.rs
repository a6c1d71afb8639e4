//! Spectrum classification, defectiveness and quasi-Hermiticity certificates.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{
    eigen::{cmp_re_im, EigenDecomposition, DEFECT_THRESHOLD},
    error::{Error, Result},
    matrix::ComplexMatrix,
    svd,
};

/// Eigenbasis condition numbers above this make a similarity certificate
/// meaningless.
pub const MAX_BASIS_CONDITION: f64 = 1e10;

/// Outcome of the conjugate-pairing test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every eigenvalue is real within tolerance.
    AllReal,
    /// Nonreal eigenvalues occur in complex-conjugate pairs.
    PseudoRealWithPairs,
    /// Some eigenvalue has no conjugate partner.
    NotPseudoReal,
}

impl Verdict {
    /// Either real or pseudo-real.
    pub fn is_pseudo_real(self) -> bool {
        !matches!(self, Verdict::NotPseudoReal)
    }
}

/// Verdict plus the pairing that supports it.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumClassification {
    /// Classification.
    pub verdict: Verdict,
    /// Index pairs `(i, j)` with `λᵢ ≈ λⱼ*`; real eigenvalues pair with
    /// themselves.
    pub pairing: Vec<(usize, usize)>,
    /// `max |λᵢ − λⱼ*|` over the pairing.
    pub max_pairing_defect: f64,
    /// Whether the underlying decomposition was flagged defective.
    pub defective: bool,
    /// Tolerance the verdict was reached with.
    pub tol: f64,
}

/// Spectral radius.
pub fn spectral_radius(eigs: &[Complex64]) -> f64 {
    eigs.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Default classification tolerance `1e-8 · max(1, ρ)`.
pub fn default_tol(eigs: &[Complex64]) -> f64 {
    1e-8 * spectral_radius(eigs).max(1.0)
}

/// Greedy nearest-conjugate matching.
///
/// Eigenvalues are visited in order of real part (ties by index); each
/// unmatched `λᵢ` is paired with the unmatched `λⱼ` (possibly itself)
/// minimizing `|λᵢ − λⱼ*|`. The cost is symmetric in `i, j`, so conjugating
/// the input yields the same pairing.
pub fn classify_spectrum(eigs: &[Complex64], tol: f64) -> SpectrumClassification {
    let n = eigs.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eigs[a].re.partial_cmp(&eigs[b].re).unwrap_or(core::cmp::Ordering::Equal).then(a.cmp(&b))
    });
    let mut used = alloc::vec![false; n];
    let mut pairing = Vec::with_capacity(n);
    let mut max_defect = 0.0f64;
    for &i in &order {
        if used[i] {
            continue;
        }
        let mut best = (i, (eigs[i] - eigs[i].conj()).norm());
        for j in 0..n {
            if used[j] || j == i {
                continue;
            }
            let d = (eigs[i] - eigs[j].conj()).norm();
            if d < best.1 || (d == best.1 && j < best.0) {
                best = (j, d);
            }
        }
        let (j, d) = best;
        used[i] = true;
        used[j] = true;
        pairing.push((i.min(j), i.max(j)));
        max_defect = max_defect.max(d);
    }
    let all_real = eigs.iter().all(|z| z.im.abs() <= tol);
    let verdict = if all_real {
        Verdict::AllReal
    } else if max_defect <= tol {
        Verdict::PseudoRealWithPairs
    } else {
        Verdict::NotPseudoReal
    };
    SpectrumClassification { verdict, pairing, max_pairing_defect: max_defect, defective: false, tol }
}

/// Classifies the eigenvalues of a decomposition with the default tolerance
/// and records its defectiveness.
pub fn classify_decomposition(ed: &EigenDecomposition) -> SpectrumClassification {
    let mut c = classify_spectrum(&ed.eigenvalues, default_tol(&ed.eigenvalues));
    c.defective = defectiveness_report(ed, default_gap_tol(&ed.eigenvalues)).defective;
    c
}

/// Raw numbers behind a defectiveness call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectivenessReport {
    /// `cond > DEFECT_THRESHOLD` and `min_gap < gap_tol`.
    pub defective: bool,
    /// Smallest pairwise eigenvalue distance (`∞` for a 1×1 matrix).
    pub min_gap: f64,
    /// Eigenvector condition number.
    pub cond: f64,
}

/// Default near-degeneracy tolerance `1e-6 · max(1, ρ)`.
pub fn default_gap_tol(eigs: &[Complex64]) -> f64 {
    1e-6 * spectral_radius(eigs).max(1.0)
}

/// Flags a decomposition as defective only when eigenvalues nearly coincide
/// and the eigenbasis is ill-conditioned.
pub fn defectiveness_report(ed: &EigenDecomposition, gap_tol: f64) -> DefectivenessReport {
    let cond = ed.vector_condition_number;
    let min_gap = min_gap(&ed.eigenvalues);
    DefectivenessReport { defective: !(cond <= DEFECT_THRESHOLD) && min_gap < gap_tol, min_gap, cond }
}

fn min_gap(eigs: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..eigs.len() {
        for j in i + 1..eigs.len() {
            gap = gap.min((eigs[i] - eigs[j]).norm());
        }
    }
    gap
}

/// Evidence that `H = S Λ S⁻¹` with real diagonal `Λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiHermitianCertificate {
    /// `‖S Λ S⁻¹ − H‖_F / ‖H‖_F`.
    pub residual: f64,
    /// 2-norm condition number of `S`.
    pub cond: f64,
    /// Diagonal of `Λ`.
    pub eigenvalues: Vec<f64>,
}

/// Certifies quasi-Hermiticity from an eigendecomposition: diagonalizable
/// with real spectrum, reconstructed within `tol · ‖H‖_F`.
pub fn quasi_hermitian_certificate(
    h: &ComplexMatrix,
    ed: &EigenDecomposition,
    tol: f64,
) -> Result<QuasiHermitianCertificate> {
    h.check_dim(&ed.eigenvectors)?;
    let report = defectiveness_report(ed, default_gap_tol(&ed.eigenvalues));
    if report.defective {
        return Err(Error::Defective { cond: report.cond, min_gap: report.min_gap });
    }
    let imag_tol = tol * spectral_radius(&ed.eigenvalues).max(1.0);
    let max_imag = ed.eigenvalues.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_imag > imag_tol {
        return Err(Error::NotRealSpectrum { max_imag });
    }
    let lambda: Vec<f64> = ed.eigenvalues.iter().map(|z| z.re).collect();
    certify_with_basis(h, &ed.eigenvectors, &lambda, tol)
}

/// Checks `‖S Λ S⁻¹ − H‖_F ≤ tol · ‖H‖_F` for a supplied basis `S` (columns)
/// and real diagonal `Λ`.
pub fn certify_with_basis(
    h: &ComplexMatrix,
    s: &ComplexMatrix,
    lambda: &[f64],
    tol: f64,
) -> Result<QuasiHermitianCertificate> {
    h.check_dim(s)?;
    if lambda.len() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: lambda.len() });
    }
    let cond = svd::condition_number(s);
    if !(cond <= MAX_BASIS_CONDITION) {
        return Err(Error::IllConditionedBasis { cond });
    }
    let s_inv = s.inverse().map_err(|_| Error::IllConditionedBasis { cond })?;
    let diag: Vec<Complex64> = lambda.iter().map(|&l| Complex64::new(l, 0.0)).collect();
    let recon = &(s * &ComplexMatrix::from_diag(&diag)) * &s_inv;
    let hn = h.frobenius_norm();
    let residual = (&recon - h).frobenius_norm() / if hn > 0.0 { hn } else { 1.0 };
    if !(residual <= tol) {
        return Err(Error::ReconstructionFailed { residual, tol });
    }
    let mut eigenvalues = lambda.to_vec();
    eigenvalues.sort_by(|a, b| cmp_re_im(&Complex64::new(*a, 0.0), &Complex64::new(*b, 0.0)));
    Ok(QuasiHermitianCertificate { residual, cond, eigenvalues })
}
