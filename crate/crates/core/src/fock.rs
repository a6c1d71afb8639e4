//! Quadratic ladder-operator Hamiltonians in a truncated Fock space.
//!
//! The general model is `H = αa² + βa†² + γ{a, a†} + 𝔪a + 𝔫a†` with the
//! symmetry factor `Q = e^{𝔮a}`. Imposing `QT`-symmetry forces `β = 𝔫 = 0`,
//! real `α, γ`, `𝔮 = iq` and `Im 𝔪 = γq`, which leaves the upper-triangular
//! reduced model `H = αa² + γ{a, a†} + (μ + iγq)a` with spectrum `γ(2n + 1)`.
//!
//! Truncation to `N` number states is exact for `a` (it maps the span of the
//! first `N` states into itself) but not for `a†`; identities involving `a†`
//! are therefore only asserted on the leading `N − 2` block.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::{
    c64,
    classify::{self, QuasiHermitianCertificate},
    error::{domain, Error, Result},
    matrix::{exp_triangular_nilpotent, ComplexMatrix},
    symmetry::{AntilinearSymmetry, BasisConvention},
};

/// Denominators below this magnitude make a closed-form eigenvector undefined.
pub const DENOMINATOR_TOL: f64 = 1e-12;

/// Truncated annihilation and creation operators `(a, a†)` on `N` states.
pub fn ladder_matrices(n: usize) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if n < 2 {
        return Err(domain("ladder operators need at least two number states"));
    }
    let mut a = ComplexMatrix::zeros(n);
    for k in 1..n {
        a[(k - 1, k)] = c64((k as f64).sqrt(), 0.0);
    }
    let adag = a.adjoint();
    Ok((a, adag))
}

/// Number-basis parity `P = diag((−1)ⁿ)`, satisfying `PaP = −a`.
pub fn parity_matrix(n: usize) -> ComplexMatrix {
    let diag: Vec<Complex64> = (0..n).map(|k| c64(if k % 2 == 0 { 1.0 } else { -1.0 }, 0.0)).collect();
    ComplexMatrix::from_diag(&diag)
}

/// Coefficients of the general quadratic model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockModelParams {
    /// Coefficient of `a²`.
    pub alpha: Complex64,
    /// Coefficient of `a†²`.
    pub beta: Complex64,
    /// Coefficient of `{a, a†}`.
    pub gamma: Complex64,
    /// Coefficient 𝔪 of `a`.
    pub mfr: Complex64,
    /// Coefficient 𝔫 of `a†`.
    pub nfr: Complex64,
    /// Exponent 𝔮 of `Q = e^{𝔮a}`.
    pub qfr: Complex64,
    /// Number of retained number states.
    pub truncation: usize,
}

/// `αa² + βa†² + γ(aa† + a†a) + 𝔪a + 𝔫a†` from truncated ladder products.
///
/// The anticommutator's last diagonal entry is `N − 1` instead of `2N − 1`
/// and `a†²` loses its last two rows' targets; these are truncation artifacts.
pub fn build_general_fock(p: &FockModelParams) -> Result<ComplexMatrix> {
    let (a, ad) = ladder_matrices(p.truncation)?;
    let a2 = &a * &a;
    let ad2 = &ad * &ad;
    let anti = &(&a * &ad) + &(&ad * &a);
    let terms = [
        a2.scale(p.alpha),
        ad2.scale(p.beta),
        anti.scale(p.gamma),
        a.scale(p.mfr),
        ad.scale(p.nfr),
    ];
    let mut h = ComplexMatrix::zeros(p.truncation);
    for t in &terms {
        h = &h + t;
    }
    Ok(h)
}

/// The six residuals of the analytic `QT`-symmetry conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QtConstraintResiduals {
    /// `|α* − α|`
    pub alpha: f64,
    /// `|β* − β|`
    pub beta: f64,
    /// `|γ* − γ|`
    pub gamma: f64,
    /// `|𝔪* − (𝔪 − 2γ𝔮)|`
    pub m: f64,
    /// `|𝔫* − (𝔫 − 2β𝔮)|`
    pub n: f64,
    /// `|𝔫𝔮|`
    pub nq: f64,
}

impl QtConstraintResiduals {
    /// Residuals in declaration order.
    pub fn as_array(&self) -> [f64; 6] {
        [self.alpha, self.beta, self.gamma, self.m, self.n, self.nq]
    }

    /// Names matching [`Self::as_array`].
    pub const NAMES: [&'static str; 6] = ["alpha", "beta", "gamma", "m", "n", "nq"];

    /// Largest residual.
    pub fn max(&self) -> f64 {
        self.as_array().into_iter().fold(0.0, f64::max)
    }

    /// Whether every residual is at most `tol`.
    pub fn all_within(&self, tol: f64) -> bool {
        self.as_array().iter().all(|&r| r <= tol)
    }
}

/// Evaluates the analytic `QT` constraints on the coefficients.
pub fn qt_constraint_residuals(p: &FockModelParams) -> Result<QtConstraintResiduals> {
    if p.qfr.is_zero() {
        return Err(domain("qfr must be nonzero for the QT constraint set"));
    }
    let two = c64(2.0, 0.0);
    Ok(QtConstraintResiduals {
        alpha: (p.alpha.conj() - p.alpha).norm(),
        beta: (p.beta.conj() - p.beta).norm(),
        gamma: (p.gamma.conj() - p.gamma).norm(),
        m: (p.mfr.conj() - (p.mfr - two * p.gamma * p.qfr)).norm(),
        n: (p.nfr.conj() - (p.nfr - two * p.beta * p.qfr)).norm(),
        nq: (p.nfr * p.qfr).norm(),
    })
}

/// `Θ = QT` with `Q = e^{𝔮a}` on `N` number states.
pub fn fock_symmetry(qfr: Complex64, n: usize) -> Result<AntilinearSymmetry> {
    let (a, _) = ladder_matrices(n)?;
    let q = exp_triangular_nilpotent(&a, qfr)?;
    AntilinearSymmetry::new(q, BasisConvention::Number)
}

/// `‖P(Q·H̄ − H·Q)P‖_F / max(1, ‖H‖_F‖Q‖_F)` where `P` keeps the first `k`
/// basis vectors.
pub fn projected_qt_residual(h: &ComplexMatrix, s: &AntilinearSymmetry, k: usize) -> Result<f64> {
    h.check_dim(s.q())?;
    if k == 0 || k > h.dim() {
        return Err(domain("projection size must be in 1..=dim"));
    }
    let q = s.q();
    let diff = (&(q * &h.conj()) - &(h * q)).project_leading(k);
    Ok(diff.frobenius_norm() / (h.frobenius_norm() * q.frobenius_norm()).max(1.0))
}

/// Parameters of the reduced (`QT`-symmetric) model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedFockParams {
    /// Real coefficient of `a²`.
    pub alpha: f64,
    /// Nonzero real coefficient of `{a, a†}`.
    pub gamma: f64,
    /// `μ = Re 𝔪`.
    pub mu: f64,
    /// Nonzero real `q` with `𝔮 = iq`.
    pub q: f64,
}

impl ReducedFockParams {
    /// Validates `γ ≠ 0`, `q ≠ 0` and finiteness.
    pub fn new(alpha: f64, gamma: f64, mu: f64, q: f64) -> Result<Self> {
        if ![alpha, gamma, mu, q].iter().all(|x| x.is_finite()) {
            return Err(domain("reduced Fock parameters must be finite"));
        }
        if gamma == 0.0 {
            return Err(domain("gamma must be nonzero"));
        }
        if q == 0.0 {
            return Err(domain("q must be nonzero"));
        }
        Ok(Self { alpha, gamma, mu, q })
    }

    /// `𝔪 = μ + iγq`.
    pub fn mfr(&self) -> Complex64 {
        c64(self.mu, self.gamma * self.q)
    }

    /// `𝔮 = iq`.
    pub fn qfr(&self) -> Complex64 {
        c64(0.0, self.q)
    }

    /// The same model as general coefficients.
    pub fn to_general(&self, truncation: usize) -> FockModelParams {
        FockModelParams {
            alpha: c64(self.alpha, 0.0),
            beta: Complex64::zero(),
            gamma: c64(self.gamma, 0.0),
            mfr: self.mfr(),
            nfr: Complex64::zero(),
            qfr: self.qfr(),
            truncation,
        }
    }
}

/// `H_mn = γ(2n+1)δ_mn + 𝔪√n δ_{m,n−1} + α√(n(n−1)) δ_{m,n−2}`.
///
/// Built from the entry formula, so it is exactly the restriction of the
/// untruncated operator to the first `N` number states (upper-triangular,
/// zeros below the diagonal).
pub fn build_reduced_fock(p: &ReducedFockParams, n: usize) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(domain("truncation must be positive"));
    }
    let m = p.mfr();
    let mut h = ComplexMatrix::zeros(n);
    for k in 0..n {
        let kf = k as f64;
        h[(k, k)] = c64(p.gamma * (2.0 * kf + 1.0), 0.0);
        if k >= 1 {
            h[(k - 1, k)] = m * kf.sqrt();
        }
        if k >= 2 {
            h[(k - 2, k)] = c64(p.alpha * (kf * (kf - 1.0)).sqrt(), 0.0);
        }
    }
    Ok(h)
}

/// `E_n = γ(2n + 1)` for `n < N`.
pub fn reduced_spectrum(p: &ReducedFockParams, n: usize) -> Vec<f64> {
    (0..n).map(|k| p.gamma * (2.0 * k as f64 + 1.0)).collect()
}

/// Eigenvector for `E_n` by back-substitution inside the invariant subspace
/// spanned by the first `n + 1` number states.
///
/// Normalized so that component 0 is one, or the first nonzero component when
/// component 0 vanishes. For `n ∈ {1, 2}` the closed-form denominators are
/// checked and a vanishing one is reported as an error.
pub fn reduced_eigenvector(p: &ReducedFockParams, n: usize, truncation: usize) -> Result<Vec<Complex64>> {
    if truncation < 3 || n >= truncation - 2 {
        return Err(domain("eigenvector index must satisfy n < N - 2"));
    }
    if n == 1 || n == 2 {
        closed_form_denominator(p, n)?;
    }
    let h = build_reduced_fock(p, truncation)?;
    let mut v = back_substitute(&h, n);
    normalize_first_nonzero(&mut v);
    Ok(v)
}

/// Closed-form eigenvectors for `n ≤ 2`, padded with zeros to `truncation`:
///
/// * `ψ₀ = |0⟩`
/// * `ψ₁ = |0⟩ + (2γ/𝔪)|1⟩`
/// * `ψ₂ = |0⟩ + 4γ𝔪/(𝔪² + 2αγ)|1⟩ + 4√2γ²/(𝔪² + 2αγ)|2⟩`
pub fn closed_form_eigenvector(p: &ReducedFockParams, n: usize, truncation: usize) -> Result<Vec<Complex64>> {
    if n > 2 {
        return Err(domain("closed forms are available for n <= 2"));
    }
    if truncation <= n {
        return Err(domain("truncation too small for requested eigenvector"));
    }
    let mut v = alloc::vec![Complex64::zero(); truncation];
    v[0] = c64(1.0, 0.0);
    let g = c64(p.gamma, 0.0);
    let m = p.mfr();
    match n {
        0 => {}
        1 => {
            closed_form_denominator(p, 1)?;
            v[1] = g * 2.0 / m;
        }
        _ => {
            let d = closed_form_denominator(p, 2)?;
            v[1] = g * m * 4.0 / d;
            v[2] = g * g * (4.0 * 2f64.sqrt()) / d;
        }
    }
    Ok(v)
}

/// `𝔪` for `n = 1`, `𝔪² + 2αγ` for `n = 2`; errors when below
/// [`DENOMINATOR_TOL`].
fn closed_form_denominator(p: &ReducedFockParams, n: usize) -> Result<Complex64> {
    let m = p.mfr();
    let (name, d) = if n == 1 { ("m", m) } else { ("m^2 + 2*alpha*gamma", m * m + 2.0 * p.alpha * p.gamma) };
    if d.norm() < DENOMINATOR_TOL {
        return Err(Error::DegenerateDenominator { name, magnitude: d.norm() });
    }
    Ok(d)
}

fn back_substitute(h: &ComplexMatrix, n: usize) -> Vec<Complex64> {
    let dim = h.dim();
    let e = h[(n, n)];
    let mut v = alloc::vec![Complex64::zero(); dim];
    v[n] = c64(1.0, 0.0);
    for i in (0..n).rev() {
        let s: Complex64 = (i + 1..=n).map(|j| h[(i, j)] * v[j]).sum();
        v[i] = -s / (h[(i, i)] - e);
    }
    v
}

fn normalize_first_nonzero(v: &mut [Complex64]) {
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(pivot) = v.iter().copied().find(|z| z.norm() > 1e-14 * max) {
        for z in v.iter_mut() {
            *z /= pivot;
        }
    }
}

/// Quasi-Hermiticity certificate for the interior `(N − 2)`-block: the
/// back-substituted eigenvectors (unit-normalized) form `S`, `Λ = diag(γ(2n+1))`.
pub fn quasi_hermitian_check(p: &ReducedFockParams, truncation: usize) -> Result<QuasiHermitianCertificate> {
    if truncation < 3 {
        return Err(domain("truncation must be at least 3"));
    }
    let k = truncation - 2;
    let h = build_reduced_fock(p, truncation)?.leading_block(k)?;
    let mut s = ComplexMatrix::zeros(k);
    for col in 0..k {
        let v = back_substitute(&h, col);
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for row in 0..k {
            s[(row, col)] = v[row] / norm;
        }
    }
    classify::certify_with_basis(&h, &s, &reduced_spectrum(p, k), 1e-8)
}
