//! One-dimensional standard Hamiltonians `(p − a(x))²/2m + v(x)` with complex
//! potentials on one `2ℓ` cell, and the half-cell translation `Q = e^{iℓp/ħ}`.
//!
//! The cell `[0, 2ℓ)` is sampled on an even grid of `M` points with periodic
//! boundary conditions. `p` and `p²` are realized by Fourier spectral
//! differentiation, i.e. as circulant matrices, so the translation by `ℓ`
//! (a cyclic shift by `M/2`) commutes with the kinetic term exactly and every
//! residual isolates parity violations of the potentials.
//!
//! Angular utilities sample functions of `θ` and test the analogous
//! conditions under a rotation by `φ`.

use alloc::{string::String, vec, vec::Vec};
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::{
    c64,
    classify::{self, SpectrumClassification},
    eigen,
    error::{domain, Error, Result},
    matrix::ComplexMatrix,
    symmetry::{self, AntilinearSymmetry, BasisConvention},
};

/// Maximum number of Fourier modes per series.
pub const MAX_MODES: usize = 64;

/// Parity residual above which a family's precondition counts as violated.
pub const PARITY_TOL: f64 = 1e-8;

/// Symmetry residual required for a family to verify.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Uniform grid on `[0, 2ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    points: usize,
    ell: f64,
    mass: f64,
    hbar: f64,
}

impl GridSpec {
    /// Validates `M` even and `≥ 8`, positive `ℓ`, `m`, `ħ`.
    pub fn new(points: usize, ell: f64, mass: f64, hbar: f64) -> Result<Self> {
        if points < 8 || !points.is_multiple_of(2) {
            return Err(domain("grid needs an even number of points, at least 8"));
        }
        for (name, x) in [("ell", ell), ("mass", mass), ("hbar", hbar)] {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::Domain(alloc::format!("{name} must be positive and finite")));
            }
        }
        Ok(Self { points, ell, mass, hbar })
    }

    /// Grid with `ħ = 1`, `m = 1/2` (so the kinetic term is `p²`).
    pub fn with_default_units(points: usize, ell: f64) -> Result<Self> {
        Self::new(points, ell, 0.5, 1.0)
    }

    /// Number of grid points `M`.
    pub fn points(&self) -> usize {
        self.points
    }

    /// Half-period `ℓ`.
    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Mass `m`.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// `ħ`.
    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Index shift corresponding to a translation by `ℓ`.
    pub fn half_shift(&self) -> usize {
        self.points / 2
    }

    /// Nodes `x_j = 2ℓ·j/M`.
    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|j| 2.0 * self.ell * j as f64 / self.points as f64).collect()
    }

    /// Grid wave numbers `k_n = πn/ℓ`, `n = −M/2, …, M/2 − 1`.
    pub fn wave_numbers(&self) -> Vec<f64> {
        let half = (self.points / 2) as i64;
        (-half..half).map(|n| PI * n as f64 / self.ell).collect()
    }
}

/// Which Fourier series carries the real part of a potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assignment {
    /// Real part `ℓ`-periodic, imaginary part `ℓ`-antiperiodic.
    RealPeriodic,
    /// Real part `ℓ`-antiperiodic, imaginary part `ℓ`-periodic.
    RealAntiperiodic,
}

/// A complex potential given by an `ℓ`-periodic series on frequencies
/// `2nπ/ℓ` and an `ℓ`-antiperiodic series on `(2n+1)π/ℓ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPotentialSpec {
    ell: f64,
    periodic: Vec<(f64, f64)>,
    antiperiodic: Vec<(f64, f64)>,
    assignment: Assignment,
}

impl FourierPotentialSpec {
    /// `periodic[n] = (c₁ₙ, d₁ₙ)` multiply `cos, sin(2nπx/ℓ)`;
    /// `antiperiodic[n] = (c₂ₙ, d₂ₙ)` multiply `cos, sin((2n+1)πx/ℓ)`.
    pub fn new(
        ell: f64,
        periodic: Vec<(f64, f64)>,
        antiperiodic: Vec<(f64, f64)>,
        assignment: Assignment,
    ) -> Result<Self> {
        if !(ell.is_finite() && ell > 0.0) {
            return Err(domain("ell must be positive and finite"));
        }
        if periodic.len() > MAX_MODES || antiperiodic.len() > MAX_MODES {
            return Err(domain("at most 64 Fourier modes per series"));
        }
        if !periodic.iter().chain(&antiperiodic).all(|(c, d)| c.is_finite() && d.is_finite()) {
            return Err(domain("Fourier coefficients must be finite"));
        }
        Ok(Self { ell, periodic, antiperiodic, assignment })
    }

    /// Half-period `ℓ`.
    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// `(c₁ₙ, d₁ₙ)`.
    pub fn periodic(&self) -> &[(f64, f64)] {
        &self.periodic
    }

    /// `(c₂ₙ, d₂ₙ)`.
    pub fn antiperiodic(&self) -> &[(f64, f64)] {
        &self.antiperiodic
    }

    /// Real/imaginary assignment.
    pub fn assignment(&self) -> Assignment {
        self.assignment
    }

    fn periodic_at(&self, x: f64) -> f64 {
        self.periodic
            .iter()
            .enumerate()
            .map(|(n, &(c, d))| {
                let t = 2.0 * n as f64 * PI * x / self.ell;
                c * t.cos() + d * t.sin()
            })
            .sum()
    }

    fn antiperiodic_at(&self, x: f64) -> f64 {
        self.antiperiodic
            .iter()
            .enumerate()
            .map(|(n, &(c, d))| {
                let t = (2 * n + 1) as f64 * PI * x / self.ell;
                c * t.cos() + d * t.sin()
            })
            .sum()
    }

    /// Potential value at `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        let (p, a) = (self.periodic_at(x), self.antiperiodic_at(x));
        match self.assignment {
            Assignment::RealPeriodic => c64(p, a),
            Assignment::RealAntiperiodic => c64(a, p),
        }
    }
}

/// Samples `spec` at the grid nodes.
pub fn sample_potential(spec: &FourierPotentialSpec, grid: &GridSpec) -> Vec<Complex64> {
    grid.nodes().into_iter().map(|x| spec.eval(x)).collect()
}

/// `λ₁ sin(2kx) + iλ₂ cos(5kx)`: real part `ℓ`-periodic and imaginary part
/// `ℓ`-antiperiodic when `kℓ = π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinCosPreset {
    /// Amplitude of the real sine.
    pub lambda1: f64,
    /// Amplitude of the imaginary cosine.
    pub lambda2: f64,
    /// Wave number `k`.
    pub k: f64,
}

impl SinCosPreset {
    /// `λ₁ = 1`, `λ₂ = 1/2`, `k = 1`.
    pub const DEFAULT: Self = Self { lambda1: 1.0, lambda2: 0.5, k: 1.0 };

    /// Half-period matching the wave number, `ℓ = π/k`.
    pub fn ell(&self) -> f64 {
        PI / self.k
    }

    /// Value at `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        c64(self.lambda1 * (2.0 * self.k * x).sin(), self.lambda2 * (5.0 * self.k * x).cos())
    }
}

/// A potential source: nothing, a Fourier specification, or a directly
/// evaluated preset.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    /// Identically zero.
    Zero,
    /// Fourier series.
    Fourier(FourierPotentialSpec),
    /// `λ₁ sin(2kx) + iλ₂ cos(5kx)`.
    SinCos(SinCosPreset),
    /// Raw samples on the grid.
    Samples(Vec<Complex64>),
}

impl Potential {
    /// Samples at the grid nodes.
    pub fn sample(&self, grid: &GridSpec) -> Result<Vec<Complex64>> {
        match self {
            Self::Zero => Ok(vec![Complex64::zero(); grid.points()]),
            Self::Fourier(spec) => Ok(sample_potential(spec, grid)),
            Self::SinCos(p) => Ok(grid.nodes().into_iter().map(|x| p.eval(x)).collect()),
            Self::Samples(s) => {
                if s.len() != grid.points() {
                    return Err(Error::DimensionMismatch { expected: grid.points(), found: s.len() });
                }
                Ok(s.clone())
            }
        }
    }
}

/// Behaviour of a function under `x → x − ℓ` (or `θ → θ − φ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `f(x − ℓ) = f(x)`.
    Periodic,
    /// `f(x − ℓ) = −f(x)`.
    Antiperiodic,
    /// Real part periodic, imaginary part antiperiodic: `f(x − ℓ) = f(x)*`.
    RealPeriodicImagAntiperiodic,
    /// Real part antiperiodic, imaginary part periodic: `f(x − ℓ) = −f(x)*`.
    RealAntiperiodicImagPeriodic,
}

impl Parity {
    fn image(self, f: Complex64) -> Complex64 {
        match self {
            Self::Periodic => f,
            Self::Antiperiodic => -f,
            Self::RealPeriodicImagAntiperiodic => f.conj(),
            Self::RealAntiperiodicImagPeriodic => -f.conj(),
        }
    }
}

fn shifted_defect(samples: &[Complex64], shift: usize, kind: Parity) -> f64 {
    let m = samples.len();
    (0..m)
        .map(|j| (samples[(j + m - shift) % m] - kind.image(samples[j])).norm())
        .fold(0.0, f64::max)
}

/// `max_j |f(x_j − ℓ) − image(f(x_j))|`, with the shift by `M/2` nodes
/// wrapping around the cell.
pub fn check_parity(samples: &[Complex64], grid: &GridSpec, kind: Parity) -> Result<f64> {
    if samples.len() != grid.points() {
        return Err(Error::DimensionMismatch { expected: grid.points(), found: samples.len() });
    }
    Ok(shifted_defect(samples, grid.half_shift(), kind))
}

/// Circulant matrix with first column `c`: `C[j][l] = c[(j − l) mod M]`.
fn circulant(c: &[Complex64]) -> ComplexMatrix {
    let m = c.len();
    ComplexMatrix::from_fn(m, |j, l| c[(j + m - l) % m])
}

/// Spectral momentum `p = −iħ∂ₓ` (Nyquist mode dropped, so `p` is Hermitian)
/// and kinetic operator `p²` (Nyquist mode kept, eigenvalues `ħ²k_n²`).
pub fn momentum_operators(grid: &GridSpec) -> (ComplexMatrix, ComplexMatrix) {
    let m = grid.points();
    let half = m / 2;
    let kstep = PI / grid.ell();
    let hbar = grid.hbar();
    let angle = |n: usize, d: usize| 2.0 * PI * ((n * d) % m) as f64 / m as f64;

    let mut c1 = vec![Complex64::zero(); m];
    let mut c2 = vec![Complex64::zero(); m];
    for d in 0..=half {
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        for n in 1..half {
            let k = kstep * n as f64;
            let t = angle(n, d);
            s1 += k * t.sin();
            s2 += k * k * t.cos();
        }
        let k_nyq = kstep * half as f64;
        let nyq = if d % 2 == 0 { 1.0 } else { -1.0 };
        let v1 = 2.0 * hbar * s1 / m as f64;
        let v2 = hbar * hbar * (2.0 * s2 + k_nyq * k_nyq * nyq) / m as f64;
        c1[d] = c64(0.0, v1);
        c2[d] = c64(v2, 0.0);
        if d != 0 && d != half {
            c1[m - d] = c64(0.0, -v1);
            c2[m - d] = c64(v2, 0.0);
        }
    }
    c1[0] = Complex64::zero();
    c1[half] = Complex64::zero();
    (circulant(&c1), circulant(&c2))
}

/// Matrix of `(p − a)²/2m + v` expanded as `(p² − pa − ap + a²)/2m + v`.
pub fn build_hamiltonian(v: &[Complex64], a: &[Complex64], grid: &GridSpec) -> Result<ComplexMatrix> {
    let m = grid.points();
    for len in [v.len(), a.len()] {
        if len != m {
            return Err(Error::DimensionMismatch { expected: m, found: len });
        }
    }
    let (p, p2) = momentum_operators(grid);
    let inv2m = 1.0 / (2.0 * grid.mass());
    let mut h = ComplexMatrix::zeros(m);
    for j in 0..m {
        for l in 0..m {
            let cross = p[(j, l)] * (a[l] + a[j]);
            let mut z = (p2[(j, l)] - cross) * inv2m;
            if j == l {
                z += a[j] * a[j] * inv2m + v[j];
            }
            h[(j, l)] = z;
        }
    }
    Ok(h)
}

/// Translation by `ℓ`: `(Qψ)(x_j) = ψ(x_j + ℓ)`, the cyclic shift by `M/2`.
pub fn translation_operator(grid: &GridSpec) -> AntilinearSymmetry {
    let m = grid.points();
    let s = grid.half_shift();
    let q = ComplexMatrix::from_fn(m, |j, l| if l == (j + s) % m { c64(1.0, 0.0) } else { Complex64::zero() });
    AntilinearSymmetry::new(q, BasisConvention::PositionGrid).expect("permutation matrices are invertible")
}

/// Which antilinear structure a 1D family is meant to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Q⁻¹`-weak pseudo-Hermiticity: both potentials real-periodic,
    /// imaginary-antiperiodic.
    WeakPseudoHermitian,
    /// `QT`-symmetry: `v` as above, `a` real-antiperiodic, imaginary-periodic.
    QtSymmetric,
}

impl Family {
    /// Required parities of `(v, a)`.
    pub fn required_parity(self) -> (Parity, Parity) {
        match self {
            Self::WeakPseudoHermitian => (Parity::RealPeriodicImagAntiperiodic, Parity::RealPeriodicImagAntiperiodic),
            Self::QtSymmetric => (Parity::RealPeriodicImagAntiperiodic, Parity::RealAntiperiodicImagPeriodic),
        }
    }
}

/// Outcome of verifying a 1D family.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    /// Family that was checked.
    pub family: Family,
    /// Parity defect of `v`.
    pub scalar_parity: f64,
    /// Parity defect of `a`.
    pub vector_parity: f64,
    /// `QT` residual.
    pub qt: f64,
    /// Weak pseudo-Hermiticity residual.
    pub wph: f64,
    /// `[H, Q²]` residual.
    pub q_squared: f64,
    /// Transpose-symmetry defect.
    pub symmetric_defect: f64,
    /// Sorted eigenvalues.
    pub eigenvalues: Vec<Complex64>,
    /// Pseudo-reality verdict.
    pub classification: SpectrumClassification,
    /// Human-readable precondition violations, empty when none.
    pub violations: Vec<String>,
}

impl FamilyReport {
    /// Residual of the identity the family is built to satisfy.
    pub fn target_residual(&self) -> f64 {
        match self.family {
            Family::WeakPseudoHermitian => self.wph,
            Family::QtSymmetric => self.qt,
        }
    }

    /// No violations, target residual within [`SYMMETRY_TOL`], pseudo-real.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.target_residual() <= SYMMETRY_TOL
            && self.classification.verdict.is_pseudo_real()
    }
}

/// Builds `H`, checks the parities required by `family`, and evaluates every
/// residual and the spectrum.
pub fn verify_family(family: Family, v: &Potential, a: &Potential, grid: &GridSpec) -> Result<FamilyReport> {
    let vs = v.sample(grid)?;
    let as_ = a.sample(grid)?;
    let (pv, pa) = family.required_parity();
    let scalar_parity = check_parity(&vs, grid, pv)?;
    let vector_parity = check_parity(&as_, grid, pa)?;
    let mut violations = Vec::new();
    if scalar_parity > PARITY_TOL {
        violations.push(alloc::format!("scalar potential violates {pv:?} (defect {scalar_parity:e})"));
    }
    if vector_parity > PARITY_TOL {
        violations.push(alloc::format!("vector potential violates {pa:?} (defect {vector_parity:e})"));
    }

    let h = build_hamiltonian(&vs, &as_, grid)?;
    let q = translation_operator(grid);
    let ed = eigen::eigendecompose(&h)?;
    let classification = classify::classify_decomposition(&ed);
    let report = FamilyReport {
        family,
        scalar_parity,
        vector_parity,
        qt: symmetry::qt_residual(&h, &q)?,
        wph: symmetry::wph_residual(&h, &q)?,
        q_squared: symmetry::q_squared_commutator_residual(&h, &q)?,
        symmetric_defect: symmetry::symmetric_defect(&h),
        eigenvalues: ed.eigenvalues,
        classification,
        violations,
    };
    Ok(report)
}

/// [`verify_family`] for the weakly pseudo-Hermitian family.
pub fn verify_wph_family(v: &Potential, a: &Potential, grid: &GridSpec) -> Result<FamilyReport> {
    verify_family(Family::WeakPseudoHermitian, v, a, grid)
}

/// [`verify_family`] for the `QT`-symmetric family.
pub fn verify_qt_family(v: &Potential, a: &Potential, grid: &GridSpec) -> Result<FamilyReport> {
    verify_family(Family::QtSymmetric, v, a, grid)
}

/// Samples of a function of `θ` on a uniform grid over `[0, 2π)` together
/// with a rotation angle `φ` that maps the grid onto itself.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularSampleField {
    samples: Vec<Complex64>,
    phi: f64,
    shift: usize,
}

impl AngularSampleField {
    /// Validates that `φ ∈ (0, 2π)` moves the grid by a whole number of points.
    pub fn new(samples: Vec<Complex64>, phi: f64) -> Result<Self> {
        let m = samples.len();
        if m < 2 || !m.is_multiple_of(2) {
            return Err(domain("angular grid needs an even number of points"));
        }
        if !(phi > 0.0 && phi < 2.0 * PI) {
            return Err(domain("rotation angle must lie in (0, 2pi)"));
        }
        let steps = phi * m as f64 / (2.0 * PI);
        let shift = steps.round();
        if (steps - shift).abs() > 1e-9 || shift < 1.0 {
            return Err(domain("rotation angle is not commensurate with the angular grid"));
        }
        Ok(Self { samples, phi, shift: shift as usize })
    }

    /// Number of samples.
    pub fn theta_points(&self) -> usize {
        self.samples.len()
    }

    /// Rotation angle `φ`.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Frequency `ω = π/φ` whose even multiples are `φ`-periodic and odd
    /// multiples `φ`-antiperiodic.
    pub fn omega(&self) -> f64 {
        PI / self.phi
    }

    /// Samples.
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }
}

/// Angular nodes `θ_j = 2πj/M`.
pub fn theta_grid(points: usize) -> Vec<f64> {
    (0..points).map(|j| 2.0 * PI * j as f64 / points as f64).collect()
}

/// Max-norm defect of `kind` under `θ → θ − φ`.
pub fn check_angular_conditions(field: &AngularSampleField, kind: Parity) -> f64 {
    shifted_defect(&field.samples, field.shift, kind)
}

/// Angular coefficients `(eₙ, fₙ, gₙ, hₙ)` at fixed `(ρ, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AngularCoefficients {
    /// `cos(2nωθ)` real coefficient.
    pub e: f64,
    /// `sin(2nωθ)` real coefficient.
    pub f: f64,
    /// `cos((2n+1)ωθ)` imaginary coefficient.
    pub g: f64,
    /// `sin((2n+1)ωθ)` imaginary coefficient.
    pub h: f64,
}

/// `Σₙ [eₙ cos 2nωθ + fₙ sin 2nωθ + i(gₙ cos (2n+1)ωθ + hₙ sin (2n+1)ωθ)]`.
pub fn sample_symmetric_potential(coeffs: &[AngularCoefficients], omega: f64, theta: &[f64]) -> Result<Vec<Complex64>> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(domain("omega must be positive"));
    }
    Ok(theta
        .iter()
        .map(|&t| {
            coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let even = 2.0 * n as f64 * omega * t;
                    let odd = (2 * n + 1) as f64 * omega * t;
                    c64(c.e * even.cos() + c.f * even.sin(), c.g * odd.cos() + c.h * odd.sin())
                })
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: usize, ell: f64) -> GridSpec {
        GridSpec::with_default_units(m, ell).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(7, 1.0, 0.5, 1.0).is_err());
        assert!(GridSpec::new(6, 1.0, 0.5, 1.0).is_err());
        assert!(GridSpec::new(8, -1.0, 0.5, 1.0).is_err());
        assert!(GridSpec::new(8, 1.0, 0.0, 1.0).is_err());
        assert_eq!(grid(8, 1.0).half_shift(), 4);
    }

    #[test]
    fn sampling_examples() {
        let g = grid(16, 1.0);
        let xs = g.nodes();
        let cos1 = FourierPotentialSpec::new(1.0, vec![(0.0, 0.0), (1.0, 0.0)], vec![], Assignment::RealPeriodic).unwrap();
        for (x, z) in xs.iter().zip(sample_potential(&cos1, &g)) {
            assert!((z - c64((2.0 * PI * x).cos(), 0.0)).norm() < 1e-14);
        }
        let sin0 = FourierPotentialSpec::new(1.0, vec![], vec![(0.0, 1.0)], Assignment::RealAntiperiodic).unwrap();
        for (x, z) in xs.iter().zip(sample_potential(&sin0, &g)) {
            assert!((z - c64((PI * x).sin(), 0.0)).norm() < 1e-14);
        }
        assert!(FourierPotentialSpec::new(1.0, vec![(1.0, 0.0); 65], vec![], Assignment::RealPeriodic).is_err());
    }

    #[test]
    fn preset_matches_fourier_encoding() {
        // With kℓ = π, sin(2kx) is periodic mode 1 and cos(5kx) antiperiodic mode 2.
        let p = SinCosPreset { lambda1: 0.7, lambda2: -0.3, k: 1.0 };
        let g = grid(64, p.ell());
        let spec = FourierPotentialSpec::new(p.ell(), vec![(0.0, 0.0), (0.0, 0.7)], vec![(0.0, 0.0), (0.0, 0.0), (-0.3, 0.0)], Assignment::RealPeriodic)
            .unwrap();
        let a = Potential::SinCos(p).sample(&g).unwrap();
        let b = sample_potential(&spec, &g);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-12);
        }
        assert!(check_parity(&a, &g, Parity::RealPeriodicImagAntiperiodic).unwrap() < 1e-12);
    }

    #[test]
    fn parity_examples() {
        let g = grid(32, 1.0);
        let f = |w: f64| -> Vec<Complex64> { g.nodes().iter().map(|x| c64((w * x).cos(), 0.0)).collect() };
        assert!(check_parity(&f(2.0 * PI), &g, Parity::Periodic).unwrap() < 1e-12);
        assert!(check_parity(&f(PI), &g, Parity::Antiperiodic).unwrap() < 1e-12);
        assert!((check_parity(&f(PI), &g, Parity::Periodic).unwrap() - 2.0).abs() < 1e-12);
        assert!(check_parity(&f(PI)[..10], &g, Parity::Periodic).is_err());
    }

    #[test]
    fn free_kinetic_spectrum() {
        let g = GridSpec::new(16, 1.3, 0.8, 1.1).unwrap();
        let zero = vec![Complex64::zero(); 16];
        let h = build_hamiltonian(&zero, &zero, &g).unwrap();
        let mut want: Vec<f64> = g.wave_numbers().iter().map(|k| (1.1 * k).powi(2) / 1.6).collect();
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let got = eigen::eigenvalues(&h).unwrap();
        for (z, w) in got.iter().zip(&want) {
            assert!((z - c64(*w, 0.0)).norm() < 1e-10 * want[15]);
        }
        assert_eq!(symmetry::symmetric_defect(&h), 0.0);

        let shifted = build_hamiltonian(&vec![c64(2.5, 0.0); 16], &zero, &g).unwrap();
        let got2 = eigen::eigenvalues(&shifted).unwrap();
        for (a, b) in got.iter().zip(&got2) {
            assert!((a + c64(2.5, 0.0) - b).norm() < 1e-10 * want[15]);
        }
    }

    #[test]
    fn translation_operator_examples() {
        let g = grid(8, 1.0);
        let q = translation_operator(&g);
        assert_eq!(q.q()[(0, 4)], c64(1.0, 0.0));
        assert_eq!(q.q()[(5, 1)], c64(1.0, 0.0));
        assert_eq!(q.q() * q.q(), ComplexMatrix::identity(8));

        let x: Vec<Complex64> = g.nodes().iter().map(|&x| c64(x, 0.0)).collect();
        let conj = &(&q.q().transpose() * &ComplexMatrix::from_diag(&x)) * q.q();
        for j in 0..8 {
            assert_eq!(conj[(j, j)], x[(j + 4) % 8]);
        }

        let (p, p2) = momentum_operators(&g);
        assert_eq!(p2.commutator(q.q()).unwrap().frobenius_norm(), 0.0);
        assert_eq!(p.commutator(q.q()).unwrap().frobenius_norm(), 0.0);
        assert_eq!((&p - &p.adjoint()).frobenius_norm(), 0.0);
    }

    #[test]
    fn preset_family_verifies() {
        let p = SinCosPreset::DEFAULT;
        let g = grid(64, p.ell());
        let r = verify_wph_family(&Potential::SinCos(p), &Potential::Zero, &g).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.wph <= 1e-10 && r.qt <= 1e-10);
        assert!(r.q_squared <= 1e-12);
        assert!(r.passed());
    }

    #[test]
    fn hermitian_when_imaginary_part_vanishes() {
        let p = SinCosPreset { lambda2: 0.0, ..SinCosPreset::DEFAULT };
        let g = grid(32, p.ell());
        let r = verify_wph_family(&Potential::SinCos(p), &Potential::Zero, &g).unwrap();
        assert_eq!(r.classification.verdict, classify::Verdict::AllReal);
    }

    #[test]
    fn broken_parity_is_flagged() {
        // Imaginary part on a periodic mode.
        let spec = FourierPotentialSpec::new(1.0, vec![(0.0, 0.0), (0.8, 0.0)], vec![], Assignment::RealAntiperiodic).unwrap();
        let g = grid(32, 1.0);
        let r = verify_wph_family(&Potential::Fourier(spec), &Potential::Zero, &g).unwrap();
        assert!(!r.violations.is_empty());
        assert!(r.wph > 1e-4);
        assert!(!r.passed());
    }

    #[test]
    fn vector_potential_parities_select_family() {
        let g = grid(32, 1.0);
        let v = Potential::Fourier(
            FourierPotentialSpec::new(1.0, vec![(0.2, 0.0), (0.5, -0.1)], vec![(0.3, 0.4)], Assignment::RealPeriodic).unwrap(),
        );
        let a_anti = Potential::Fourier(FourierPotentialSpec::new(1.0, vec![], vec![(0.4, 0.1)], Assignment::RealPeriodic).unwrap());
        let a_anti = Potential::Samples(a_anti.sample(&g).unwrap().iter().map(|z| c64(z.im, 0.0)).collect());
        let r = verify_qt_family(&v, &a_anti, &g).unwrap();
        assert!(r.qt <= 1e-10 && r.wph > 1e-6, "{} {}", r.qt, r.wph);

        let a_per = Potential::Fourier(FourierPotentialSpec::new(1.0, vec![(0.0, 0.0), (0.3, 0.2)], vec![], Assignment::RealPeriodic).unwrap());
        let r = verify_wph_family(&v, &a_per, &g).unwrap();
        assert!(r.wph <= 1e-10 && r.qt > 1e-6, "{} {}", r.qt, r.wph);
    }

    #[test]
    fn angular_examples() {
        let m = 24;
        let phi = PI / 2.0;
        let theta = theta_grid(m);
        let omega = PI / phi;
        let field = |w: f64| {
            AngularSampleField::new(theta.iter().map(|t| c64((w * t).cos(), 0.0)).collect(), phi).unwrap()
        };
        assert!(check_angular_conditions(&field(2.0 * omega), Parity::Periodic) < 1e-12);
        assert!(check_angular_conditions(&field(3.0 * omega), Parity::Antiperiodic) < 1e-12);
        assert!((check_angular_conditions(&field(omega), Parity::Periodic) - 2.0).abs() < 1e-12);
        assert_eq!(field(omega).omega(), omega);
        assert!(AngularSampleField::new(vec![Complex64::zero(); 24], 1.0).is_err());
    }

    #[test]
    fn symmetric_angular_potential() {
        let theta = theta_grid(12);
        let only_e0 = [AngularCoefficients { e: 1.0, ..Default::default() }];
        assert!(sample_symmetric_potential(&only_e0, 1.0, &theta).unwrap().iter().all(|&z| z == c64(1.0, 0.0)));

        let only_g0 = [AngularCoefficients { g: 1.0, ..Default::default() }];
        for (t, z) in theta.iter().zip(sample_symmetric_potential(&only_g0, 1.0, &theta).unwrap()) {
            assert!((z - c64(0.0, t.cos())).norm() < 1e-15);
        }

        // e₁ = 1, h₀ = 2, ω = 1: cos 2θ + 2i sin θ.
        let coeffs = [AngularCoefficients { h: 2.0, ..Default::default() }, AngularCoefficients { e: 1.0, ..Default::default() }];
        let s = sample_symmetric_potential(&coeffs, 1.0, &theta).unwrap();
        for (t, z) in theta.iter().zip(&s) {
            assert!((z - c64((2.0 * t).cos(), 2.0 * t.sin())).norm() < 1e-14);
        }
        let f = AngularSampleField::new(s, PI).unwrap();
        assert!(check_angular_conditions(&f, Parity::RealPeriodicImagAntiperiodic) < 1e-12);
    }
}
