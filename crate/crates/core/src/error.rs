use alloc::string::String;

/// Errors raised by model construction, decompositions and certificates.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Operand shapes do not agree.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// Required dimension.
        expected: usize,
        /// Dimension that was supplied.
        found: usize,
    },
    /// An input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// The QR iteration did not converge within its iteration budget.
    #[error("eigensolver failed to converge for a {dim}x{dim} matrix")]
    NonConvergence {
        /// Dimension of the offending matrix.
        dim: usize,
    },
    /// A matrix that must be inverted is numerically singular.
    #[error("matrix is numerically singular")]
    Singular,
    /// No sign change of the discriminant inside the scan interval.
    #[error("no exceptional point in [{lo}, {hi}]: discriminant does not change sign")]
    ExceptionalPointNotFound {
        /// Lower end of the scan.
        lo: f64,
        /// Upper end of the scan.
        hi: f64,
    },
    /// A closed-form expression has a vanishing denominator.
    #[error("degenerate denominator in closed form: |{name}| = {magnitude:e}")]
    DegenerateDenominator {
        /// Which denominator vanished.
        name: &'static str,
        /// Its magnitude.
        magnitude: f64,
    },
    /// The eigenbasis is too ill-conditioned to certify a similarity.
    #[error("eigenbasis is ill-conditioned: cond = {cond:e}")]
    IllConditionedBasis {
        /// Estimated 2-norm condition number of the basis.
        cond: f64,
    },
    /// Quasi-Hermiticity certificate refused: input is defective.
    #[error("matrix is defective (cond = {cond:e}, min gap = {min_gap:e})")]
    Defective {
        /// Eigenvector condition number.
        cond: f64,
        /// Smallest eigenvalue separation.
        min_gap: f64,
    },
    /// Quasi-Hermiticity certificate refused: some eigenvalue is not real.
    #[error("spectrum is not real: eigenvalue with |Im| = {max_imag:e}")]
    NotRealSpectrum {
        /// Largest imaginary part found.
        max_imag: f64,
    },
    /// Reconstruction `S Λ S⁻¹` misses `H` by more than the tolerance.
    #[error("similarity reconstruction residual {residual:e} exceeds {tol:e}")]
    ReconstructionFailed {
        /// Relative reconstruction residual.
        residual: f64,
        /// Tolerance it was checked against.
        tol: f64,
    },
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
