//! Antilinear symmetries of non-Hermitian Hamiltonians.
//!
//! The crate builds finite-dimensional realizations of Hamiltonians that are
//! symmetric under an antilinear operator `Θ = QT` (with `T` entrywise complex
//! conjugation in a fixed working basis) or weakly pseudo-Hermitian with
//! respect to `Q⁻¹`, evaluates the defining operator identities as relative
//! residuals, and classifies the resulting spectra.
//!
//! * [`matrix`], [`eigen`], [`svd`]: dense complex linear algebra.
//! * [`symmetry`]: `QT`-symmetry, weak pseudo-Hermiticity and related residuals.
//! * [`twolevel`]: the explicit 2×2 families and their exceptional points.
//! * [`periodic`]: complex periodic potentials on a 1D grid with a half-cell
//!   translation as `Q`, plus sampled angular checks.
//! * [`fock`]: quadratic ladder-operator Hamiltonians in a truncated Fock space.
//! * [`classify`]: pseudo-reality verdicts, defectiveness and quasi-Hermiticity
//!   certificates.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(missing_docs, rustdoc::broken_intra_doc_links)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod eigen;
mod error;
pub mod fock;
pub mod matrix;
pub mod periodic;
pub mod svd;
pub mod symmetry;
pub mod twolevel;

pub use num_complex::Complex64;

pub use self::{
    classify::{SpectrumClassification, Verdict},
    eigen::{eigendecompose, EigenDecomposition},
    error::{Error, Result},
    matrix::ComplexMatrix,
    symmetry::AntilinearSymmetry,
};

/// Shorthand for `Complex64::new(re, im)`.
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
