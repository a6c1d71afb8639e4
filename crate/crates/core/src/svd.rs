//! Singular values by one-sided (Hestenes) Jacobi rotations.
//!
//! Used for invertibility checks and eigenbasis condition numbers, where the
//! small singular values are the ones that matter; one-sided Jacobi computes
//! them to high relative accuracy.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::matrix::ComplexMatrix;

const MAX_SWEEPS: usize = 80;

/// Singular values of `a`, in descending order.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let n = a.dim();
    // Column-major copy: cols[j] is column j.
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    let tol = f64::EPSILON * n as f64;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g == 0.0 || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Remove the phase so the pair has a real inner product, then
                // apply the real Jacobi rotation.
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                let (cp, cq) = (&mut left[p], &mut right[0]);
                for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
                    let yr = *y * phase.conj();
                    let nx = *x * c - yr * s;
                    let ny = *x * s + yr * c;
                    *x = nx;
                    *y = ny * phase;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    sv
}

/// `σ_max / σ_min`, or `∞` when `σ_min` is zero.
pub fn condition_number(a: &ComplexMatrix) -> f64 {
    let sv = singular_values(a);
    let max = sv[0];
    let min = *sv.last().unwrap_or(&0.0);
    if min.is_zero() {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Smallest singular value.
pub fn smallest_singular_value(a: &ComplexMatrix) -> f64 {
    *singular_values(a).last().unwrap_or(&0.0)
}
