//! Dense complex eigendecomposition.
//!
//! Householder reduction to upper Hessenberg form, then single-shift complex
//! QR iteration (Wilkinson shifts with periodic exceptional shifts) down to a
//! Schur form `H = Z T Zᴴ`. Right eigenvectors come from back-substitution on
//! `T`; exactly repeated diagonal entries are perturbed to `ε‖T‖` so that a
//! Jordan block yields nearly parallel vectors and therefore a huge condition
//! number instead of a division by zero.

use alloc::{vec, vec::Vec};
use core::cmp::Ordering;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::{
    error::{domain, Error, Result},
    matrix::ComplexMatrix,
    svd,
};

/// Eigenvector condition numbers above this flag a matrix as defective.
pub const DEFECT_THRESHOLD: f64 = 1e8;

/// Iterations allowed per deflated eigenvalue before giving up.
const ITERATIONS_PER_EIGENVALUE: usize = 60;

/// Eigenvalues, right eigenvectors and the eigenbasis condition number.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// All eigenvalues with multiplicity, sorted by (real, imaginary) part.
    pub eigenvalues: Vec<Complex64>,
    /// Unit-norm right eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: ComplexMatrix,
    /// 2-norm condition number of `eigenvectors` (`∞` when singular).
    pub vector_condition_number: f64,
}

impl EigenDecomposition {
    /// Dimension of the decomposed matrix.
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Whether the eigenbasis condition number exceeds [`DEFECT_THRESHOLD`].
    pub fn is_defective(&self) -> bool {
        !(self.vector_condition_number <= DEFECT_THRESHOLD)
    }

    /// Largest `‖H vᵢ − λᵢ vᵢ‖₂` over all pairs.
    pub fn max_residual(&self, h: &ComplexMatrix) -> f64 {
        (0..self.dim())
            .map(|k| {
                let v = self.eigenvectors.column(k);
                let hv = h.mul_vec(&v).expect("dimension checked at construction");
                hv.iter()
                    .zip(&v)
                    .map(|(a, b)| (a - self.eigenvalues[k] * b).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

/// Total order on complex numbers used for reporting: real part, then
/// imaginary part.
pub fn cmp_re_im(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// Eigenvalues of `h` only (same algorithm, no eigenvectors).
pub fn eigenvalues(h: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let schur = Schur::compute(h, false)?;
    let mut ev = schur.t.diagonal();
    ev.sort_by(cmp_re_im);
    Ok(ev)
}

/// Full eigendecomposition of `h`.
///
/// Defective matrices are not an error; they show up as a
/// `vector_condition_number` above [`DEFECT_THRESHOLD`].
pub fn eigendecompose(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    let n = h.dim();
    let schur = Schur::compute(h, true)?;
    let z = schur.z.expect("schur vectors requested");
    let x = triangular_eigenvectors(&schur.t);
    let mut v = &z * &x;
    for j in 0..n {
        let norm = (0..n).map(|i| v[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            for i in 0..n {
                v[(i, j)] /= norm;
            }
        }
    }

    let values = schur.t.diagonal();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp_re_im(&values[a], &values[b]).then(a.cmp(&b)));
    let eigenvalues: Vec<Complex64> = order.iter().map(|&k| values[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    let vector_condition_number = svd::condition_number(&eigenvectors);

    Ok(EigenDecomposition { eigenvalues, eigenvectors, vector_condition_number })
}

struct Schur {
    t: ComplexMatrix,
    z: Option<ComplexMatrix>,
}

impl Schur {
    fn compute(h: &ComplexMatrix, want_z: bool) -> Result<Self> {
        if !h.is_finite() {
            return Err(domain("eigendecompose needs finite entries"));
        }
        let n = h.dim();
        let mut t = h.clone();
        let mut z = want_z.then(|| ComplexMatrix::identity(n));
        hessenberg(&mut t, z.as_mut());
        qr_iterate(&mut t, z.as_mut())?;
        Ok(Self { t, z })
    }
}

/// In-place Householder reduction to upper Hessenberg form; accumulates the
/// transformation into `z` when given.
fn hessenberg(a: &mut ComplexMatrix, mut z: Option<&mut ComplexMatrix>) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    let mut v = vec![Complex64::zero(); n];
    for k in 0..n - 2 {
        let alpha = (k + 1..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        // v = x + e^{iθ}‖x‖ e₁, P = I − 2vvᴴ/(vᴴv)
        for i in 0..n {
            v[i] = if i > k { a[(i, k)] } else { Complex64::zero() };
        }
        v[k + 1] += phase * alpha;
        let vnorm2: f64 = v[k + 1..].iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // A ← P A
        for j in 0..n {
            let s: Complex64 = (k + 1..n).map(|i| v[i].conj() * a[(i, j)]).sum();
            let s = s * beta;
            for i in k + 1..n {
                a[(i, j)] -= v[i] * s;
            }
        }
        // A ← A P
        for i in 0..n {
            let s: Complex64 = (k + 1..n).map(|j| a[(i, j)] * v[j]).sum();
            let s = s * beta;
            for j in k + 1..n {
                a[(i, j)] -= s * v[j].conj();
            }
        }
        for i in k + 2..n {
            a[(i, k)] = Complex64::zero();
        }
        if let Some(z) = z.as_deref_mut() {
            for i in 0..n {
                let s: Complex64 = (k + 1..n).map(|j| z[(i, j)] * v[j]).sum();
                let s = s * beta;
                for j in k + 1..n {
                    z[(i, j)] -= s * v[j].conj();
                }
            }
        }
    }
}

/// Wilkinson shift: eigenvalue of `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let (l1, l2) = (mean + disc, mean - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Givens rotation `(c, s)` with real `c` such that
/// `[[c, s], [-s̄, c]] · [f, g]ᵀ = [r, 0]ᵀ`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64) {
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Complex64::zero());
    }
    let fnorm = f.norm();
    if fnorm == 0.0 {
        return (0.0, g.conj() / gn);
    }
    let r = fnorm.hypot(gn);
    let c = fnorm / r;
    let s = (f / fnorm) * g.conj() / r;
    (c, s)
}

fn qr_iterate(t: &mut ComplexMatrix, mut z: Option<&mut ComplexMatrix>) -> Result<()> {
    let n = t.dim();
    if n == 1 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let norm = t.frobenius_norm();
    let small = f64::MIN_POSITIVE * (n as f64 / eps);
    let mut rotations: Vec<(f64, Complex64)> = Vec::with_capacity(n);

    let mut hi = n - 1;
    let mut iter = 0usize;
    while hi > 0 {
        // Look for a negligible subdiagonal entry in the active block.
        let mut lo = hi;
        while lo > 0 {
            let sub = t[(lo, lo - 1)].norm();
            let mut scale = t[(lo - 1, lo - 1)].norm() + t[(lo, lo)].norm();
            if scale == 0.0 {
                scale = norm;
            }
            if sub <= eps * scale || sub <= small {
                t[(lo, lo - 1)] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > ITERATIONS_PER_EIGENVALUE {
            return Err(Error::NonConvergence { dim: n });
        }

        let mu = if iter.is_multiple_of(10) {
            // Exceptional shift to break cycles.
            let s = 0.75 * t[(hi, hi - 1)].re.abs()
                + if hi >= 2 { t[(hi - 1, hi - 2)].re.abs() } else { 0.0 };
            t[(hi, hi)] + Complex64::new(s, 0.0)
        } else {
            wilkinson_shift(t[(hi - 1, hi - 1)], t[(hi - 1, hi)], t[(hi, hi - 1)], t[(hi, hi)])
        };

        // Explicitly shifted QR step on the window lo..=hi, applied as a
        // similarity to the whole matrix.
        for k in lo..=hi {
            t[(k, k)] -= mu;
        }
        rotations.clear();
        for k in lo..hi {
            let (c, s) = givens(t[(k, k)], t[(k + 1, k)]);
            rotations.push((c, s));
            for j in k..n {
                let x = t[(k, j)];
                let y = t[(k + 1, j)];
                t[(k, j)] = x * c + s * y;
                t[(k + 1, j)] = -s.conj() * x + y * c;
            }
            t[(k + 1, k)] = Complex64::zero();
        }
        for (idx, &(c, s)) in rotations.iter().enumerate() {
            let k = lo + idx;
            let rows = (k + 2).min(hi + 1);
            for i in 0..rows {
                let x = t[(i, k)];
                let y = t[(i, k + 1)];
                t[(i, k)] = x * c + y * s.conj();
                t[(i, k + 1)] = -x * s + y * c;
            }
            if let Some(z) = z.as_deref_mut() {
                for i in 0..n {
                    let x = z[(i, k)];
                    let y = z[(i, k + 1)];
                    z[(i, k)] = x * c + y * s.conj();
                    z[(i, k + 1)] = -x * s + y * c;
                }
            }
        }
        for k in lo..=hi {
            t[(k, k)] += mu;
        }
    }
    // Clear rounding debris below the diagonal.
    for i in 1..n {
        for j in 0..i {
            t[(i, j)] = Complex64::zero();
        }
    }
    Ok(())
}

/// Right eigenvectors of an upper-triangular `t`, one per column.
fn triangular_eigenvectors(t: &ComplexMatrix) -> ComplexMatrix {
    let n = t.dim();
    let tnorm = t.frobenius_norm();
    let smin = (f64::EPSILON * tnorm).max(f64::MIN_POSITIVE * 1e8);
    let mut x = ComplexMatrix::zeros(n);
    let mut col = vec![Complex64::zero(); n];
    for k in 0..n {
        let lambda = t[(k, k)];
        col.iter_mut().for_each(|c| *c = Complex64::zero());
        col[k] = Complex64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let rhs: Complex64 = (i + 1..=k).map(|j| t[(i, j)] * col[j]).sum();
            let mut denom = t[(i, i)] - lambda;
            if denom.norm() < smin {
                denom = Complex64::new(smin, 0.0);
            }
            col[i] = -rhs / denom;
            let m = col[i].norm();
            if m > 1e100 {
                let inv = 1.0 / m;
                for c in col[i..=k].iter_mut() {
                    *c *= inv;
                }
            }
        }
        for i in 0..=k {
            x[(i, k)] = col[i];
        }
    }
    x
}
