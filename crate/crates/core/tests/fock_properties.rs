//! Reduced Fock model: exact structure, eigenvectors and symmetry witnesses.

use antilinear_core::{
    c64, eigen,
    fock::{self, ReducedFockParams},
    symmetry, Complex64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_params(r: &mut ChaCha8Rng) -> ReducedFockParams {
    loop {
        let gamma = r.random_range(0.25..2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 };
        let q = r.random_range(0.25..2.0) * if r.random_bool(0.5) { 1.0 } else { -1.0 };
        let p = ReducedFockParams::new(r.random_range(-2.0..2.0), gamma, r.random_range(-2.0..2.0), q).unwrap();
        let m = p.mfr();
        if m.norm() > 0.1 && (m * m + 2.0 * p.alpha * p.gamma).norm() > 0.1 {
            return p;
        }
    }
}

#[test]
fn reduced_hamiltonian_is_exactly_upper_triangular() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for n in [3, 8, 33, 64] {
        let h = fock::build_reduced_fock(&random_params(&mut r), n).unwrap();
        for i in 0..n {
            for j in 0..i {
                assert_eq!(h[(i, j)], Complex64::new(0.0, 0.0));
            }
        }
    }
}

#[test]
fn leading_spans_are_invariant() {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    let n = 20;
    let h = fock::build_reduced_fock(&random_params(&mut r), n).unwrap();
    for k in 0..n - 2 {
        for col in 0..=k {
            for row in k + 1..n {
                assert_eq!(h[(row, col)], Complex64::new(0.0, 0.0));
            }
        }
    }
}

#[test]
fn closed_form_eigenvectors_match_back_substitution() {
    let mut r = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let p = random_params(&mut r);
        for n in 0..=2 {
            let closed = fock::closed_form_eigenvector(&p, n, 12).unwrap();
            let solved = fock::reduced_eigenvector(&p, n, 12).unwrap();
            for (a, b) in closed.iter().zip(&solved) {
                assert!((a - b).norm() <= 1e-10 * a.norm().max(1.0), "{p:?} n={n}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn back_substituted_vectors_are_eigenvectors() {
    let mut r = ChaCha8Rng::seed_from_u64(14);
    let p = random_params(&mut r);
    let n = 16;
    let h = fock::build_reduced_fock(&p, n).unwrap();
    for k in 0..n - 2 {
        let v = fock::reduced_eigenvector(&p, k, n).unwrap();
        let hv = h.mul_vec(&v).unwrap();
        let e = c64(p.gamma * (2 * k + 1) as f64, 0.0);
        let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (a, b) in hv.iter().zip(&v) {
            assert!((a - e * b).norm() <= 1e-9 * scale * h.max_abs());
        }
    }
}

#[test]
fn spectrum_is_real_and_equally_spaced() {
    let mut r = ChaCha8Rng::seed_from_u64(15);
    let p = random_params(&mut r);
    let eigs = eigen::eigenvalues(&fock::build_reduced_fock(&p, 24).unwrap()).unwrap();
    let want = fock::reduced_spectrum(&p, 24);
    for e in &eigs {
        assert!(want.iter().any(|w| (e - c64(*w, 0.0)).norm() <= 1e-8));
    }
}

#[test]
fn interior_qt_residual_vanishes() {
    let mut r = ChaCha8Rng::seed_from_u64(16);
    for n in [8, 16, 32] {
        let p = random_params(&mut r);
        let h = fock::build_reduced_fock(&p, n).unwrap();
        let s = fock::fock_symmetry(p.qfr(), n).unwrap();
        assert!(fock::projected_qt_residual(&h, &s, n - 2).unwrap() <= 1e-10);
    }
}

#[test]
fn pt_witness_separates_mu() {
    let par = fock::parity_matrix(12);
    for mu in [-2.0, 0.5, 2.0] {
        let p = ReducedFockParams::new(1.0, 1.0, mu, 1.0).unwrap();
        assert!(symmetry::pt_residual(&fock::build_reduced_fock(&p, 12).unwrap(), &par).unwrap() > 1e-3);
    }
    let p = ReducedFockParams::new(-0.7, 1.5, 0.0, 0.3).unwrap();
    assert!(symmetry::pt_residual(&fock::build_reduced_fock(&p, 12).unwrap(), &par).unwrap() <= 1e-12);
}
