//! Minimal dense linear algebra over any [`Real`] scalar: just the kernels the
//! rest of the crate needs (Cholesky/LU solves, symmetric eigendecomposition,
//! one-sided Jacobi SVD, small matrix exp/log, Gauss-Legendre rules).

mod dense;
mod eig;
mod expser;
mod quad;
mod svd;

pub use dense::{Cholesky, Lu, Mat};
pub use eig::{sym_eig, SymEig};
pub use expser::{mat_exp_series, mat_log_series};
pub use quad::gauss_legendre;
pub use svd::{singular_values, svd_thin, Svd};

use crate::scalar::Real;

/// ℓ² norm of a vector.
pub fn norm2<T: Real>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).sum::<T>().sqrt()
}

pub fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Spectral norm via a few rounds of power iteration on `AᵀA`. Deterministic
/// start vector; adequate for reports, not for tight assertions (use
/// [`sym_eig`] or [`svd_thin`] there).
pub fn spectral_norm_estimate<T: Real>(a: &Mat<T>, iters: usize) -> T {
    let n = a.cols();
    if n == 0 || a.rows() == 0 {
        return T::zero();
    }
    let mut v: Vec<T> = (0..n)
        .map(|i| crate::scalar::real::<T>(1.0 + (i as f64 * 0.7341).sin()))
        .collect();
    let mut sigma = T::zero();
    for _ in 0..iters {
        let av = a.apply(&v);
        let w = a.tr_apply(&av);
        let nw = norm2(&w);
        if nw == T::zero() {
            return T::zero();
        }
        sigma = norm2(&av);
        v = w.iter().map(|&x| x / nw).collect();
    }
    sigma
}
