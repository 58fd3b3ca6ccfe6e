use super::dense::Mat;
use crate::scalar::{real, Real};

/// Matrix exponential by scaling-and-squaring with a Taylor tail. Intended for
/// the small matrices that show up as pointwise `GL(n)` values; the lattice
/// heat semigroup goes through the symmetric eigendecomposition instead.
pub fn mat_exp_series<T: Real>(a: &Mat<T>) -> Mat<T> {
    assert!(a.is_square());
    let n = a.rows();
    let norm = a.max_abs() * real::<T>(n as f64);
    let mut squarings = 0usize;
    let mut scaled = a.clone();
    if norm > real::<T>(0.5) {
        let s = (norm.to_f64().unwrap() / 0.5).log2().ceil() as usize;
        squarings = s;
        scaled = a.scale(T::one() / real::<T>((1u64 << s.min(62)) as f64));
    }
    let mut result = Mat::identity(n);
    let mut term = Mat::identity(n);
    for k in 1..60 {
        term = term.matmul(&scaled).scale(T::one() / real::<T>(k as f64));
        result = result.add(&term);
        if term.max_abs() <= T::epsilon() * result.max_abs() {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    result
}

/// Principal matrix logarithm by the Mercator series; requires
/// `‖a − I‖ < 1` and is the route the approximation family is allowed to use
/// (callers enforce the `≤ 1/2` radius before getting here).
pub fn mat_log_series<T: Real>(a: &Mat<T>) -> Option<Mat<T>> {
    assert!(a.is_square());
    let n = a.rows();
    let x = a.sub(&Mat::identity(n));
    // Crude but safe convergence guard.
    if x.max_abs() * real::<T>(n as f64) >= real::<T>(0.95) {
        return None;
    }
    let mut result = Mat::zeros(n, n);
    let mut power = Mat::identity(n);
    for k in 1..200 {
        power = power.matmul(&x);
        let coeff = if k % 2 == 1 { T::one() } else { -T::one() } / real::<T>(k as f64);
        result = result.add(&power.scale(coeff));
        if power.max_abs() / real::<T>(k as f64) <= T::epsilon() * (T::one() + result.max_abs()) {
            break;
        }
    }
    Some(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_roundtrip_near_identity() {
        let v = Mat::from_rows(vec![vec![1.2, 0.3], vec![-0.1, 0.9]]);
        let l = mat_log_series(&v).unwrap();
        let back = mat_exp_series(&l);
        assert!(back.sub(&v).max_abs() < 1e-12);
    }

    #[test]
    fn exp_of_nilpotent_is_polynomial() {
        let mut a = Mat::zeros(3, 3);
        a[(0, 1)] = 2.0;
        a[(1, 2)] = -1.0;
        let e = mat_exp_series(&a);
        // I + A + A²/2 exactly.
        assert!((e[(0, 1)] - 2.0f64).abs() < 1e-14);
        assert!((e[(0, 2)] - (-1.0)).abs() < 1e-14);
        assert!((e[(1, 2)] - (-1.0)).abs() < 1e-14);
    }
}
