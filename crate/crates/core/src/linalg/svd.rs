use super::dense::Mat;
use crate::scalar::{real, Real};

pub struct Svd<T> {
    /// Thin left factor, `m×n` (columns past the rank are zero).
    pub u: Mat<T>,
    /// Singular values, nonincreasing.
    pub s: Vec<T>,
    /// Right factor, `n×n`.
    pub v: Mat<T>,
}

/// One-sided Jacobi SVD. Accurate for small singular values, no external
/// dependencies, adequate for the dense sizes this crate caps itself at.
pub fn svd_thin<T: Real>(a: &Mat<T>) -> Svd<T> {
    if a.rows() < a.cols() {
        let svd = svd_thin(&a.transpose());
        return Svd { u: svd.v.matmul(&Mat::identity(svd.v.rows())), s: svd.s, v: svd.u };
    }
    let m = a.rows();
    let n = a.cols();
    // Work on rows of aᵀ so column rotations touch contiguous memory.
    let mut w = a.transpose(); // n×m, row i = column i of a
    let mut v = Mat::identity(n);
    let tol = T::epsilon() * real::<T>(8.0);
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for i in 0..n.saturating_sub(1) {
            for j in (i + 1)..n {
                let (alpha, beta, gamma) = {
                    let (ri, rj) = (w.row(i), w.row(j));
                    let mut a2 = T::zero();
                    let mut b2 = T::zero();
                    let mut g = T::zero();
                    for k in 0..m {
                        a2 = a2 + ri[k] * ri[k];
                        b2 = b2 + rj[k] * rj[k];
                        g = g + ri[k] * rj[k];
                    }
                    (a2, b2, g)
                };
                if gamma.abs() <= tol * (alpha * beta).sqrt() || gamma == T::zero() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (real::<T>(2.0) * gamma);
                let t = {
                    let s = if zeta >= T::zero() { T::one() } else { -T::one() };
                    s / (zeta.abs() + (T::one() + zeta * zeta).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                rotate_rows(&mut w, i, j, c, s);
                rotate_rows(&mut v, i, j, c, s);
            }
        }
        if !rotated {
            break;
        }
    }
    let mut s: Vec<T> = (0..n).map(|i| super::norm2(w.row(i))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap());
    let mut u = Mat::zeros(m, n);
    let mut v_sorted = Mat::zeros(n, n);
    let mut s_sorted = vec![T::zero(); n];
    for (new, &old) in order.iter().enumerate() {
        s_sorted[new] = s[old];
        if s[old] > T::zero() {
            for k in 0..m {
                u[(k, new)] = w.row(old)[k] / s[old];
            }
        }
        for k in 0..n {
            v_sorted[(k, new)] = v[(old, k)];
        }
    }
    s = s_sorted;
    Svd { u, s, v: v_sorted }
}

fn rotate_rows<T: Real>(m: &mut Mat<T>, i: usize, j: usize, c: T, s: T) {
    let cols = m.cols();
    for k in 0..cols {
        let a = m[(i, k)];
        let b = m[(j, k)];
        m[(i, k)] = c * a - s * b;
        m[(j, k)] = s * a + c * b;
    }
}

/// Singular values only, nonincreasing.
pub fn singular_values<T: Real>(a: &Mat<T>) -> Vec<T> {
    svd_thin(a).s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_rectangular() {
        let a = Mat::from_rows(vec![
            vec![1.0, 2.0, 0.5],
            vec![-0.3, 0.7, 1.1],
            vec![2.0, -1.0, 0.0],
            vec![0.1, 0.1, 0.1],
        ]);
        let svd = svd_thin(&a);
        let back = svd.u.matmul(&Mat::diag(&svd.s)).matmul(&svd.v.transpose());
        assert!(back.sub(&a).max_abs() < 1e-12);
        for w in svd.s.windows(2) {
            assert!(w[0] >= w[1]);
        }
        let vtv = svd.v.transpose().matmul(&svd.v);
        assert!(vtv.sub(&Mat::identity(3)).max_abs() < 1e-12);
    }

    #[test]
    fn rank_one_profile() {
        let a = Mat::from_fn(5, 5, |i, j| (i as f64 + 1.0) * (j as f64 + 1.0));
        let s = singular_values(&a);
        assert!(s[0] > 1.0);
        for &x in &s[1..] {
            assert!(x < 1e-12 * s[0]);
        }
    }
}
