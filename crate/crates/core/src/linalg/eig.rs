use super::dense::Mat;
use crate::scalar::{real, Real};

/// Eigendecomposition of a real symmetric matrix: `a = q diag(values) qᵀ`,
/// eigenvalues ascending, eigenvectors in the columns of `q`.
pub struct SymEig<T> {
    pub values: Vec<T>,
    pub q: Mat<T>,
}

/// Householder tridiagonalization followed by implicit QL with shifts.
pub fn sym_eig<T: Real>(a: &Mat<T>) -> SymEig<T> {
    assert!(a.is_square(), "sym_eig needs a square matrix");
    let n = a.rows();
    let mut z = a.clone();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tred2(&mut z, &mut d, &mut e);
    tql2(&mut z, &mut d, &mut e);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<T> = order.iter().map(|&i| d[i]).collect();
    let q = Mat::from_fn(n, n, |r, c| z[(r, order[c])]);
    SymEig { values, q }
}

impl<T: Real> SymEig<T> {
    /// Assemble `q f(Λ) qᵀ`.
    pub fn map(&self, f: impl Fn(T) -> T) -> Mat<T> {
        let n = self.values.len();
        let fl: Vec<T> = self.values.iter().map(|&l| f(l)).collect();
        let mut scaled = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                scaled[(i, j)] = self.q[(i, j)] * fl[j];
            }
        }
        scaled.matmul(&self.q.transpose())
    }

    pub fn min(&self) -> T {
        self.values[0]
    }
    pub fn max(&self) -> T {
        *self.values.last().unwrap()
    }
}

fn tred2<T: Real>(z: &mut Mat<T>, d: &mut [T], e: &mut [T]) {
    let n = d.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = T::zero();
        if l > 0 {
            let mut scale = T::zero();
            for k in 0..=l {
                scale = scale + z[(i, k)].abs();
            }
            if scale == T::zero() {
                e[i] = z[(i, l)];
            } else {
                for k in 0..=l {
                    z[(i, k)] = z[(i, k)] / scale;
                    h = h + z[(i, k)] * z[(i, k)];
                }
                let f = z[(i, l)];
                let g = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                z[(i, l)] = f - g;
                let mut fsum = T::zero();
                for j in 0..=l {
                    z[(j, i)] = z[(i, j)] / h;
                    let mut g2 = T::zero();
                    for k in 0..=j {
                        g2 = g2 + z[(j, k)] * z[(i, k)];
                    }
                    for k in (j + 1)..=l {
                        g2 = g2 + z[(k, j)] * z[(i, k)];
                    }
                    e[j] = g2 / h;
                    fsum = fsum + e[j] * z[(i, j)];
                }
                let hh = fsum / (h + h);
                for j in 0..=l {
                    let f2 = z[(i, j)];
                    let g2 = e[j] - hh * f2;
                    e[j] = g2;
                    for k in 0..=j {
                        let upd = f2 * e[k] + g2 * z[(i, k)];
                        z[(j, k)] = z[(j, k)] - upd;
                    }
                }
            }
        } else {
            e[i] = z[(i, l)];
        }
        d[i] = h;
    }
    d[0] = T::zero();
    e[0] = T::zero();
    for i in 0..n {
        if d[i] != T::zero() {
            for j in 0..i {
                let mut g = T::zero();
                for k in 0..i {
                    g = g + z[(i, k)] * z[(k, j)];
                }
                for k in 0..i {
                    let upd = g * z[(k, i)];
                    z[(k, j)] = z[(k, j)] - upd;
                }
            }
        }
        d[i] = z[(i, i)];
        z[(i, i)] = T::one();
        for j in 0..i {
            z[(j, i)] = T::zero();
            z[(i, j)] = T::zero();
        }
    }
}

fn tql2<T: Real>(z: &mut Mat<T>, d: &mut [T], e: &mut [T]) {
    let n = d.len();
    if n <= 1 {
        return;
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 64, "tql2 failed to converge");
            let mut g = (d[l + 1] - d[l]) / (real::<T>(2.0) * e[l]);
            let mut r = g.hypot(T::one());
            let sign_r = if g >= T::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + real::<T>(2.0) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[(k, i + 1)];
                    z[(k, i + 1)] = s * z[(k, i)] + c * f;
                    z[(k, i)] = c * z[(k, i)] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_small_symmetric() {
        let a = Mat::from_rows(vec![
            vec![2.0, -1.0, 0.0, 0.3],
            vec![-1.0, 2.0, -1.0, 0.0],
            vec![0.0, -1.0, 2.0, -1.0],
            vec![0.3, 0.0, -1.0, 2.0],
        ]);
        let eig = sym_eig(&a);
        let back = eig.map(|l| l);
        assert!(back.sub(&a).max_abs() < 1e-12);
        let qtq = eig.q.transpose().matmul(&eig.q);
        assert!(qtq.sub(&Mat::identity(4)).max_abs() < 1e-12);
        for w in eig.values.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn dirichlet_laplacian_eigenvalues_closed_form() {
        // (1/h²)·tridiag(-1,2,-1) on n points has eigenvalues 4 sin²(kπ/(2(n+1)))/h².
        let n = 24;
        let h = 0.1f64;
        let mut a = Mat::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = 2.0 / (h * h);
            if i + 1 < n {
                a[(i, i + 1)] = -1.0 / (h * h);
                a[(i + 1, i)] = -1.0 / (h * h);
            }
        }
        let eig = sym_eig(&a);
        for (k, &lam) in eig.values.iter().enumerate() {
            let exact = 4.0 / (h * h)
                * ((k + 1) as f64 * std::f64::consts::PI / (2.0 * (n as f64 + 1.0))).sin().powi(2);
            assert!((lam - exact).abs() < 1e-9 * (1.0 + exact), "k={k} {lam} vs {exact}");
        }
    }
}
