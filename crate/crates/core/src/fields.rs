//! Left-invariant vector fields in Euclidean coordinates. The coefficient of
//! `∂_m` in `Z_j` is an exactly homogeneous polynomial, produced symbolically
//! from the group law rather than transcribed.

use crate::algebra::{basis, StratifiedAlgebra};
use crate::error::FieldError;
use crate::poly::Polynomial;
use crate::scalar::{real, Real};

/// `Z_j = Σ_m coeffs[m] ∂_m`, with `coeffs[j] = 1` and the rest homogeneous
/// polynomials supported on strictly higher strata.
#[derive(Clone, Debug)]
pub struct LeftInvariantField<T> {
    pub index: usize,
    pub coeffs: Vec<Polynomial<T>>,
}

/// Derive the full left-invariant frame. For each `j`, the Euclidean
/// coefficient vector at `x` is `d/dt (x · t e_j)|_{t=0}`, evaluated
/// symbolically: `Σ_n c_n ad_x^n(e_j)` with the BCH flow coefficients.
pub fn derive_left_invariant_fields<T: Real>(
    alg: &StratifiedAlgebra<T>,
) -> Vec<LeftInvariantField<T>> {
    let d = alg.dim();
    let coords: Vec<Polynomial<T>> = (0..d).map(|i| Polynomial::var(d, i)).collect();
    let flow = bch_flow_coefficients::<T>(alg.step());
    (0..d)
        .map(|j| {
            use crate::scalar::Coeff;
            let ej: Vec<Polynomial<T>> = basis::<T>(d, j)
                .into_iter()
                .map(|c| Polynomial::constant(d, c))
                .collect();
            let mut acc: Vec<Polynomial<T>> = vec![Coeff::<T>::zero(); d];
            let mut nested = ej;
            for (n, &cn) in flow.iter().enumerate() {
                if cn != T::zero() {
                    for (a, v) in acc.iter_mut().zip(&nested) {
                        *a = Coeff::<T>::add(a, &v.scale_ref(cn));
                    }
                }
                if n + 1 < flow.len() {
                    nested = alg.bracket_in(&coords, &nested);
                }
            }
            // Normalize the arity of untouched slots.
            let coeffs = acc
                .into_iter()
                .map(|p| if p.nvars() == 0 { Polynomial::zero(d) } else { p })
                .collect();
            LeftInvariantField { index: j, coeffs }
        })
        .collect()
}

fn bch_flow_coefficients<T: Real>(step: usize) -> Vec<T> {
    // c_n = B_n (−1)^n / n!, zero for odd n ≥ 3; truncated by nilpotency.
    let table: [f64; 9] =
        [1.0, 0.5, 1.0 / 12.0, 0.0, -1.0 / 720.0, 0.0, 1.0 / 30240.0, 0.0, -1.0 / 1_209_600.0];
    table[..step.min(table.len())].iter().map(|&c| real::<T>(c)).collect()
}

impl<T: Real> LeftInvariantField<T> {
    /// Euclidean coordinates of `Z_j|_x`.
    pub fn vector_at(&self, x: &[T]) -> Vec<T> {
        self.coeffs.iter().map(|p| p.eval(x)).collect()
    }

    /// Apply to a polynomial, exactly: `Z_j p = Σ_m coeffs[m] ∂_m p`.
    pub fn apply_poly(&self, p: &Polynomial<T>) -> Polynomial<T> {
        let d = self.coeffs.len();
        let mut out = Polynomial::zero(d);
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add_ref(&c.mul_ref(&p.partial(m)));
        }
        out
    }

    /// Apply to an opaque function at a point by central differences with
    /// step `h = h_scale·(1+|x|)` along the frame direction.
    pub fn apply_fn(
        &self,
        f: &dyn Fn(&[T]) -> T,
        x: &[T],
        h_scale: T,
    ) -> Result<T, FieldError> {
        let v = self.vector_at(x);
        let xn = crate::linalg::norm2(x);
        let h = h_scale * (T::one() + xn);
        if !h.is_finite() || h == T::zero() {
            return Err(FieldError::NonDifferentiable);
        }
        let shift = |s: T| -> Vec<T> { x.iter().zip(&v).map(|(&xi, &vi)| xi + s * vi).collect() };
        let fp = f(&shift(h));
        let fm = f(&shift(-h));
        if !fp.is_finite() || !fm.is_finite() {
            return Err(FieldError::NonDifferentiable);
        }
        Ok((fp - fm) / (real::<T>(2.0) * h))
    }
}

/// The homogeneity invariant: each stored coefficient of `Z_j` on `∂_m` is
/// weighted-homogeneous of degree `Ord(m) − Ord(j)`, and vanishes whenever
/// `Ord(m) ≤ Ord(j)` with `m ≠ j`. Returns the offending pair on failure.
pub fn check_field_homogeneity<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
) -> Result<(), (usize, usize)> {
    for f in fields {
        let wj = alg.weight(f.index);
        for (m, c) in f.coeffs.iter().enumerate() {
            let wm = alg.weight(m);
            if m == f.index {
                let mut expected = c.clone();
                expected = expected.sub_ref(&Polynomial::one(alg.dim()));
                if !expected.is_zero() {
                    return Err((f.index, m));
                }
                continue;
            }
            if c.is_zero() {
                continue;
            }
            if wm <= wj {
                return Err((f.index, m));
            }
            match c.homogeneous_weighted_degree(alg.weights()) {
                Some(d) if d == wm - wj => {}
                _ => return Err((f.index, m)),
            }
        }
    }
    Ok(())
}

/// Bracket closure: `[Z_i, Z_j] = Σ_k c_{ij}^k Z_k` as first-order operators.
/// Checked exactly on polynomial probes; returns the worst residual.
pub fn bracket_closure_residual<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    probes: &[Polynomial<T>],
    points: &[Vec<T>],
) -> T {
    let d = alg.dim();
    let mut worst = T::zero();
    for i in 0..d {
        for j in (i + 1)..d {
            let cij = alg.bracket(&basis::<T>(d, i), &basis::<T>(d, j));
            for p in probes {
                let lhs = fields[i]
                    .apply_poly(&fields[j].apply_poly(p))
                    .sub_ref(&fields[j].apply_poly(&fields[i].apply_poly(p)));
                let mut rhs = Polynomial::zero(d);
                for (k, &c) in cij.iter().enumerate() {
                    if c != T::zero() {
                        rhs = rhs.add_ref(&fields[k].apply_poly(p).scale_ref(c));
                    }
                }
                let diff = lhs.sub_ref(&rhs);
                for x in points {
                    worst = worst.max(diff.eval(x).abs());
                }
            }
        }
    }
    worst
}
