//! Smooth maps between open pieces of the group: polynomial components where
//! possible, opaque evaluators with finite differences otherwise. Pushforward
//! calculus lives here.

use crate::algebra::StratifiedAlgebra;
use crate::error::FieldError;
use crate::fields::LeftInvariantField;
use crate::linalg::Mat;
use crate::poly::Polynomial;
use crate::scalar::{real, Real};
use std::sync::Arc;

pub type OpaqueMap<T> = Arc<dyn Fn(&[T]) -> Vec<T> + Send + Sync>;

#[derive(Clone)]
pub enum MapKind<T: Real> {
    Polynomial(Vec<Polynomial<T>>),
    Opaque(OpaqueMap<T>),
}

#[derive(Clone)]
pub struct SmoothMap<T: Real> {
    pub dim: usize,
    pub kind: MapKind<T>,
    inverse: Option<Box<SmoothMap<T>>>,
}

impl<T: Real> std::fmt::Debug for SmoothMap<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            MapKind::Polynomial(_) => write!(f, "SmoothMap(polynomial, dim={})", self.dim),
            MapKind::Opaque(_) => write!(f, "SmoothMap(opaque, dim={})", self.dim),
        }
    }
}

/// Central-difference step used on opaque maps.
pub fn fd_step<T: Real>(x: &[T]) -> T {
    real::<T>(1e-5) * (T::one() + crate::linalg::norm2(x))
}

impl<T: Real> SmoothMap<T> {
    pub fn from_polys(polys: Vec<Polynomial<T>>) -> Self {
        let dim = polys.len();
        SmoothMap { dim, kind: MapKind::Polynomial(polys), inverse: None }
    }

    pub fn from_fn(dim: usize, f: impl Fn(&[T]) -> Vec<T> + Send + Sync + 'static) -> Self {
        SmoothMap { dim, kind: MapKind::Opaque(Arc::new(f)), inverse: None }
    }

    pub fn identity(dim: usize) -> Self {
        let polys = (0..dim).map(|i| Polynomial::var(dim, i)).collect();
        let mut m = Self::from_polys(polys);
        m.inverse = Some(Box::new(Self::from_polys(
            (0..dim).map(|i| Polynomial::var(dim, i)).collect(),
        )));
        m
    }

    /// Left translation `L_a(y) = a·y`, with exact polynomial inverse.
    pub fn left_translation(alg: &StratifiedAlgebra<T>, a: &[T]) -> Self {
        let fwd = alg.left_translation_polys(a);
        let bwd = alg.left_translation_polys(&alg.inverse_point(a));
        let mut m = Self::from_polys(fwd);
        m.inverse = Some(Box::new(Self::from_polys(bwd)));
        m
    }

    /// Linear map from a matrix (used for automorphisms and dilations).
    pub fn linear(mat: &Mat<T>) -> Self {
        let d = mat.rows();
        let polys: Vec<Polynomial<T>> = (0..d)
            .map(|i| {
                let mut p = Polynomial::zero(d);
                for j in 0..d {
                    if mat[(i, j)] != T::zero() {
                        p = p.add_ref(&Polynomial::var(d, j).scale_ref(mat[(i, j)]));
                    }
                }
                p
            })
            .collect();
        let mut m = Self::from_polys(polys);
        if let Some(inv) = mat.inverse() {
            m.inverse = Some(Box::new(Self::linear_no_inverse(&inv)));
        }
        m
    }

    fn linear_no_inverse(mat: &Mat<T>) -> Self {
        let d = mat.rows();
        let polys: Vec<Polynomial<T>> = (0..d)
            .map(|i| {
                let mut p = Polynomial::zero(d);
                for j in 0..d {
                    if mat[(i, j)] != T::zero() {
                        p = p.add_ref(&Polynomial::var(d, j).scale_ref(mat[(i, j)]));
                    }
                }
                p
            })
            .collect();
        Self::from_polys(polys)
    }

    pub fn dilation(alg: &StratifiedAlgebra<T>, r: T) -> Self {
        let mut m = Self::linear(&alg.dilation_matrix(r));
        m.inverse = Some(Box::new(Self::linear(&alg.dilation_matrix(T::one() / r))));
        m
    }

    /// `self ∘ other` (apply `other` first). Polynomial composition is exact.
    pub fn compose(&self, other: &SmoothMap<T>) -> Self {
        let kind = match (&self.kind, &other.kind) {
            (MapKind::Polynomial(p), MapKind::Polynomial(q)) => {
                MapKind::Polynomial(p.iter().map(|pi| pi.compose(q)).collect())
            }
            _ => {
                let f = self.clone();
                let g = other.clone();
                MapKind::Opaque(Arc::new(move |x: &[T]| f.eval(&g.eval(x))))
            }
        };
        let inverse = match (&self.inverse, &other.inverse) {
            (Some(fi), Some(gi)) => Some(Box::new(gi.compose(fi))),
            _ => None,
        };
        SmoothMap { dim: self.dim, kind, inverse }
    }

    pub fn with_inverse(mut self, inv: SmoothMap<T>) -> Self {
        self.inverse = Some(Box::new(inv));
        self
    }

    pub fn eval(&self, x: &[T]) -> Vec<T> {
        match &self.kind {
            MapKind::Polynomial(polys) => polys.iter().map(|p| p.eval(x)).collect(),
            MapKind::Opaque(f) => f(x),
        }
    }

    /// Inverse evaluation: explicit inverse if attached, Newton otherwise.
    pub fn eval_inverse(&self, y: &[T]) -> Result<Vec<T>, FieldError> {
        if let Some(inv) = &self.inverse {
            return Ok(inv.eval(y));
        }
        // Newton from y itself (adequate for the near-identity maps used in
        // fixtures; callers needing more attach an inverse explicitly).
        let mut x = y.to_vec();
        for _ in 0..200 {
            let fx = self.eval(&x);
            let r: Vec<T> = fx.iter().zip(y).map(|(&a, &b)| a - b).collect();
            let rn = crate::linalg::norm2(&r);
            if rn < real::<T>(1e-13) * (T::one() + crate::linalg::norm2(y)) {
                return Ok(x);
            }
            let j = self.jacobian(&x);
            let lu = j.lu().ok_or(FieldError::SingularJacobian)?;
            let dx = lu.solve(&r);
            for (xi, di) in x.iter_mut().zip(&dx) {
                *xi = *xi - *di;
            }
        }
        let fx = self.eval(&x);
        let rn = crate::linalg::norm2(
            &fx.iter().zip(y).map(|(&a, &b)| a - b).collect::<Vec<_>>(),
        );
        if rn < real::<T>(1e-8) * (T::one() + crate::linalg::norm2(y)) {
            Ok(x)
        } else {
            Err(FieldError::InverseUnavailable)
        }
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    /// Jacobian matrix `J_Φ(x)`: exact for polynomial maps, central
    /// differences for opaque ones.
    pub fn jacobian(&self, x: &[T]) -> Mat<T> {
        match &self.kind {
            MapKind::Polynomial(polys) => {
                Mat::from_fn(self.dim, self.dim, |i, j| polys[i].partial(j).eval(x))
            }
            MapKind::Opaque(f) => {
                let h = fd_step(x);
                let mut jac = Mat::zeros(self.dim, self.dim);
                for j in 0..self.dim {
                    let mut xp = x.to_vec();
                    let mut xm = x.to_vec();
                    xp[j] = xp[j] + h;
                    xm[j] = xm[j] - h;
                    let (fp, fm) = (f(&xp), f(&xm));
                    for i in 0..self.dim {
                        jac[(i, j)] = (fp[i] - fm[i]) / (real::<T>(2.0) * h);
                    }
                }
                jac
            }
        }
    }

    /// `|det J_Φ(x)|`.
    pub fn jdet(&self, x: &[T]) -> T {
        self.jacobian(x).determinant().abs()
    }

    /// Component function `Φ_i` as a scalar evaluator.
    pub fn component(&self, i: usize) -> impl Fn(&[T]) -> T + '_ {
        move |x: &[T]| match &self.kind {
            MapKind::Polynomial(polys) => polys[i].eval(x),
            MapKind::Opaque(f) => f(x)[i],
        }
    }
}

/// Pushforward of a tangent vector: `J_Φ(x)·v`.
pub fn pushforward_vector<T: Real>(phi: &SmoothMap<T>, x: &[T], v: &[T]) -> Vec<T> {
    phi.jacobian(x).apply(v)
}

/// Field evaluator for `Φ_*(X)`: at `y`, equals `J_Φ(x)·X|_x` with
/// `x = Φ^{-1}(y)`.
pub fn pushforward_field<'a, T: Real>(
    phi: &'a SmoothMap<T>,
    field: &'a LeftInvariantField<T>,
) -> impl Fn(&[T]) -> Result<Vec<T>, FieldError> + 'a {
    move |y: &[T]| {
        let x = phi.eval_inverse(y)?;
        Ok(phi.jacobian(&x).apply(&field.vector_at(&x)))
    }
}

/// Evaluator for a pushforward applied to a test function:
/// `(Φ_*(X) f)(y) = (X (f∘Φ))(Φ^{-1}(y))`.
pub fn pushforward_apply<T: Real>(
    phi: &SmoothMap<T>,
    field: &LeftInvariantField<T>,
    f: &dyn Fn(&[T]) -> T,
    y: &[T],
) -> Result<T, FieldError> {
    let x = phi.eval_inverse(y)?;
    let g = |z: &[T]| f(&phi.eval(z));
    field.apply_fn(&g, &x, real::<T>(1e-5))
}

/// The zero-order correction picked up when conjugating a first-stratum field
/// by the unitary change of variables: `a^Φ_k = (Jdet^{-1/2}·X_k Jdet^{1/2})∘Φ^{-1}`.
/// Vanishes identically when `Jdet` is constant.
pub fn conjugation_correction<T: Real>(
    phi: &SmoothMap<T>,
    field: &LeftInvariantField<T>,
    y: &[T],
) -> Result<T, FieldError> {
    let x = phi.eval_inverse(y)?;
    let jd = phi.jdet(&x);
    if jd <= T::zero() || !jd.is_finite() {
        return Err(FieldError::SingularJacobian);
    }
    let sqrt_jdet = |z: &[T]| phi.jdet(z).sqrt();
    let num = field.apply_fn(&sqrt_jdet, &x, real::<T>(1e-4))?;
    Ok(num / jd.sqrt())
}
