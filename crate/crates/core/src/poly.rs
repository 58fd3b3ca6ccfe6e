//! Sparse multivariate polynomials with exact arithmetic over the scalar type.
//! These carry the homogeneous coefficients of left-invariant vector fields and
//! make the group law available symbolically.

use crate::scalar::{Coeff, Real};
use std::collections::BTreeMap;

/// Monomial exponent vector (one entry per coordinate).
pub type MultiIndex = Vec<u16>;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, T>,
}

impl<T: Real> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        if c != T::zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    /// The coordinate polynomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut idx = vec![0u16; nvars];
        idx[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(idx, T::one());
        p
    }

    pub fn monomial(nvars: usize, idx: MultiIndex, c: T) -> Self {
        assert_eq!(idx.len(), nvars);
        let mut p = Self::zero(nvars);
        if c != T::zero() {
            p.terms.insert(idx, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, idx: MultiIndex, c: T) {
        if c == T::zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(T::zero);
        *entry = *entry + c;
        if *entry == T::zero() {
            // look up again to remove; avoids holding the borrow
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != T::zero());
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (idx, &c) in other.terms.iter() {
            out.insert(idx.clone(), c);
        }
        out.prune();
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (idx, &c) in other.terms.iter() {
            out.insert(idx.clone(), -c);
        }
        out.prune();
        out
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ia, &ca) in self.terms.iter() {
            for (ib, &cb) in other.terms.iter() {
                let idx: MultiIndex = ia.iter().zip(ib).map(|(&a, &b)| a + b).collect();
                out.insert(idx, ca * cb);
            }
        }
        out.prune();
        out
    }

    pub fn scale_ref(&self, c: T) -> Self {
        if c == T::zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = *v * c;
        }
        out
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.nvars);
        let mut acc = T::zero();
        for (idx, &c) in self.terms.iter() {
            let mut m = c;
            for (k, &e) in idx.iter().enumerate() {
                for _ in 0..e {
                    m = m * x[k];
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Exact partial derivative `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (idx, &c) in self.terms.iter() {
            if idx[i] == 0 {
                continue;
            }
            let mut nidx = idx.clone();
            nidx[i] -= 1;
            out.insert(nidx, c * crate::scalar::real::<T>(idx[i] as f64));
        }
        out.prune();
        out
    }

    /// Substitute `x_i := maps[i]`.
    pub fn compose(&self, maps: &[Polynomial<T>]) -> Self {
        assert_eq!(maps.len(), self.nvars);
        let nv = if maps.is_empty() { 0 } else { maps[0].nvars };
        let mut out = Self::zero(nv);
        for (idx, &c) in self.terms.iter() {
            let mut term = Self::constant(nv, c);
            for (k, &e) in idx.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul_ref(&maps[k]);
                }
            }
            out = out.add_ref(&term);
        }
        out
    }

    /// Weighted degree of each monomial under coordinate weights; `Some(d)` iff
    /// all monomials share the same weighted degree `d` (the zero polynomial is
    /// homogeneous of every degree, reported as `None`-free via `Some(0)`).
    pub fn homogeneous_weighted_degree(&self, weights: &[usize]) -> Option<usize> {
        assert_eq!(weights.len(), self.nvars);
        let mut deg: Option<usize> = None;
        for (idx, _) in self.terms.iter() {
            let d: usize = idx.iter().zip(weights).map(|(&e, &w)| e as usize * w).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_coeff_abs(&self) -> T {
        self.terms.values().fold(T::zero(), |m, c| m.max(c.abs()))
    }
}

impl<T: Real> Coeff<T> for Polynomial<T> {
    fn zero() -> Self {
        // The group code always clones from a prototype with the right arity;
        // a 0-ary zero acts as the additive identity in `add`.
        Polynomial::zero(0)
    }
    fn add(&self, other: &Self) -> Self {
        if self.nvars == 0 && self.terms.is_empty() {
            return other.clone();
        }
        if other.nvars == 0 && other.terms.is_empty() {
            return self.clone();
        }
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        if other.nvars == 0 && other.terms.is_empty() {
            return self.clone();
        }
        if self.nvars == 0 && self.terms.is_empty() {
            return other.scale_ref(-T::one());
        }
        self.sub_ref(other)
    }
    fn mul(&self, other: &Self) -> Self {
        if (self.nvars == 0 && self.terms.is_empty()) || (other.nvars == 0 && other.terms.is_empty())
        {
            return Polynomial::zero(0);
        }
        self.mul_ref(other)
    }
    fn scale(&self, c: T) -> Self {
        self.scale_ref(c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
