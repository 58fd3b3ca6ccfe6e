//! Stratified Lie algebra validation and the group it generates: bracket,
//! truncated Baker-Campbell-Hausdorff product, dilations and a homogeneous
//! gauge. Everything is exact up to floating rounding because the group is
//! nilpotent.

use crate::poly::Polynomial;
use crate::scalar::{real, Coeff, Real};
use std::collections::BTreeMap;

/// Raw structure data as read from a group file or built in code. Indices are
/// 1-based like in the file format.
#[derive(Clone, Debug)]
pub struct RawStructure<T> {
    pub dimension: usize,
    pub strata_dims: Vec<usize>,
    /// `(i, j, [(k, c), ...])` meaning `[Z_i, Z_j] = Σ c·Z_k`.
    pub brackets: Vec<(usize, usize, Vec<(usize, T)>)>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum AlgebraViolation {
    #[error("strata dimensions {strata:?} do not sum to dimension {dim}")]
    StrataMismatch { dim: usize, strata: Vec<usize> },
    #[error("bracket index out of range: [Z_{i}, Z_{j}] -> Z_{k} with dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("antisymmetry violated at [Z_{i}, Z_{j}]")]
    AntisymmetryViolation { i: usize, j: usize },
    #[error("grading violated: [Z_{i}, Z_{j}] hits Z_{k} but Ord({i})+Ord({j}) = {expected}, Ord({k}) = {actual}")]
    GradingViolation { i: usize, j: usize, k: usize, expected: usize, actual: usize },
    #[error("Jacobi identity violated on (Z_{i}, Z_{j}, Z_{k}), residual {residual}")]
    JacobiViolation { i: usize, j: usize, k: usize, residual: f64 },
    #[error("first stratum does not generate stratum {stratum} (residual {residual})")]
    NotGenerated { stratum: usize, residual: f64 },
}

/// How a higher basis vector is produced by brackets of lower ones:
/// `e_m = Σ coeff · [e_i, e_j]` with `i` in the first stratum.
#[derive(Clone, Debug)]
pub struct GenerationRule<T> {
    pub target: usize,
    pub parts: Vec<(T, usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct StratifiedAlgebra<T> {
    dim: usize,
    strata: Vec<usize>,
    step: usize,
    q_hom: usize,
    /// `Ord(Z_j)` for each 0-based linear index.
    weights: Vec<usize>,
    /// Canonical sparse constants, keyed by `i < j` (0-based).
    brackets: BTreeMap<(usize, usize), Vec<(usize, T)>>,
    gen_rules: Vec<GenerationRule<T>>,
}

pub const ALGEBRA_TOL: f64 = 1e-12;

impl<T: Real> StratifiedAlgebra<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn strata_dims(&self) -> &[usize] {
        &self.strata
    }
    pub fn step(&self) -> usize {
        self.step
    }
    pub fn homogeneous_dimension(&self) -> usize {
        self.q_hom
    }
    pub fn first_stratum_dim(&self) -> usize {
        self.strata[0]
    }
    /// `Ord(Z_j)`, 0-based index, 1-based order.
    pub fn weight(&self, j: usize) -> usize {
        self.weights[j]
    }
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }
    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }
    /// Index range (0-based, half-open) of stratum `s` (1-based).
    pub fn stratum_range(&self, s: usize) -> std::ops::Range<usize> {
        let start: usize = self.strata[..s - 1].iter().sum();
        start..start + self.strata[s - 1]
    }
    pub fn generation_rules(&self) -> &[GenerationRule<T>] {
        &self.gen_rules
    }
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<(usize, T)>> {
        &self.brackets
    }

    /// Bracket over any coefficient ring (numbers or polynomials).
    pub fn bracket_in<C: Coeff<T>>(&self, x: &[C], y: &[C]) -> Vec<C> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![C::zero(); self.dim];
        for (&(i, j), terms) in self.brackets.iter() {
            let cross = x[i].mul(&y[j]).sub(&x[j].mul(&y[i]));
            if cross.is_zero() {
                continue;
            }
            for &(k, c) in terms {
                out[k] = out[k].add(&cross.scale(c));
            }
        }
        out
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.bracket_in(x, y)
    }

    /// `log(exp(x) exp(y))`, exact at the nilpotency step. Solves the BCH flow
    /// `Ż = Σ_n c_n ad_Z^n(y)`, `Z(0) = x` by Picard iteration on polynomials
    /// in the flow time; nilpotency truncates everything after finitely many
    /// rounds, so no series is left unterminated.
    pub fn bch_in<C: Coeff<T>>(&self, x: &[C], y: &[C]) -> Vec<C> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let deg_cap = self.step; // t-degree counts occurrences of y
        let coeffs = bch_flow_coefficients::<T>(self.step);
        // z[deg] is the coefficient vector of t^deg.
        let mut z: Vec<Vec<C>> = vec![vec![C::zero(); self.dim]; deg_cap + 1];
        z[0] = x.to_vec();
        for _ in 0..=self.step {
            // F(z)(t) = Σ_n c_n ad_z^n (y), as a t-polynomial.
            let mut f: Vec<Vec<C>> = vec![vec![C::zero(); self.dim]; deg_cap + 1];
            let mut w: Vec<Vec<C>> = vec![vec![C::zero(); self.dim]; deg_cap + 1];
            w[0] = y.to_vec();
            for (n, &cn) in coeffs.iter().enumerate() {
                if cn != T::zero() {
                    for deg in 0..=deg_cap {
                        for (fk, wk) in f[deg].iter_mut().zip(&w[deg]) {
                            *fk = fk.add(&wk.scale(cn));
                        }
                    }
                }
                if n + 1 >= coeffs.len() {
                    break;
                }
                // w ← [z, w] as t-polynomials.
                let mut next: Vec<Vec<C>> = vec![vec![C::zero(); self.dim]; deg_cap + 1];
                for a in 0..=deg_cap {
                    if z[a].iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    for b in 0..=(deg_cap - a) {
                        let br = self.bracket_in(&z[a], &w[b]);
                        for (nk, bk) in next[a + b].iter_mut().zip(&br) {
                            *nk = nk.add(bk);
                        }
                    }
                }
                w = next;
            }
            // z ← x + ∫₀ᵗ F
            let mut znew: Vec<Vec<C>> = vec![vec![C::zero(); self.dim]; deg_cap + 1];
            znew[0] = x.to_vec();
            for deg in 0..deg_cap {
                let inv = T::one() / real::<T>((deg + 1) as f64);
                for k in 0..self.dim {
                    znew[deg + 1][k] = f[deg][k].scale(inv);
                }
            }
            z = znew;
        }
        // Evaluate at t = 1.
        let mut out = vec![C::zero(); self.dim];
        for deg in 0..=deg_cap {
            for k in 0..self.dim {
                out[k] = out[k].add(&z[deg][k]);
            }
        }
        out
    }

    pub fn bch_multiply(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.bch_in(x, y)
    }

    pub fn inverse_point(&self, x: &[T]) -> Vec<T> {
        x.iter().map(|&v| -v).collect()
    }

    /// Left translation `y ↦ x·y` as exact polynomial component functions.
    pub fn left_translation_polys(&self, x: &[T]) -> Vec<Polynomial<T>> {
        let xc: Vec<Polynomial<T>> =
            x.iter().map(|&v| Polynomial::constant(self.dim, v)).collect();
        let yc: Vec<Polynomial<T>> = (0..self.dim).map(|i| Polynomial::var(self.dim, i)).collect();
        self.bch_in(&xc, &yc)
    }

    pub fn dilate(&self, r: T, x: &[T]) -> Result<Vec<T>, crate::error::GroupError> {
        if r <= T::zero() {
            return Err(crate::error::GroupError::NonPositiveScale);
        }
        Ok(self
            .weights
            .iter()
            .zip(x)
            .map(|(&w, &v)| {
                let mut f = v;
                for _ in 0..w {
                    f = f * r;
                }
                f
            })
            .collect())
    }

    /// Diagonal matrix of `δ_r` in Jacobian coordinates.
    pub fn dilation_matrix(&self, r: T) -> crate::linalg::Mat<T> {
        let d: Vec<T> = self
            .weights
            .iter()
            .map(|&w| {
                let mut f = T::one();
                for _ in 0..w {
                    f = f * r;
                }
                f
            })
            .collect();
        crate::linalg::Mat::diag(&d)
    }

    /// Homogeneous gauge `ρ(x) = (Σ |x_j|^{2ι!/Ord(j)})^{1/(2ι!)}`: exactly
    /// 1-homogeneous under dilations, symmetric, vanishing only at 0.
    pub fn gauge(&self, x: &[T]) -> T {
        let fact: usize = (1..=self.step).product();
        let p = 2 * fact;
        let mut acc = T::zero();
        for (&w, &v) in self.weights.iter().zip(x) {
            let e = real::<T>((p / w) as f64);
            acc = acc + v.abs().powf(e);
        }
        acc.powf(T::one() / real::<T>(p as f64))
    }

    /// Gauge of `y⁻¹·x` (the quasi-distance).
    pub fn gauge_distance(&self, x: &[T], y: &[T]) -> T {
        let yinv = self.inverse_point(y);
        let rel = self.bch_multiply(&yinv, x);
        self.gauge(&rel)
    }

    /// Empirical quasi-triangle constant: max over sample pairs of
    /// `ρ(xy)/(ρ(x)+ρ(y))`. A first-stratum aligned pair is always included,
    /// which pins the estimate at ≥ 1.
    pub fn estimate_a0(&self, rng: &mut impl rand::Rng, samples: usize) -> T {
        let mut best = {
            let mut e1 = vec![T::zero(); self.dim];
            e1[0] = T::one();
            let prod = self.bch_multiply(&e1, &e1);
            self.gauge(&prod) / (self.gauge(&e1) + self.gauge(&e1))
        };
        for _ in 0..samples {
            let x: Vec<T> = (0..self.dim).map(|_| real::<T>(rng.gen_range(-1.5..1.5))).collect();
            let y: Vec<T> = (0..self.dim).map(|_| real::<T>(rng.gen_range(-1.5..1.5))).collect();
            let denom = self.gauge(&x) + self.gauge(&y);
            if denom == T::zero() {
                continue;
            }
            let r = self.gauge(&self.bch_multiply(&x, &y)) / denom;
            best = best.max(r);
        }
        best
    }
}

/// Coefficients `c_n = B_n (−1)^n / n!` of the BCH flow `Ż = Σ c_n ad_Z^n(y)`
/// (B_1 = −1/2 convention, so `c_1 = +1/2`).
fn bch_flow_coefficients<T: Real>(step: usize) -> Vec<T> {
    let table: [f64; 9] = [
        1.0,
        0.5,
        1.0 / 12.0,
        0.0,
        -1.0 / 720.0,
        0.0,
        1.0 / 30240.0,
        0.0,
        -1.0 / 1_209_600.0,
    ];
    assert!(step <= table.len(), "nilpotency step {step} beyond supported table");
    table[..step].iter().map(|&c| real::<T>(c)).collect()
}

/// Validate raw structure data. On success the returned algebra carries the
/// generation certificate used later to extend automorphism first blocks.
pub fn validate_algebra<T: Real>(
    raw: &RawStructure<T>,
) -> Result<StratifiedAlgebra<T>, Vec<AlgebraViolation>> {
    let mut violations = Vec::new();
    let dim = raw.dimension;
    let strata = raw.strata_dims.clone();
    if strata.is_empty() || strata.iter().any(|&n| n == 0) || strata.iter().sum::<usize>() != dim {
        return Err(vec![AlgebraViolation::StrataMismatch { dim, strata }]);
    }
    let step = strata.len();
    let mut weights = Vec::with_capacity(dim);
    for (s, &n) in strata.iter().enumerate() {
        weights.extend(std::iter::repeat(s + 1).take(n));
    }
    let q_hom = strata.iter().enumerate().map(|(s, &n)| (s + 1) * n).sum();

    // Canonicalize to i < j, checking indices and antisymmetry on the way.
    let tol = real::<T>(ALGEBRA_TOL);
    let mut brackets: BTreeMap<(usize, usize), Vec<(usize, T)>> = BTreeMap::new();
    for (i1, j1, terms) in raw.brackets.iter() {
        let (i1, j1) = (*i1, *j1);
        for &(k1, _) in terms {
            if i1 == 0 || j1 == 0 || k1 == 0 || i1 > dim || j1 > dim || k1 > dim {
                violations.push(AlgebraViolation::IndexOutOfRange { i: i1, j: j1, k: k1, dim });
            }
        }
        if violations.iter().any(|v| matches!(v, AlgebraViolation::IndexOutOfRange { .. })) {
            continue;
        }
        if i1 == j1 {
            if terms.iter().any(|&(_, c)| c.abs() > tol) {
                violations.push(AlgebraViolation::AntisymmetryViolation { i: i1, j: j1 });
            }
            continue;
        }
        let (key, sign) = if i1 < j1 { ((i1 - 1, j1 - 1), T::one()) } else { ((j1 - 1, i1 - 1), -T::one()) };
        let entry = brackets.entry(key).or_default();
        for &(k1, c) in terms {
            let k = k1 - 1;
            match entry.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, existing)) => *existing = *existing + sign * c,
                None => entry.push((k, sign * c)),
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    for terms in brackets.values_mut() {
        terms.retain(|&(_, c)| c.abs() > T::zero());
        terms.sort_by_key(|&(k, _)| k);
    }
    brackets.retain(|_, terms| !terms.is_empty());

    // Grading.
    for (&(i, j), terms) in brackets.iter() {
        let expected = weights[i] + weights[j];
        for &(k, c) in terms.iter() {
            if c.abs() > tol && weights[k] != expected {
                violations.push(AlgebraViolation::GradingViolation {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    expected,
                    actual: weights[k],
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    let alg = StratifiedAlgebra {
        dim,
        strata: strata.clone(),
        step,
        q_hom,
        weights: weights.clone(),
        brackets,
        gen_rules: Vec::new(),
    };

    // Jacobi identity on basis triples.
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in (j + 1)..dim {
                let (ei, ej, ek) = (basis::<T>(dim, i), basis::<T>(dim, j), basis::<T>(dim, k));
                let t1 = alg.bracket(&alg.bracket(&ei, &ej), &ek);
                let t2 = alg.bracket(&alg.bracket(&ej, &ek), &ei);
                let t3 = alg.bracket(&alg.bracket(&ek, &ei), &ej);
                let mut residual = T::zero();
                for m in 0..dim {
                    residual = residual.max((t1[m] + t2[m] + t3[m]).abs());
                }
                if residual > tol {
                    violations.push(AlgebraViolation::JacobiViolation {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        residual: residual.to_f64().unwrap(),
                    });
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    // Generation: brackets of the first stratum with stratum s-1 must span
    // stratum s. Solving for each basis vector doubles as the certificate.
    let mut gen_rules = Vec::new();
    let n1 = strata[0];
    for s in 2..=step {
        let prev = alg.stratum_range(s - 1);
        let cur = alg.stratum_range(s);
        let mut cols: Vec<(usize, usize, Vec<T>)> = Vec::new();
        for i in 0..n1 {
            for j in prev.clone() {
                let v = alg.bracket(&basis::<T>(dim, i), &basis::<T>(dim, j));
                if v.iter().any(|&c| c.abs() > tol) {
                    cols.push((i, j, v[cur.clone()].to_vec()));
                }
            }
        }
        let ncur = cur.len();
        let mut worst = T::zero();
        if cols.is_empty() {
            worst = T::one();
        } else {
            let b = crate::linalg::Mat::from_fn(ncur, cols.len(), |r, c| cols[c].2[r]);
            let bt = b.transpose();
            let btb = bt.matmul(&b);
            // Normal equations are fine here: these systems are tiny.
            let reg = {
                let mut m = btb.clone();
                let eps = real::<T>(1e-13) * (T::one() + m.max_abs());
                for q in 0..m.rows() {
                    m[(q, q)] = m[(q, q)] + eps;
                }
                m
            };
            let lu = reg.lu();
            for (local, target) in cur.clone().enumerate() {
                let mut e = vec![T::zero(); ncur];
                e[local] = T::one();
                let rhs = bt.apply(&e);
                let sol = match &lu {
                    Some(f) => f.solve(&rhs),
                    None => vec![T::zero(); cols.len()],
                };
                let achieved = b.apply(&sol);
                let mut res = T::zero();
                for r in 0..ncur {
                    res = res.max((achieved[r] - e[r]).abs());
                }
                worst = worst.max(res);
                gen_rules.push(GenerationRule {
                    target,
                    parts: sol
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c.abs() > tol)
                        .map(|(idx, &c)| (c, cols[idx].0, cols[idx].1))
                        .collect(),
                });
            }
        }
        if worst > real::<T>(1e-9) {
            violations.push(AlgebraViolation::NotGenerated {
                stratum: s,
                residual: worst.to_f64().unwrap(),
            });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }

    Ok(StratifiedAlgebra { gen_rules, ..alg })
}

pub fn basis<T: Real>(dim: usize, i: usize) -> Vec<T> {
    let mut e = vec![T::zero(); dim];
    e[i] = T::one();
    e
}

/// Heisenberg group H¹ (d = 3, strata [2,1], [Z₁,Z₂] = Z₃).
pub fn heisenberg<T: Real>() -> StratifiedAlgebra<T> {
    validate_algebra(&RawStructure {
        dimension: 3,
        strata_dims: vec![2, 1],
        brackets: vec![(1, 2, vec![(3, T::one())])],
    })
    .expect("Heisenberg data is valid")
}

/// Engel group (d = 4, strata [2,1,1], [Z₁,Z₂] = Z₃, [Z₁,Z₃] = Z₄).
pub fn engel<T: Real>() -> StratifiedAlgebra<T> {
    validate_algebra(&RawStructure {
        dimension: 4,
        strata_dims: vec![2, 1, 1],
        brackets: vec![(1, 2, vec![(3, T::one())]), (1, 3, vec![(4, T::one())])],
    })
    .expect("Engel data is valid")
}

/// Abelian ℝᵈ presented with a single stratum.
pub fn abelian<T: Real>(dim: usize) -> StratifiedAlgebra<T> {
    validate_algebra(&RawStructure { dimension: dim, strata_dims: vec![dim], brackets: vec![] })
        .expect("abelian data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_and_engel_fixtures_validate() {
        let h = heisenberg::<f64>();
        assert_eq!(h.step(), 2);
        assert_eq!(h.homogeneous_dimension(), 4);
        let e = engel::<f64>();
        assert_eq!(e.step(), 3);
        assert_eq!(e.homogeneous_dimension(), 7);
        assert_eq!(e.weights(), &[1, 1, 2, 3]);
    }

    #[test]
    fn heisenberg_basic_products() {
        let h = heisenberg::<f64>();
        let p = h.bch_multiply(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]);
        assert_eq!(p, vec![1.0, 1.0, 0.5]);
        let b = h.bracket(&basis(3, 0), &basis(3, 1));
        assert_eq!(b, vec![0.0, 0.0, 1.0]);
        let e = engel::<f64>();
        assert_eq!(e.bracket(&basis(4, 0), &basis(4, 2)), vec![0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn bracket_is_antisymmetric_on_random_input() {
        let e = engel::<f64>();
        let x = vec![0.3, -1.2, 0.7, 2.0];
        let b = e.bracket(&x, &x);
        assert!(b.iter().all(|&c| c == 0.0));
    }

    #[test]
    fn grading_violation_is_rejected_with_class() {
        // Engel plus [Z2, Z3] = Z1: target stratum 1 ≠ 1+2.
        let raw = RawStructure::<f64> {
            dimension: 4,
            strata_dims: vec![2, 1, 1],
            brackets: vec![
                (1, 2, vec![(3, 1.0)]),
                (1, 3, vec![(4, 1.0)]),
                (2, 3, vec![(1, 1.0)]),
            ],
        };
        let err = validate_algebra(&raw).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, AlgebraViolation::GradingViolation { .. })), "{err:?}");
    }

    #[test]
    fn jacobi_violation_is_rejected_with_class() {
        // Strata [3,2,1]; grading-consistent but Jacobi on (Z1,Z2,Z3) forces
        // the two top-level couplings to match, and they are made unequal.
        let raw = RawStructure::<f64> {
            dimension: 6,
            strata_dims: vec![3, 2, 1],
            brackets: vec![
                (1, 2, vec![(4, 1.0)]),
                (1, 3, vec![(5, 1.0)]),
                (3, 4, vec![(6, 1.0)]),
                (2, 5, vec![(6, 2.0)]),
                (1, 4, vec![(6, 1.0)]),
            ],
        };
        let err = validate_algebra(&raw).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, AlgebraViolation::JacobiViolation { .. })), "{err:?}");
    }

    #[test]
    fn non_generating_first_stratum_is_rejected() {
        let raw = RawStructure::<f64> { dimension: 3, strata_dims: vec![2, 1], brackets: vec![] };
        let err = validate_algebra(&raw).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, AlgebraViolation::NotGenerated { .. })), "{err:?}");
    }

    #[test]
    fn self_bracket_violates_antisymmetry() {
        let raw = RawStructure::<f64> {
            dimension: 3,
            strata_dims: vec![2, 1],
            brackets: vec![(1, 1, vec![(3, 1.0)]), (1, 2, vec![(3, 1.0)])],
        };
        let err = validate_algebra(&raw).unwrap_err();
        assert!(
            err.iter().any(|v| matches!(v, AlgebraViolation::AntisymmetryViolation { .. })),
            "{err:?}"
        );
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let raw = RawStructure::<f64> {
            dimension: 3,
            strata_dims: vec![2, 1],
            brackets: vec![(1, 2, vec![(5, 1.0)])],
        };
        let err = validate_algebra(&raw).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, AlgebraViolation::IndexOutOfRange { .. })), "{err:?}");
    }

    #[test]
    fn generation_certificate_reproduces_higher_basis_vectors() {
        let e = engel::<f64>();
        for rule in e.generation_rules() {
            let mut acc = vec![0.0f64; 4];
            for &(c, i, j) in &rule.parts {
                let b = e.bracket(&basis(4, i), &basis(4, j));
                for k in 0..4 {
                    acc[k] += c * b[k];
                }
            }
            let mut want = vec![0.0f64; 4];
            want[rule.target] = 1.0;
            for k in 0..4 {
                assert!((acc[k] - want[k]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn symbolic_left_translation_matches_numeric_product() {
        let e = engel::<f64>();
        let x = vec![0.4, -0.9, 0.2, 1.1];
        let polys = e.left_translation_polys(&x);
        let y = vec![-0.3, 0.8, -1.0, 0.5];
        let numeric = e.bch_multiply(&x, &y);
        for k in 0..4 {
            assert!((polys[k].eval(&y) - numeric[k]).abs() < 1e-13);
        }
    }
}
