//! Strata-preserving automorphisms, certification of filtration-preserving
//! diffeomorphisms, admissibility matrices and their chain rule, atlases with
//! cocycle verification, and the cutoff localization of a diffeomorphism.

use crate::algebra::{basis, StratifiedAlgebra};
use crate::covering::bump_profile;
use crate::error::GeometryError;
use crate::fields::LeftInvariantField;
use crate::linalg::{norm2, Mat};
use crate::maps::SmoothMap;
use crate::scalar::{real, Real};

#[derive(Clone, Debug)]
pub struct StrataAutomorphism<T> {
    pub matrix: Mat<T>,
    /// Diagonal blocks, one per stratum.
    pub blocks: Vec<Mat<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AutoViolation {
    NotSquare,
    OffBlockEntry { row: usize, col: usize, value: f64 },
    NotInvertible,
    BracketMismatch { i: usize, j: usize, residual: f64 },
}

pub const AUTO_TOL: f64 = 1e-10;

/// Verify that a matrix is a strata-preserving Lie algebra automorphism:
/// block-diagonal with respect to the strata, invertible, and
/// `A[x,y] = [Ax,Ay]` exactly on basis pairs.
pub fn check_strata_automorphism<T: Real>(
    alg: &StratifiedAlgebra<T>,
    mat: &Mat<T>,
) -> Result<StrataAutomorphism<T>, Vec<AutoViolation>> {
    let mut violations = Vec::new();
    if !mat.is_square() || mat.rows() != alg.dim() {
        return Err(vec![AutoViolation::NotSquare]);
    }
    let d = alg.dim();
    let tol = real::<T>(AUTO_TOL);
    let scale = T::one() + mat.max_abs();
    for i in 0..d {
        for j in 0..d {
            if alg.weight(i) != alg.weight(j) && mat[(i, j)].abs() > tol * scale {
                violations.push(AutoViolation::OffBlockEntry {
                    row: i,
                    col: j,
                    value: mat[(i, j)].to_f64().unwrap(),
                });
            }
        }
    }
    if mat.lu().is_none() {
        violations.push(AutoViolation::NotInvertible);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let lhs = mat.apply(&alg.bracket(&basis::<T>(d, i), &basis::<T>(d, j)));
            let rhs = alg.bracket(&mat.col(i), &mat.col(j));
            let mut res = T::zero();
            for k in 0..d {
                res = res.max((lhs[k] - rhs[k]).abs());
            }
            if res > tol * scale * scale {
                violations.push(AutoViolation::BracketMismatch {
                    i: i + 1,
                    j: j + 1,
                    residual: res.to_f64().unwrap(),
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let blocks = (1..=alg.step())
        .map(|s| {
            let r = alg.stratum_range(s);
            Mat::from_fn(r.len(), r.len(), |i, j| mat[(r.start + i, r.start + j)])
        })
        .collect();
    Ok(StrataAutomorphism { matrix: mat.clone(), blocks })
}

/// Extend a first-stratum block to the full matrix using the generation
/// certificate: the image of a bracket is the bracket of the images. A strata
/// automorphism is determined by its first block, so this is the unique
/// candidate; whether it actually is an automorphism is for
/// [`check_strata_automorphism`] to decide.
pub fn extend_first_block<T: Real>(alg: &StratifiedAlgebra<T>, first: &Mat<T>) -> Mat<T> {
    let d = alg.dim();
    let n1 = alg.first_stratum_dim();
    assert_eq!(first.rows(), n1);
    let mut full = Mat::zeros(d, d);
    for i in 0..n1 {
        for j in 0..n1 {
            full[(i, j)] = first[(i, j)];
        }
    }
    // Generation rules are listed stratum by stratum, so images of the
    // previous stratum are always available.
    for rule in alg.generation_rules() {
        let mut image = vec![T::zero(); d];
        for &(c, i, j) in &rule.parts {
            let br = alg.bracket(&full.col(i), &full.col(j));
            for k in 0..d {
                image[k] = image[k] + c * br[k];
            }
        }
        for k in 0..d {
            full[(k, rule.target)] = image[k];
        }
    }
    full
}

/// The explicit basis `h_j(x)` of the coordinate image of the first layer:
/// Euclidean coordinates of `X_j|_x` for `j < n₁`.
pub fn f_basis<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    x: &[T],
) -> Vec<Vec<T>> {
    (0..alg.first_stratum_dim()).map(|j| fields[j].vector_at(x)).collect()
}

#[derive(Clone, Debug)]
pub struct GDiffeoSample<T> {
    pub point: Vec<T>,
    /// Worst relative size of higher-layer components of `Φ_*(X_k)` in the
    /// left-invariant frame at the image point.
    pub frame_residual: T,
    /// Worst relative distance of `J_Φ(x)·h_k(x)` from `span{h_j(Φ(x))}`.
    pub span_residual: T,
}

#[derive(Clone, Debug)]
pub struct GDiffeoReport<T> {
    pub samples: Vec<GDiffeoSample<T>>,
    pub worst_frame: T,
    pub worst_span: T,
    pub tol: T,
}

impl<T: Real> GDiffeoReport<T> {
    pub fn pass_frame(&self) -> bool {
        self.worst_frame <= self.tol
    }
    pub fn pass_span(&self) -> bool {
        self.worst_span <= self.tol
    }
    pub fn pass(&self) -> bool {
        self.pass_frame() && self.pass_span()
    }
    /// The two criteria are equivalent in exact arithmetic; a disagreement
    /// means the tolerance sits inside the numerical gray zone.
    pub fn criteria_agree(&self) -> bool {
        self.pass_frame() == self.pass_span()
    }
}

/// Evaluate both machine-checkable characterizations of a
/// filtration-preserving diffeomorphism at the given sample points.
pub fn check_g_diffeomorphism<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    phi: &SmoothMap<T>,
    points: &[Vec<T>],
    tol: T,
) -> GDiffeoReport<T> {
    let d = alg.dim();
    let n1 = alg.first_stratum_dim();
    let mut samples = Vec::with_capacity(points.len());
    let mut worst_frame = T::zero();
    let mut worst_span = T::zero();
    for x in points {
        let y = phi.eval(x);
        let jac = phi.jacobian(x);
        // Frame at the image point, as columns.
        let frame = Mat::from_fn(d, d, |r, c| fields[c].vector_at(&y)[r]);
        let frame_lu = frame.lu().expect("left-invariant frame is unitriangular");
        // Orthonormal basis of span{h_j(y)} for the span criterion.
        let hy: Vec<Vec<T>> = (0..n1).map(|j| fields[j].vector_at(&y)).collect();
        let q = gram_schmidt(&hy);
        let mut frame_res = T::zero();
        let mut span_res = T::zero();
        for k in 0..n1 {
            let v = jac.apply(&fields[k].vector_at(x));
            let vn = norm2(&v).max(T::epsilon());
            let beta = frame_lu.solve(&v);
            let mut high = T::zero();
            for m in n1..d {
                high = high.max(beta[m].abs());
            }
            frame_res = frame_res.max(high / vn);
            let mut proj = v.clone();
            for qv in &q {
                let c = crate::linalg::dot(qv, &v);
                for (p, &qi) in proj.iter_mut().zip(qv) {
                    *p = *p - c * qi;
                }
            }
            span_res = span_res.max(norm2(&proj) / vn);
        }
        worst_frame = worst_frame.max(frame_res);
        worst_span = worst_span.max(span_res);
        samples.push(GDiffeoSample { point: x.clone(), frame_residual: frame_res, span_residual: span_res });
    }
    GDiffeoReport { samples, worst_frame, worst_span, tol }
}

fn gram_schmidt<T: Real>(vs: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut q: Vec<Vec<T>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &q {
            let c = crate::linalg::dot(u, &w);
            for (wi, &ui) in w.iter_mut().zip(u) {
                *wi = *wi - c * ui;
            }
        }
        let n = norm2(&w);
        if n > T::epsilon() {
            q.push(w.iter().map(|&x| x / n).collect());
        }
    }
    q
}

/// First block of the admissibility matrix: `H_{ik}(x) = (X_k Φ_i)(x)`.
pub fn horizontal_jacobian<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    phi: &SmoothMap<T>,
    x: &[T],
) -> Mat<T> {
    let n1 = alg.first_stratum_dim();
    // X_k Φ_i(x) = (J_Φ(x) · h_k(x))_i, which is exact for polynomial maps.
    let jac = phi.jacobian(x);
    Mat::from_fn(n1, n1, |i, k| {
        let v = jac.apply(&fields[k].vector_at(x));
        v[i]
    })
}

/// The admissibility matrix `H^Φ(x)`: first block `X_kΦ_i(x)`, higher blocks
/// induced through the bracket. Fails if the induced matrix is not a strata
/// automorphism, which flags `Φ` as not filtration-preserving at `x`.
pub fn admissibility_matrix<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    phi: &SmoothMap<T>,
    x: &[T],
) -> Result<StrataAutomorphism<T>, GeometryError> {
    let first = horizontal_jacobian(alg, fields, phi, x);
    let full = extend_first_block(alg, &first);
    check_strata_automorphism(alg, &full).map_err(|v| {
        let residual = v
            .iter()
            .map(|x| match x {
                AutoViolation::BracketMismatch { residual, .. } => *residual,
                AutoViolation::OffBlockEntry { value, .. } => value.abs(),
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max);
        GeometryError::NotAdmissible { residual }
    })
}

// ---------------------------------------------------------------------------
// Atlases
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Chart<T: Real> {
    pub name: String,
    /// Chart map into the group; must carry (or admit) an inverse.
    pub map: SmoothMap<T>,
}

/// Sampled overlap between charts: points expressed on the manifold.
#[derive(Clone, Debug)]
pub struct Overlap<T> {
    pub charts: Vec<usize>,
    pub samples: Vec<Vec<T>>,
}

#[derive(Clone, Debug)]
pub struct ChartAtlas<T: Real> {
    pub charts: Vec<Chart<T>>,
    pub overlaps: Vec<Overlap<T>>,
}

impl<T: Real> ChartAtlas<T> {
    /// Transition map `h_j ∘ h_i^{-1}`.
    pub fn transition(&self, i: usize, j: usize) -> SmoothMap<T> {
        let hi_inv = match &self.charts[i].map {
            m if m.has_inverse() => m.clone(),
            m => m.clone(),
        };
        let hj = self.charts[j].map.clone();
        // Compose through the manifold point: x ↦ h_j(h_i^{-1}(x)).
        let hi = hi_inv;
        SmoothMap::from_fn(hj.dim, move |x: &[T]| {
            let p = hi.eval_inverse(x).expect("chart map must be invertible on overlap");
            hj.eval(&p)
        })
    }
}

#[derive(Clone, Debug)]
pub struct CocycleEntry<T> {
    pub charts: Vec<usize>,
    /// Worst max-norm distance of the pairwise/triple first-block product
    /// from the identity over the overlap samples.
    pub residual: T,
}

#[derive(Clone, Debug)]
pub struct AtlasReport<T> {
    pub transition_checks: Vec<(usize, usize, bool, T)>,
    pub pairwise: Vec<CocycleEntry<T>>,
    pub triple: Vec<CocycleEntry<T>>,
    pub tol: T,
}

impl<T: Real> AtlasReport<T> {
    pub fn pass(&self) -> bool {
        self.transition_checks.iter().all(|&(_, _, ok, _)| ok)
            && self.pairwise.iter().all(|e| e.residual <= self.tol)
            && self.triple.iter().all(|e| e.residual <= self.tol)
    }
}

/// Verify every declared overlap: transitions are filtration-preserving and
/// the admissibility cocycles multiply to the identity.
pub fn verify_atlas<T: Real>(
    alg: &StratifiedAlgebra<T>,
    fields: &[LeftInvariantField<T>],
    atlas: &ChartAtlas<T>,
    tol: T,
) -> AtlasReport<T> {
    let mut transition_checks = Vec::new();
    let mut pairwise = Vec::new();
    let mut triple = Vec::new();
    for overlap in &atlas.overlaps {
        match overlap.charts.as_slice() {
            &[i, j] => {
                let phi_ij = atlas.transition(i, j);
                let phi_ji = atlas.transition(j, i);
                let pts_i: Vec<Vec<T>> =
                    overlap.samples.iter().map(|p| atlas.charts[i].map.eval(p)).collect();
                let report = check_g_diffeomorphism(alg, fields, &phi_ij, &pts_i, tol);
                transition_checks.push((i, j, report.pass(), report.worst_span));
                let mut worst = T::zero();
                for p in &overlap.samples {
                    let hi = atlas.charts[i].map.eval(p);
                    let hj = atlas.charts[j].map.eval(p);
                    let a = horizontal_jacobian(alg, fields, &phi_ij, &hi);
                    let b = horizontal_jacobian(alg, fields, &phi_ji, &hj);
                    let prod = a.matmul(&b);
                    worst = worst.max(prod.sub(&Mat::identity(a.rows())).max_abs());
                }
                pairwise.push(CocycleEntry { charts: vec![i, j], residual: worst });
            }
            &[i, j, k] => {
                let phi_ij = atlas.transition(i, j);
                let phi_jk = atlas.transition(j, k);
                let phi_ki = atlas.transition(k, i);
                let mut worst = T::zero();
                for p in &overlap.samples {
                    let hi = atlas.charts[i].map.eval(p);
                    let hj = atlas.charts[j].map.eval(p);
                    let hk = atlas.charts[k].map.eval(p);
                    let a = horizontal_jacobian(alg, fields, &phi_ij, &hi);
                    let b = horizontal_jacobian(alg, fields, &phi_jk, &hj);
                    let c = horizontal_jacobian(alg, fields, &phi_ki, &hk);
                    let prod = a.matmul(&b).matmul(&c);
                    worst = worst.max(prod.sub(&Mat::identity(a.rows())).max_abs());
                }
                triple.push(CocycleEntry { charts: vec![i, j, k], residual: worst });
            }
            other => panic!("overlap arity {} unsupported", other.len()),
        }
    }
    AtlasReport { transition_checks, pairwise, triple, tol }
}

// ---------------------------------------------------------------------------
// Localization
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct LocalizedMap<T: Real> {
    pub map: SmoothMap<T>,
    /// Agreement radius: the cutoff plateau, where the map equals `Φ`.
    pub r_inner: T,
    /// Support radius: outside, the map is the exact affine tail `ζ ↦ −ζ`.
    pub r_outer: T,
}

/// Cut a diffeomorphism down to a compactly supported change of variables:
/// equal to `Φ` on a gauge ball around `ξ`, affine outside a larger ball. The
/// radius is halved until the Jacobian determinant stays away from zero on
/// the sample set.
pub fn localize_diffeomorphism<T: Real>(
    alg: &StratifiedAlgebra<T>,
    phi: &SmoothMap<T>,
    xi: &[T],
    samples: &[Vec<T>],
) -> Result<LocalizedMap<T>, GeometryError> {
    if phi.jdet(xi) <= real::<T>(1e-12) {
        return Err(GeometryError::DegenerateJacobian);
    }
    let build = |r: T| -> SmoothMap<T> {
        let alg = alg.clone();
        let phi = phi.clone();
        let xi = xi.to_vec();
        SmoothMap::from_fn(alg.dim(), move |zeta: &[T]| {
            let zinv = alg.inverse_point(zeta);
            let rel = alg.bch_multiply(&zinv, &xi);
            let scaled = alg.dilate(T::one() / r, &rel).expect("positive radius");
            let s = bump_profile(alg.gauge(&scaled));
            let inner = alg.bch_multiply(zeta, &phi.eval(zeta));
            let weighted: Vec<T> = inner.iter().map(|&c| c * s).collect();
            alg.bch_multiply(&zinv, &weighted)
        })
    };
    let mut r = T::one();
    for _ in 0..24 {
        let candidate = build(r);
        let mut ok = true;
        for s in samples {
            let det = candidate.jacobian(s).determinant().abs();
            if det < real::<T>(0.05) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(LocalizedMap { map: candidate, r_inner: r, r_outer: r * real::<T>(2.0) });
        }
        r = r * real::<T>(0.5);
    }
    Err(GeometryError::DegenerateJacobian)
}
