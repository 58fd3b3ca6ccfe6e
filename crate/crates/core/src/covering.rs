//! Bounded-multiplicity coverings by gauge balls and the associated partition
//! of unity of squares.

use crate::algebra::StratifiedAlgebra;
use crate::error::GeometryError;
use crate::scalar::{real, Real};

/// Smooth transition `0 → 1` on `[0, 1]` built from the classic `e^{-1/t}`
/// glue; identically 0 for `t ≤ 0` and 1 for `t ≥ 1`.
pub fn smooth_step<T: Real>(t: T) -> T {
    if t <= T::zero() {
        return T::zero();
    }
    if t >= T::one() {
        return T::one();
    }
    let f = |s: T| (-T::one() / s).exp();
    let a = f(t);
    let b = f(T::one() - t);
    a / (a + b)
}

/// Cutoff profile with plateau `[0, 1]` and support `[0, 2)`.
pub fn bump_profile<T: Real>(r: T) -> T {
    smooth_step((real::<T>(2.0) - r) / T::one())
}

/// Profile used by covering bumps: plateau `[0, 1/2]`, support `[0, 1)`.
fn covering_profile<T: Real>(r: T) -> T {
    smooth_step((T::one() - r) / real::<T>(0.5))
}

#[derive(Clone, Debug)]
pub struct CoveringSystem<T: Real> {
    alg: StratifiedAlgebra<T>,
    pub eps: T,
    /// Scaled centers `Γ_ε = δ_ε(Γ)`.
    pub centers: Vec<Vec<T>>,
    /// Measured multiplicity constant from the `C = 1` audit.
    pub multiplicity_m: T,
}

#[derive(Clone, Debug)]
pub struct MultiplicityAudit<T> {
    pub c: T,
    pub max_count: usize,
    pub bound: T,
}

impl<T: Real> CoveringSystem<T> {
    /// Unnormalized bump: `profile(ρ(δ_{1/ε}(γ^{-1}x)))`, supported in the
    /// gauge ball `B(γ, ε)`.
    pub fn raw_bump(&self, idx: usize, x: &[T]) -> T {
        let gamma = &self.centers[idx];
        let rel = self.alg.bch_multiply(&self.alg.inverse_point(gamma), x);
        let scaled = self.alg.dilate(T::one() / self.eps, &rel).expect("eps > 0");
        covering_profile(self.alg.gauge(&scaled))
    }

    pub fn sum_sq(&self, x: &[T]) -> T {
        (0..self.centers.len()).map(|i| {
            let b = self.raw_bump(i, x);
            b * b
        }).sum()
    }

    /// Normalized bump `η^γ_ε`; the squares sum to exactly 1 wherever the
    /// raw bumps cover.
    pub fn bump(&self, idx: usize, x: &[T]) -> T {
        let raw = self.raw_bump(idx, x);
        if raw == T::zero() {
            return T::zero();
        }
        raw / self.sum_sq(x).sqrt()
    }

    /// Indices whose support can touch `x`.
    pub fn active(&self, x: &[T]) -> Vec<usize> {
        (0..self.centers.len()).filter(|&i| self.raw_bump(i, x) > T::zero()).collect()
    }

    /// Max number of balls `B(γ, C·ε)` containing any of the probe points.
    pub fn multiplicity(&self, c: T, probes: &[Vec<T>]) -> usize {
        let radius = c * self.eps;
        probes
            .iter()
            .map(|x| {
                self.centers
                    .iter()
                    .filter(|g| self.alg.gauge_distance(x, g) < radius)
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// Audit `C ∈ {1,2,4}` against `(MC)^Q` with the measured `M`.
    pub fn multiplicity_audit(&self, probes: &[Vec<T>]) -> Vec<MultiplicityAudit<T>> {
        let q = self.alg.homogeneous_dimension() as f64;
        [1.0, 2.0, 4.0]
            .into_iter()
            .map(|c| {
                let count = self.multiplicity(real::<T>(c), probes);
                let bound = (self.multiplicity_m.to_f64().unwrap() * c).powf(q);
                MultiplicityAudit { c: real::<T>(c), max_count: count, bound: real::<T>(bound) }
            })
            .collect()
    }
}

/// Build a covering of the coordinate box `[-extent, extent]^d` at scale
/// `eps`: a maximal 1-separated center set for the dilated box, scaled back.
/// Every requested evaluation point is guaranteed covered (uncovered points
/// are themselves admissible centers, so they get added).
pub fn build_covering<T: Real>(
    alg: &StratifiedAlgebra<T>,
    eps: T,
    extent: T,
    must_cover: &[Vec<T>],
) -> Result<CoveringSystem<T>, GeometryError> {
    if extent <= T::zero() || eps <= T::zero() {
        return Err(GeometryError::EmptyBox);
    }
    let d = alg.dim();
    // Candidate grid over δ_{1/ε} of the box, step 1/4 per coordinate.
    let mut scaled_ext = Vec::with_capacity(d);
    for k in 0..d {
        let w = alg.weight(k) as i32;
        let e = extent.to_f64().unwrap() / eps.to_f64().unwrap().powi(w);
        scaled_ext.push(e);
    }
    let step = 0.25f64;
    let mut counts = Vec::with_capacity(d);
    for &e in &scaled_ext {
        counts.push(((2.0 * e / step).ceil() as usize).max(1) + 1);
    }
    let total: usize = counts.iter().product();
    assert!(total < 40_000_000, "covering candidate grid too large");
    let mut base: Vec<Vec<T>> = Vec::new();
    let mut idx = vec![0usize; d];
    'outer: loop {
        let p: Vec<T> = (0..d)
            .map(|k| real::<T>(-scaled_ext[k] + idx[k] as f64 * 2.0 * scaled_ext[k] / (counts[k] - 1).max(1) as f64))
            .collect();
        let separated = base.iter().all(|g| alg.gauge_distance(&p, g) >= T::one());
        if separated {
            base.push(p);
        }
        for k in 0..d {
            idx[k] += 1;
            if idx[k] < counts[k] {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    // Scale back.
    let mut centers: Vec<Vec<T>> =
        base.iter().map(|c| alg.dilate(eps, c).expect("eps > 0")).collect();
    // Coverage repair: an uncovered evaluation point is 1-separated from all
    // existing base centers, so it is itself a valid center.
    for x in must_cover {
        let covered = centers.iter().any(|g| alg.gauge_distance(x, g) < eps);
        if !covered {
            centers.push(x.clone());
        }
    }
    let mut system = CoveringSystem {
        alg: alg.clone(),
        eps,
        centers,
        multiplicity_m: T::one(),
    };
    let probes: Vec<Vec<T>> = if must_cover.is_empty() {
        system.centers.clone()
    } else {
        must_cover.to_vec()
    };
    let m1 = system.multiplicity(T::one(), &probes).max(1);
    let q = alg.homogeneous_dimension() as f64;
    system.multiplicity_m = real::<T>((m1 as f64).powf(1.0 / q)).max(T::one());
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra;

    #[test]
    fn smooth_step_endpoints() {
        assert_eq!(smooth_step::<f64>(-0.1), 0.0);
        assert_eq!(smooth_step::<f64>(1.2), 1.0);
        let mid = smooth_step::<f64>(0.5);
        assert!((mid - 0.5).abs() < 1e-15);
    }

    #[test]
    fn abelian_plane_covering_partition_and_multiplicity() {
        let alg = algebra::abelian::<f64>(2);
        let probes: Vec<Vec<f64>> = (0..40)
            .flat_map(|i| {
                (0..40).map(move |j| {
                    vec![-1.5 + 3.0 * i as f64 / 39.0, -1.5 + 3.0 * j as f64 / 39.0]
                })
            })
            .collect();
        let cov = build_covering(&alg, 1.0, 2.0, &probes).unwrap();
        for x in &probes {
            let mut s = 0.0;
            for i in 0..cov.centers.len() {
                let b = cov.bump(i, x);
                s += b * b;
            }
            assert!((s - 1.0).abs() < 1e-12, "partition defect {s} at {x:?}");
        }
        // centers are 1-separated so each carries its own plateau
        for (i, g) in cov.centers.iter().enumerate() {
            assert!((cov.bump(i, g) - 1.0).abs() < 1e-14);
        }
        let audit = cov.multiplicity_audit(&probes);
        assert!(audit[0].max_count <= 9, "radius-1 multiplicity {}", audit[0].max_count);
        for a in &audit {
            assert!((a.max_count as f64) <= a.bound.max(1.0) + 1e-9, "C={} count={} bound={}", a.c, a.max_count, a.bound);
        }
    }

    #[test]
    fn heisenberg_covering_covers_requested_points() {
        let alg = algebra::heisenberg::<f64>();
        let probes: Vec<Vec<f64>> = (0..125)
            .map(|i| {
                let a = (i % 5) as f64;
                let b = ((i / 5) % 5) as f64;
                let c = (i / 25) as f64;
                vec![-1.0 + a / 2.0, -1.0 + b / 2.0, -1.0 + c / 2.0]
            })
            .collect();
        let cov = build_covering(&alg, 0.8, 1.0, &probes).unwrap();
        for x in &probes {
            assert!(cov.sum_sq(x) > 0.0, "uncovered point {x:?}");
        }
    }
}
