//! Group-law tests against an independent oracle: the Engel algebra embedded
//! as strictly upper triangular 4×4 matrices, where exp/log are finite sums
//! and `log(exp(x)exp(y))` can be read off coordinate by coordinate.

use carnot_core::algebra::{self, basis};
use carnot_core::linalg::Mat;
use rand::{Rng, SeedableRng};

/// Faithful representation of the Engel algebra:
/// Z1 ↦ e12+e23, Z2 ↦ e34, Z3 ↦ e24, Z4 ↦ e14.
fn engel_rep(x: &[f64]) -> Mat<f64> {
    let mut m = Mat::zeros(4, 4);
    m[(0, 1)] = x[0];
    m[(1, 2)] = x[0];
    m[(2, 3)] = x[1];
    m[(1, 3)] = x[2];
    m[(0, 3)] = x[3];
    m
}

fn engel_unrep(m: &Mat<f64>) -> [f64; 4] {
    // Consistency of the two Z1 slots is asserted by the caller.
    [m[(0, 1)], m[(2, 3)], m[(1, 3)], m[(0, 3)]]
}

/// exp of a strictly upper triangular 4×4 (nilpotent: series stops at A³).
fn exp4(a: &Mat<f64>) -> Mat<f64> {
    let a2 = a.matmul(a);
    let a3 = a2.matmul(a);
    Mat::identity(4).add(a).add(&a2.scale(0.5)).add(&a3.scale(1.0 / 6.0))
}

/// log of a unipotent 4×4 (series in N = M − I stops at N³).
fn log4(m: &Mat<f64>) -> Mat<f64> {
    let n = m.sub(&Mat::identity(4));
    let n2 = n.matmul(&n);
    let n3 = n2.matmul(&n);
    n.sub(&n2.scale(0.5)).add(&n3.scale(1.0 / 3.0))
}

fn oracle_product(x: &[f64], y: &[f64]) -> [f64; 4] {
    let m = exp4(&engel_rep(x)).matmul(&exp4(&engel_rep(y)));
    let l = log4(&m);
    assert!((l[(0, 1)] - l[(1, 2)]).abs() < 1e-12, "image left the Engel subalgebra");
    engel_unrep(&l)
}

#[test]
fn engel_bch_matches_matrix_log_oracle() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.2..1.2)).collect();
        let y: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.2..1.2)).collect();
        let got = alg.bch_multiply(&x, &y);
        let want = oracle_product(&x, &y);
        for k in 0..4 {
            assert!(
                (got[k] - want[k]).abs() <= 1e-9,
                "coordinate {k}: {} vs oracle {}",
                got[k],
                want[k]
            );
        }
    }
}

#[test]
fn engel_basis_product_has_the_expected_third_and_fourth_coordinates() {
    let alg = algebra::engel::<f64>();
    let p = alg.bch_multiply(&basis(4, 0), &basis(4, 1));
    let want = oracle_product(&basis(4, 0), &basis(4, 1));
    assert!((p[0] - 1.0).abs() < 1e-14);
    assert!((p[1] - 1.0).abs() < 1e-14);
    assert!((p[2] - 0.5).abs() < 1e-14);
    assert!((p[3] - 1.0 / 12.0).abs() < 1e-14);
    for k in 0..4 {
        assert!((p[k] - want[k]).abs() < 1e-12);
    }
}

#[test]
fn associativity_on_random_engel_triples() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let y: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let z: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let left = alg.bch_multiply(&alg.bch_multiply(&x, &y), &z);
        let right = alg.bch_multiply(&x, &alg.bch_multiply(&y, &z));
        for k in 0..4 {
            worst = worst.max((left[k] - right[k]).abs());
        }
    }
    assert!(worst <= 1e-10, "worst associativity residual {worst}");
}

#[test]
fn inverses_and_identity() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let p = alg.bch_multiply(&x, &alg.inverse_point(&x));
        for k in 0..4 {
            assert!(p[k].abs() < 1e-12);
        }
        let q = alg.bch_multiply(&x, &vec![0.0; 4]);
        for k in 0..4 {
            assert!((q[k] - x[k]).abs() < 1e-13);
        }
    }
}

#[test]
fn one_parameter_subgroups_are_linear() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
    for _ in 0..50 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let (s, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let xs: Vec<f64> = x.iter().map(|&v| v * s).collect();
        let xt: Vec<f64> = x.iter().map(|&v| v * t).collect();
        let p = alg.bch_multiply(&xs, &xt);
        for k in 0..4 {
            assert!((p[k] - (s + t) * x[k]).abs() < 1e-11);
        }
    }
}

#[test]
fn dilations_are_group_automorphisms() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let y: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = rng.gen_range(0.3..2.5);
        let lhs = alg.dilate(r, &alg.bch_multiply(&x, &y)).unwrap();
        let rhs = alg.bch_multiply(&alg.dilate(r, &x).unwrap(), &alg.dilate(r, &y).unwrap());
        for k in 0..4 {
            assert!((lhs[k] - rhs[k]).abs() <= 1e-12 * (1.0 + lhs[k].abs()));
        }
        // δ_r ∘ δ_s = δ_rs
        let s = rng.gen_range(0.3..2.5);
        let a = alg.dilate(r, &alg.dilate(s, &x).unwrap()).unwrap();
        let b = alg.dilate(r * s, &x).unwrap();
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() <= 1e-12 * (1.0 + b[k].abs()));
        }
    }
}

#[test]
fn haar_measure_left_translation_is_volume_preserving() {
    // |det J_{L_x}(y)| = 1 by finite differences of the exact group law.
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let y: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let h = 1e-5;
        let mut jac = Mat::zeros(4, 4);
        for j in 0..4 {
            let mut yp = y.clone();
            let mut ym = y.clone();
            yp[j] += h;
            ym[j] -= h;
            let fp = alg.bch_multiply(&x, &yp);
            let fm = alg.bch_multiply(&x, &ym);
            for i in 0..4 {
                jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        assert!((jac.determinant().abs() - 1.0).abs() < 1e-6);
    }
}

#[test]
fn gauge_axioms() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    assert_eq!(alg.gauge(&vec![0.0; 4]), 0.0);
    for _ in 0..200 {
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let r = rng.gen_range(0.2..3.0);
        let lhs = alg.gauge(&alg.dilate(r, &x).unwrap());
        let rhs = r * alg.gauge(&x);
        assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        let inv = alg.gauge(&alg.inverse_point(&x));
        assert!((inv - alg.gauge(&x)).abs() <= 1e-14 * (1.0 + inv));
    }
}

#[test]
fn abelian_plane_gauge_satisfies_exact_triangle_inequality() {
    let alg = algebra::abelian::<f64>(2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
    let a0 = alg.estimate_a0(&mut rng, 20_000);
    assert!(a0 >= 1.0 - 1e-15);
    assert!(a0 <= 1.0 + 1e-9, "ℓ² gauge on ℝ² is an exact norm, got A0 = {a0}");
}

#[test]
fn quasi_triangle_estimate_is_at_least_one_on_engel() {
    let alg = algebra::engel::<f64>();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
    let a0 = alg.estimate_a0(&mut rng, 5_000);
    assert!(a0 >= 1.0 - 1e-12, "estimate {a0} fell below 1");
}
