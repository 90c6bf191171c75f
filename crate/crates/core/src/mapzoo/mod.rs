//! Constructors and evaluators for every explicit map family: the
//! angle-parametrized isometries into the Lie ball, the block constructions
//! over proper ball maps for all four classical targets, polynomial
//! isometries, zero padding, right rotations, compositions with
//! automorphisms, proper ball-to-ball generators, degree extraction, and
//! the gap-interval arithmetic.

mod canonical;
mod component;
mod families;
mod gap;
mod generators;
mod map;
mod poly;

pub use canonical::{
    build_hg_type1, build_hg_type2, build_hg_type3, build_hg_type4, build_i_type4,
    build_polynomial_isometry, build_r_type1, build_r_type2, build_r_type3, build_r_type4,
    build_wg, linear_embedding_2n, PolyIsometryKind,
};
pub use component::{MapComponent, Radical, Rational, DENOMINATOR_GUARD};
pub use families::{build_i, build_i_family4, build_mnk, build_r};
pub use gap::{gap_intervals, GapIntervals};
pub use generators::{homogeneous, identity_map, monomial_map, whitney};
pub use map::{compose, degree, pad_zero, rotate_real, BallMap, ComposedMap, HoloMap};
pub use poly::{PolyTable, COEFF_CLEAN_TOL};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{boundary_defect, AutBall, AutIV};
    use crate::linalg::CMatrix;
    use alloc::vec;
    use alloc::vec::Vec;
    use core::f64::consts::{FRAC_PI_4, FRAC_PI_6};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Fixed low-discrepancy interior points of the ball.
    fn sample_points(n: usize, count: usize, rmax: f64) -> Vec<Vec<Complex64>> {
        (0..count)
            .map(|s| {
                let mut z: Vec<Complex64> = (0..n)
                    .map(|i| {
                        let a = 0.37 * (s as f64 + 1.0) + 1.7 * i as f64;
                        let r = 0.5 + 0.5 * ((s * 7 + i * 3) % 11) as f64 / 11.0;
                        Complex64::from_polar(r, a)
                    })
                    .collect();
                let norm: f64 = z.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
                let scale = rmax * ((s % 9) as f64 + 1.0) / 9.0 / norm.max(1e-9);
                for v in z.iter_mut() {
                    *v *= scale;
                }
                z
            })
            .collect()
    }

    /// Max residual of the defect identity over fixed samples.
    fn isometry_defect_residual(map: &dyn BallMap) -> f64 {
        let mut worst = 0.0f64;
        for z in sample_points(map.source_dim(), 40, 0.85) {
            let img = map.eval(&z).unwrap();
            let defect = boundary_defect(&map.target(), &img).unwrap();
            let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
            let want = (1.0 - r2).powi(map.defect_exponent() as i32);
            worst = worst.max((defect - want).abs());
        }
        worst
    }

    #[test]
    fn all_families_fix_the_origin_and_satisfy_the_defect_identity() {
        let maps: Vec<HoloMap> = vec![
            build_r(2, 2, &[FRAC_PI_6]).unwrap(),
            build_r(3, 3, &[FRAC_PI_6, FRAC_PI_4]).unwrap(),
            build_r(3, 4, &[FRAC_PI_6, 0.3]).unwrap(),
            build_r(3, 5, &[FRAC_PI_6, 0.3, 0.2]).unwrap(),
            build_i(2, 2, &[FRAC_PI_6]).unwrap(),
            build_i(3, 4, &[FRAC_PI_6, 0.4, FRAC_PI_4]).unwrap(),
            build_i(2, 4, &[FRAC_PI_6, FRAC_PI_4, 0.5]).unwrap(),
            build_i_family4(3, 3, 0.5, Some(0.3), None).unwrap(),
            build_i_family4(2, 4, 0.5, Some(0.3), Some(0.6)).unwrap(),
            build_r_type1(2, 2).unwrap(),
            build_r_type1(2, 3).unwrap(),
            build_r_type2(4).unwrap(),
            build_r_type3(3).unwrap(),
            build_r_type4(3).unwrap(),
            build_i_type4(3).unwrap(),
            build_polynomial_isometry(PolyIsometryKind::TypeI, (2, 3)).unwrap(),
            build_polynomial_isometry(PolyIsometryKind::TypeII, (4, 0)).unwrap(),
            build_polynomial_isometry(PolyIsometryKind::TypeIII, (3, 0)).unwrap(),
            build_polynomial_isometry(PolyIsometryKind::TypeIV, (4, 0)).unwrap(),
            linear_embedding_2n(3).unwrap(),
        ];
        for map in &maps {
            let zero = vec![c(0.0, 0.0); map.source_dim];
            let at0 = map.eval_flat(&zero).unwrap();
            assert!(
                at0.iter().all(|v| v.norm() < 1e-12),
                "{} does not fix the origin",
                map.family
            );
            let res = isometry_defect_residual(map);
            assert!(res < 1e-11, "{}: residual {res:e}", map.family);
        }
    }

    #[test]
    fn i_family_quarter_angle_kills_first_square() {
        // cos(2 theta) = 0 at theta = pi/4, so the radicand only carries the
        // trailing coordinates
        let map = build_i(3, 2, &[FRAC_PI_4]).unwrap();
        let comp = map.components.last().unwrap();
        let rad = &comp.radical.as_ref().unwrap().radicand;
        assert_eq!(rad.coeff(&[2, 0, 0]), c(0.0, 0.0));
        assert_eq!(rad.coeff(&[0, 2, 0]), c(-1.0, 0.0));
        assert_eq!(rad.coeff(&[0, 0, 2]), c(-1.0, 0.0));
        let s = 1.0 / 2.0f64.sqrt();
        let z = [c(0.3, 0.1), c(0.2, 0.0), c(-0.1, 0.2)];
        let vals = map.eval_components(&z).unwrap();
        assert!((vals[0] - z[0] * s).norm() < 1e-15);
        assert!((vals[1] - z[0] * c(0.0, s)).norm() < 1e-15);
    }

    #[test]
    fn family_angle_counts_and_ranges() {
        assert!(build_i(2, 2, &[0.0]).is_err());
        assert!(build_i(2, 2, &[1.0]).is_err()); // > pi/4
        assert!(build_i(2, 2, &[0.3, 0.3]).is_err()); // too many angles
        assert!(build_r(2, 5, &[0.3, 0.3]).is_err()); // k > n + 2
        // not all angles may equal pi/4 in the all-paired radical families
        assert!(build_i(2, 3, &[FRAC_PI_4, FRAC_PI_4]).is_err());
        assert!(build_i(2, 4, &[FRAC_PI_4, FRAC_PI_4, 0.3]).is_err());
        assert!(build_i(2, 3, &[FRAC_PI_4, 0.3]).is_ok());
        // the mixing angle of the largest family is strictly interior
        assert!(build_i(2, 4, &[0.3, 0.3, FRAC_PI_4]).is_err());
        // family4 parameter coupling
        assert!(build_i_family4(3, 3, 0.2, Some(0.3), None).is_err()); // beta > theta
        assert!(build_i_family4(3, 3, 0.3, None, None).is_err()); // missing beta
        assert!(build_i_family4(2, 4, 0.3, Some(0.2), None).is_err()); // missing alpha
    }

    #[test]
    fn family4_reductions() {
        // theta = beta collapses to the equal-angle family
        let a = build_i_family4(3, 3, 0.3, Some(0.3), None).unwrap();
        let b = build_i(3, 3, &[0.3, 0.3]).unwrap();
        for z in sample_points(3, 10, 0.8) {
            let va = a.eval_flat(&z).unwrap();
            let vb = b.eval_flat(&z).unwrap();
            for (x, y) in va.iter().zip(&vb) {
                assert!((x - y).norm() < 1e-14);
            }
        }
        // k = 2 coincides with the plain I family
        let a = build_i_family4(3, 2, 0.4, None, None).unwrap();
        let b = build_i(3, 2, &[0.4]).unwrap();
        for z in sample_points(3, 10, 0.8) {
            let va = a.eval_flat(&z).unwrap();
            let vb = b.eval_flat(&z).unwrap();
            for (x, y) in va.iter().zip(&vb) {
                assert!((x - y).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn r_family_structure() {
        // denominator of the rational tail is 1 - z_n, total degree 2
        let map = build_r(2, 2, &[FRAC_PI_6]).unwrap();
        let tail = &map.components[2].rational;
        assert_eq!(tail.den.total_degree(), 1);
        assert_eq!(tail.den.coeff(&[0, 0]), c(1.0, 0.0));
        assert_eq!(tail.den.coeff(&[0, 1]), c(-1.0, 0.0));
        assert_eq!(degree(&map).unwrap(), 2);
    }

    #[test]
    fn canonical_type3_diagonal_entries() {
        // interior entries g_i g_j / (2 (g_1 - 1)) with the identity generator
        let m = 3;
        let map = build_r_type3(m).unwrap();
        let z = [c(0.2, 0.1), c(-0.3, 0.2), c(0.1, -0.4)];
        let img = map.eval(&z).unwrap();
        if let crate::domains::Point::Matrix(mat) = img {
            for i in 1..m {
                let want = z[i] * z[i] / (c(2.0, 0.0) * (z[0] - c(1.0, 0.0)));
                assert!((mat[(i, i)] - want).norm() < 1e-14);
            }
            let s = 1.0 / 2.0f64.sqrt();
            assert!((mat[(0, 1)] - z[1] * s).norm() < 1e-15);
        } else {
            panic!("expected matrix point");
        }
    }

    #[test]
    fn canonical_radical_lie_ball_values() {
        let m = 3;
        let map = build_i_type4(m).unwrap();
        // real point of norm 1/2: last component 1 - sqrt(3)/2
        let z = [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let vals = map.eval_flat(&z).unwrap();
        assert!((vals[3] - c(1.0 - 0.75f64.sqrt(), 0.0)).norm() < 1e-15);
        // isotropic point: sum of squares vanishes, image is (z, 0)
        let t = 0.4;
        let z = [c(t, 0.0), c(0.0, t), c(0.0, 0.0)];
        let vals = map.eval_flat(&z).unwrap();
        assert!(vals[3].norm() < 1e-15);
    }

    #[test]
    fn lie_ball_map_defect_along_a_ray() {
        let map = build_r_type4(3).unwrap();
        let z = [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let img = map.eval(&z).unwrap();
        let defect = boundary_defect(&map.target, &img).unwrap();
        assert!((defect - 0.75).abs() < 1e-13);
    }

    #[test]
    fn hg_constructions_validate_generators() {
        // too few components for the symmetric type
        let g = monomial_map(1, &[(vec![2], 1.0)]).unwrap();
        assert!(build_hg_type3(2, &g).is_err());
        // whitney-based Lie-ball construction satisfies the transfer identity
        let g = whitney(2).unwrap();
        let h = build_hg_type4(3, &g).unwrap();
        let w = build_wg(3, &g).unwrap();
        for z in sample_points(2, 20, 0.9) {
            let gsum: f64 = g
                .eval_flat(&z)
                .unwrap()
                .iter()
                .map(|v| v.norm_sqr())
                .sum();
            for map in [&h, &w] {
                let img = map.eval(&z).unwrap();
                let defect = boundary_defect(&map.target, &img).unwrap();
                assert!((defect - (1.0 - gsum)).abs() < 1e-12, "{}", map.family);
            }
        }
    }

    #[test]
    fn hg_type1_with_identity_is_canonical() {
        let gen = identity_map(3);
        let a = build_hg_type1(2, 2, &gen).unwrap();
        let b = build_r_type1(2, 2).unwrap();
        for z in sample_points(3, 5, 0.8) {
            assert_eq!(a.eval_flat(&z).unwrap(), b.eval_flat(&z).unwrap());
        }
    }

    #[test]
    fn mnk_examples() {
        // one variable, identity base, k = 1: (z, 1 - sqrt(1 - z^2))
        let base = identity_map(1);
        let m = build_mnk(&base, 1, None).unwrap();
        let z = [c(0.6, 0.0)];
        let vals = m.eval_flat(&z).unwrap();
        assert!((vals[0] - z[0]).norm() < 1e-15);
        assert!((vals[1] - c(1.0 - 0.8, 0.0)).norm() < 1e-15);

        // whitney base, all k admissible, defect transfers through the base
        let base = whitney(2).unwrap();
        for k in 1..=4 {
            let theta = (k >= 2).then_some(0.5);
            let m = build_mnk(&base, k, theta).unwrap();
            for z in sample_points(2, 10, 0.9) {
                let img = m.eval(&z).unwrap();
                let defect = boundary_defect(&m.target, &img).unwrap();
                let gsum: f64 = base
                    .eval_flat(&z)
                    .unwrap()
                    .iter()
                    .map(|v| v.norm_sqr())
                    .sum();
                assert!((defect - (1.0 - gsum)).abs() < 1e-12, "k = {k}");
            }
        }
        // k = N + 1 voids the plain block
        let m = build_mnk(&base, 4, Some(0.5)).unwrap();
        assert!(!m.notes.is_empty());
        // non-monomial bases are rejected
        assert!(build_mnk(&build_i_type4(2).unwrap(), 1, None).is_err());
    }

    #[test]
    fn linear_embedding_examples() {
        let map = linear_embedding_2n(1).unwrap();
        let z = [c(0.3, 0.4)];
        let vals = map.eval_flat(&z).unwrap();
        let s = 2.0f64.sqrt() / 2.0;
        assert!((vals[0] - z[0] * s).norm() < 1e-15);
        assert!((vals[1] - z[0] * c(0.0, s)).norm() < 1e-15);
        // F F^t vanishes identically
        let map = linear_embedding_2n(3).unwrap();
        for z in sample_points(3, 10, 0.9) {
            let vals = map.eval_flat(&z).unwrap();
            let ft: Complex64 = vals.iter().map(|v| v * v).sum();
            assert!(ft.norm() < 1e-15);
        }
        assert_eq!(degree(&map).unwrap(), 1);
    }

    #[test]
    fn polynomial_isometry_shapes() {
        let map = build_polynomial_isometry(PolyIsometryKind::TypeIV, (4, 0)).unwrap();
        let z = [c(0.2, 0.1), c(-0.1, 0.3), c(0.4, 0.0)];
        let vals = map.eval_flat(&z).unwrap();
        let sum: Complex64 = z.iter().map(|v| v * v).sum();
        let quarter = 2.0f64.sqrt() / 4.0;
        assert!((vals[3] + sum * quarter).norm() < 1e-15);
        assert!((vals[4] - sum * c(0.0, quarter)).norm() < 1e-15);

        // symmetric type: top-left entry vanishes
        let map = build_polynomial_isometry(PolyIsometryKind::TypeIII, (3, 0)).unwrap();
        if let crate::domains::Point::Matrix(mat) =
            map.eval(&[c(0.2, 0.0), c(0.1, 0.1)]).unwrap()
        {
            assert_eq!(mat[(0, 0)], c(0.0, 0.0));
        } else {
            panic!("expected matrix point");
        }
        assert!(map.is_polynomial);

        assert!(build_polynomial_isometry(PolyIsometryKind::TypeII, (3, 0)).is_err());
    }

    #[test]
    fn padding_preserves_residual_and_counts() {
        let base = build_r_type4(2).unwrap();
        let padded = pad_zero(&base, 2).unwrap();
        assert_eq!(padded.components.len(), 5);
        assert!(isometry_defect_residual(&padded) < 1e-12);
        assert!(pad_zero(&base, 0).is_err());
    }

    #[test]
    fn rotation_preserves_residual() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let base = pad_zero(&build_r_type4(2).unwrap(), 2).unwrap();
        let rot = crate::linalg::random_special_orthogonal(5, 0.5, &mut rng);
        let turned = rotate_real(&base, &rot).unwrap();
        assert!(isometry_defect_residual(&turned) < 1e-11);
    }

    #[test]
    fn composition_with_identity_is_pointwise_equal() {
        let map = build_i(2, 2, &[0.4]).unwrap();
        let composed = compose(
            &map,
            &AutBall::identity(2),
            Some(&AutIV::identity(4)),
        )
        .unwrap();
        for z in sample_points(2, 10, 0.8) {
            let a = map.eval_flat(&z).unwrap();
            let b = composed.eval_flat(&z).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn composition_with_unitary_rotation_preserves_residual() {
        // origin-preserving source rotation and an isotropy element of the
        // target keep the defect identity intact
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        let map = build_i(2, 2, &[0.4]).unwrap();
        let u = crate::linalg::expm_complex(&{
            let mut s = CMatrix::zeros(2, 2);
            s.set(0, 1, c(0.2, 0.3));
            s.set(1, 0, c(-0.2, 0.3));
            s.set(0, 0, c(0.0, 0.4));
            s.set(1, 1, c(0.0, -0.1));
            s
        });
        let phi = AutBall::new(vec![c(0.0, 0.0); 2], u).unwrap();
        let rot = crate::linalg::random_special_orthogonal(4, 0.4, &mut rng);
        let aut = AutIV::from_rotation(&rot).unwrap();
        let composed = compose(&map, &phi, Some(&aut)).unwrap();
        let res = isometry_defect_residual(&composed);
        assert!(res < 1e-11, "residual {res:e}");
    }

    #[test]
    fn degree_of_canonical_families() {
        assert_eq!(degree(&build_r_type4(4).unwrap()).unwrap(), 2);
        assert_eq!(degree(&build_r_type1(2, 3).unwrap()).unwrap(), 2);
        assert_eq!(degree(&build_r(3, 3, &[0.3, 0.4]).unwrap()).unwrap(), 2);
        assert_eq!(degree(&linear_embedding_2n(2).unwrap()).unwrap(), 1);
        assert!(degree(&build_i_type4(2).unwrap()).is_err());
    }
}
