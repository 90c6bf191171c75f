//! Minimality certificates and the reduction of non-minimum isometries.

use super::dangelo::dangelo_solve;
use super::plan::{sample_ball_points, SamplePlan};
use super::report::{Aux, Report, ResidualSweep};
use super::residual::isometry_residual;
use crate::domains::{homogeneous_lift_iv, DomainSpec, Point};
use crate::error::{Error, Result};
use crate::linalg::{extend_orthonormal, real_kernel_vector, real_rank, RMatrix, DEFAULT_RANK_TOL};
use crate::mapzoo::{rotate_real, BallMap, HoloMap};
use alloc::format;
use alloc::vec::Vec;

/// Real rank of the sampled homogeneous lift components.
///
/// Stacks real and imaginary parts of the `m + 2` lift coordinates of
/// `F(z_i)` over at least `4 (m + 2)` samples; full rank is the necessary
/// condition for minimality. A scalar factor clearing denominators would
/// multiply every column alike, so sampling the affine lift certifies the
/// same rank as the cleared polynomial lift.
pub fn minimality_rank(map: &dyn BallMap, plan: &SamplePlan) -> Result<Report> {
    let m = match map.target() {
        DomainSpec::TypeIV(m) => m,
        other => {
            return Err(Error::BadParameter(format!(
                "minimality certificates apply to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    let n = map.source_dim();
    if m <= n {
        return Err(Error::BadParameter(format!(
            "no proper map exists into a Lie ball of dimension m = {m} <= n = {n}"
        )));
    }
    let mut counted = plan.clone();
    counted.count = plan.count.max(4 * (m + 2));
    let points = sample_ball_points(&counted, n)?;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(2 * points.len());
    for z in &points {
        let image = map.eval(z)?;
        let lift = homogeneous_lift_iv(&Point::vector(image.flatten()))?;
        rows.push(lift.iter().map(|v| v.re).collect());
        rows.push(lift.iter().map(|v| v.im).collect());
    }
    let stacked = RMatrix::from_rows(&rows);
    let rank = real_rank(&stacked, DEFAULT_RANK_TOL);
    let full = rank == m + 2;
    let mut sweep = ResidualSweep::new();
    // residual counts the missing rank so `pass` certifies fullness
    sweep.add((m + 2 - rank) as f64, &[]);
    Ok(sweep.finish(
        "minimality",
        map.label(),
        counted,
        0.5,
        Aux::Rank { rank, full },
    ))
}

/// Strips one dimension off a non-minimum isometry.
///
/// Finds a real unit vector annihilated by the stacked real and imaginary
/// parts of the coordinate-and-`h` rows of the fitted unitary, extends it to
/// an orthonormal basis `C` with the kernel vector last, and drops the
/// vanishing final component of `F C`. Returns `None` when the rows have no
/// real kernel (the map is not reducible by this mechanism).
pub fn reduce_nonminimal(
    f: &HoloMap,
    plan: &SamplePlan,
) -> Result<Option<(RMatrix, HoloMap)>> {
    let m = match f.target {
        DomainSpec::TypeIV(m) => m,
        ref other => {
            return Err(Error::BadParameter(format!(
                "reduction applies to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    let n = f.source_dim;
    let dec = dangelo_solve(f, plan)?;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(2 * (n + 1));
    for i in 0..=n {
        rows.push((0..m).map(|j| dec.v[(i, j)].re).collect());
        rows.push((0..m).map(|j| dec.v[(i, j)].im).collect());
    }
    let stacked = RMatrix::from_rows(&rows);
    let Some(kernel) = real_kernel_vector(&stacked) else {
        return Ok(None);
    };
    let c = extend_orthonormal(&kernel)?;
    let rotated = rotate_real(f, &c)?;

    // the last component of F C must vanish on samples
    let points = sample_ball_points(plan, n)?;
    let mut worst = 0.0f64;
    for z in &points {
        let values = rotated.eval_components(z)?;
        worst = worst.max(values[m - 1].norm());
    }
    if worst > 1e-9 {
        return Err(Error::IllConditioned(format!(
            "rotated last component only reaches {worst:e} over samples"
        )));
    }
    let reduced = HoloMap::new(
        format!("reduced({})", f.family),
        n,
        DomainSpec::TypeIV(m - 1),
        rotated.components[..m - 1].to_vec(),
        f.defect_exponent,
    )?;
    // the reduction must remain an isometry
    let gate = isometry_residual(&reduced, plan)?;
    if !gate.pass {
        return Err(Error::NotIsometric {
            residual: gate.max_residual,
            tolerance: gate.tolerance,
        });
    }
    Ok(Some((c, reduced)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapzoo::{build_i, build_r_type4, pad_zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn radical_family_lift_has_full_rank() {
        for n in [2usize, 3] {
            let map = build_i(n, 2, &[core::f64::consts::FRAC_PI_6]).unwrap();
            let report = minimality_rank(&map, &SamplePlan::new(100, 42)).unwrap();
            assert!(report.pass);
            match report.witness.aux {
                Aux::Rank { rank, full } => {
                    assert_eq!(rank, n + 4);
                    assert!(full);
                }
                ref other => panic!("unexpected aux {other:?}"),
            }
        }
    }

    #[test]
    fn padded_map_is_rank_deficient() {
        let map = pad_zero(&build_r_type4(2).unwrap(), 5).unwrap();
        let report = minimality_rank(&map, &SamplePlan::new(100, 42)).unwrap();
        assert!(!report.pass);
        match report.witness.aux {
            Aux::Rank { rank, full } => {
                assert!(rank < 10, "rank {rank}");
                assert!(!full);
            }
            ref other => panic!("unexpected aux {other:?}"),
        }
    }

    #[test]
    fn undersized_targets_are_rejected() {
        let map = build_r_type4(2).unwrap(); // B^2 -> D_IV(3)
        assert!(minimality_rank(&map, &SamplePlan::new(50, 1)).is_ok());
        // a fake map with m <= n cannot even be requested
        let bad = build_i(3, 2, &[0.4]).unwrap(); // B^3 -> D_IV(5)
        assert!(minimality_rank(&bad, &SamplePlan::new(50, 1)).is_ok());
        // simulate m <= n via a padded source: build_i(3,2) has m = 5 > 3,
        // so instead check the guard directly on a slice map is impossible;
        // the guard is covered through the public contract below
        let err = {
            // B^3 into D_IV(3): not constructible through shipped builders,
            // so exercise the guard with a hand-made linear map
            use crate::mapzoo::{HoloMap, MapComponent, PolyTable};
            let comps = (0..3)
                .map(|i| MapComponent::from_poly(PolyTable::var(3, i).scale(num_complex::Complex64::new(0.5, 0.0))))
                .collect();
            let map = HoloMap::new("squeeze", 3, DomainSpec::TypeIV(3), comps, 1).unwrap();
            minimality_rank(&map, &SamplePlan::new(50, 1))
        };
        assert!(err.is_err());
    }

    #[test]
    fn padding_then_reduction_recovers_the_original_dimension() {
        let base = build_r_type4(2).unwrap(); // B^2 -> D_IV(3)
        let padded = pad_zero(&base, 3).unwrap(); // D_IV(6)
        let plan = SamplePlan::new(120, 42);
        let mut current = padded;
        let mut steps = 0;
        while let Some((c, next)) = reduce_nonminimal(&current, &plan).unwrap() {
            assert!(c.orthogonality_defect() < 1e-12);
            current = next;
            steps += 1;
            assert!(steps <= 3, "reduction failed to terminate");
        }
        assert_eq!(current.target, DomainSpec::TypeIV(3));
    }

    #[test]
    fn rotated_padding_still_reduces() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let base = build_i(2, 2, &[0.5]).unwrap(); // B^2 -> D_IV(4)
        let padded = pad_zero(&base, 4).unwrap(); // m = 8 > 2n + 2 = 6
        let rot = crate::linalg::random_special_orthogonal(8, 0.5, &mut rng);
        let turned = crate::mapzoo::rotate_real(&padded, &rot).unwrap();
        let plan = SamplePlan::new(150, 42);
        let (_, reduced) = reduce_nonminimal(&turned, &plan).unwrap().unwrap();
        assert_eq!(reduced.target, DomainSpec::TypeIV(7));
        assert!(isometry_residual(&reduced, &plan).unwrap().pass);
    }

    #[test]
    fn minimum_families_do_not_reduce() {
        let map = build_i(2, 2, &[core::f64::consts::FRAC_PI_6]).unwrap();
        let plan = SamplePlan::new(100, 42);
        assert!(reduce_nonminimal(&map, &plan).unwrap().is_none());
    }
}
