//! Metric pullback cross-check: finite-difference Jacobians against the
//! finite-difference target metric, compared with the scaled exact ball
//! metric.

use super::plan::{sample_ball_points, SamplePlan};
use super::report::{Aux, Report, ResidualSweep};
use super::residual::check_base_point;
use super::TOL_METRIC;
use crate::domains::{ball_metric_exact, metric_flat_for, DomainSpec};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::mapzoo::BallMap;
use num_complex::Complex64;

/// Step of the central complex differences building the Jacobian.
pub const JACOBIAN_STEP: f64 = 1e-5;

const METRIC_RADIUS_CAP: f64 = 0.8;

/// Pulls the target Bergman metric back through the map at interior samples
/// and compares with `lambda * (exact ball metric)`, where the isometric
/// constant estimate `lambda` is fit at the origin. The report carries
/// `lambda` in its witness.
pub fn metric_pullback(map: &dyn BallMap, plan: &SamplePlan, h: f64) -> Result<Report> {
    check_base_point(map)?;
    if let Some(r) = plan.rmax {
        if r > METRIC_RADIUS_CAP {
            return Err(Error::NearBoundary { step: h });
        }
    }
    let mut capped = plan.clone();
    capped.rmax = Some(plan.rmax.unwrap_or(METRIC_RADIUS_CAP));
    let n = map.source_dim();

    let origin = alloc::vec![Complex64::new(0.0, 0.0); n];
    let p0 = pullback_at(map, &origin, h)?;
    let mut trace = 0.0;
    for i in 0..n {
        trace += p0[(i, i)].re;
    }
    let lambda = trace / (n as f64 * (n as f64 + 1.0));

    let mut sweep = ResidualSweep::new();
    for z in sample_ball_points(&capped, n)? {
        let pulled = pullback_at(map, &z, h)?;
        let expected = ball_metric_exact(n, &z).scale(Complex64::new(lambda, 0.0));
        let scale = expected.norm_inf().max(1e-300);
        let deviation = pulled.sub(&expected).norm_inf() / scale;
        sweep.add(deviation, &z);
    }
    Ok(sweep.finish(
        "metric",
        map.label(),
        plan.clone(),
        TOL_METRIC,
        Aux::Lambda(lambda),
    ))
}

/// `J g(F(z)) J^H` with both factors from central differences.
fn pullback_at(map: &dyn BallMap, z: &[Complex64], h: f64) -> Result<CMatrix> {
    let n = z.len();
    let image = map.eval_flat(z)?;
    let flat_len = image.len();
    // holomorphic derivative along each source coordinate
    let mut jac = CMatrix::zeros(n, flat_len);
    for a in 0..n {
        let mut plus = z.to_vec();
        plus[a] += Complex64::new(JACOBIAN_STEP, 0.0);
        let mut minus = z.to_vec();
        minus[a] -= Complex64::new(JACOBIAN_STEP, 0.0);
        let fp = map.eval_flat(&plus)?;
        let fm = map.eval_flat(&minus)?;
        for i in 0..flat_len {
            jac.set(a, i, (fp[i] - fm[i]) / (2.0 * JACOBIAN_STEP));
        }
    }
    let target = map.target();
    let g = metric_flat_for(&target, &image, h);
    Ok(jac.mul(&g).mul(&jac.hermitian()))
}

/// Isometric constant a defect identity with exponent `e` into `target`
/// forces: `genus * e / (n + 1)`.
pub fn expected_lambda(target: &DomainSpec, e: u32, source_dim: usize) -> f64 {
    target.genus() as f64 * e as f64 / (source_dim as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapzoo::{build_i, build_r_type3, build_r_type4, BallMap};

    #[test]
    fn canonical_lie_ball_constant_is_one() {
        let map = build_r_type4(3).unwrap();
        let plan = SamplePlan::new(12, 42);
        let report = metric_pullback(&map, &plan, 1e-4).unwrap();
        assert!(report.pass, "max {:e}", report.max_residual);
        match report.witness.aux {
            Aux::Lambda(l) => assert!((l - 1.0).abs() < 1e-6, "lambda {l}"),
            ref other => panic!("unexpected aux {other:?}"),
        }
    }

    #[test]
    fn radical_family_constant_matches_dimension_ratio() {
        let n = 2;
        let map = build_i(n, 2, &[0.5]).unwrap();
        let plan = SamplePlan::new(10, 42);
        let report = metric_pullback(&map, &plan, 1e-4).unwrap();
        let want = (n as f64 + 2.0) / (n as f64 + 1.0);
        match report.witness.aux {
            Aux::Lambda(l) => assert!((l - want).abs() / want < 1e-6, "lambda {l}"),
            ref other => panic!("unexpected aux {other:?}"),
        }
        assert!(report.max_residual < 1e-5, "max {:e}", report.max_residual);
        assert_eq!(
            expected_lambda(&map.target(), map.defect_exponent(), n),
            want
        );
    }

    #[test]
    fn symmetric_matrix_target_constant_is_one() {
        let map = build_r_type3(2).unwrap();
        let plan = SamplePlan::new(6, 42);
        let report = metric_pullback(&map, &plan, 1e-4).unwrap();
        assert!(report.pass, "max {:e}", report.max_residual);
        match report.witness.aux {
            Aux::Lambda(l) => assert!((l - 1.0).abs() < 1e-6, "lambda {l}"),
            ref other => panic!("unexpected aux {other:?}"),
        }
    }

    #[test]
    fn oversized_radius_is_rejected() {
        let map = build_r_type4(2).unwrap();
        let plan = SamplePlan::new(5, 1).with_rmax(0.95);
        assert!(matches!(
            metric_pullback(&map, &plan, 1e-4),
            Err(Error::NearBoundary { .. })
        ));
    }
}
