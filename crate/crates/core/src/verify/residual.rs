//! Defect functional-equation residual sweeps.

use super::plan::{sample_ball_points, SamplePlan};
use super::report::{Aux, Report, ResidualSweep};
use super::TOL_FUNCTIONAL_EQ;
use crate::domains::boundary_defect;
use crate::error::{Error, Result};
use crate::mapzoo::BallMap;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

pub(crate) fn check_base_point(map: &dyn BallMap) -> Result<()> {
    let zero = vec![Complex64::new(0.0, 0.0); map.source_dim()];
    let at0 = map.eval_flat(&zero)?;
    let norm = at0.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if norm > 1e-12 {
        return Err(Error::BasePoint { norm });
    }
    Ok(())
}

/// Max over samples of `|defect(F(z)) - (1 - |z|^2)^e|` at the default
/// tolerance.
pub fn isometry_residual(map: &dyn BallMap, plan: &SamplePlan) -> Result<Report> {
    isometry_residual_tol(map, plan, TOL_FUNCTIONAL_EQ)
}

/// Same sweep with an explicit tolerance.
pub fn isometry_residual_tol(
    map: &dyn BallMap,
    plan: &SamplePlan,
    tolerance: f64,
) -> Result<Report> {
    check_base_point(map)?;
    let target = map.target();
    let e = map.defect_exponent() as i32;
    let mut sweep = ResidualSweep::new();
    for z in sample_ball_points(plan, map.source_dim())? {
        let image = map.eval(&z)?;
        let defect = boundary_defect(&target, &image)?;
        let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
        let residual = (defect - (1.0 - r2).powi(e)).abs();
        sweep.add(residual, &z);
    }
    Ok(sweep.finish("isometry", map.label(), plan.clone(), tolerance, Aux::None))
}

/// Max over samples of `|defect(F(z)) - (1 - sum |g_i(z)|^2)^e|`: the
/// identity a block construction inherits from its generator, which holds
/// for proper-but-not-isometric generators as well.
pub fn relative_defect_residual(
    map: &dyn BallMap,
    generator: &dyn BallMap,
    plan: &SamplePlan,
) -> Result<Report> {
    if map.source_dim() != generator.source_dim() {
        return Err(Error::Dimension(
            "map and generator must share a source ball".into(),
        ));
    }
    let target = map.target();
    let e = map.defect_exponent() as i32;
    let mut sweep = ResidualSweep::new();
    for z in sample_ball_points(plan, map.source_dim())? {
        let image = map.eval(&z)?;
        let defect = boundary_defect(&target, &image)?;
        let gsum: f64 = generator
            .eval_flat(&z)?
            .iter()
            .map(|v| v.norm_sqr())
            .sum();
        let residual = (defect - (1.0 - gsum).powi(e)).abs();
        sweep.add(residual, &z);
    }
    Ok(sweep.finish(
        "relative_defect",
        map.label(),
        plan.clone(),
        TOL_FUNCTIONAL_EQ,
        Aux::None,
    ))
}

/// Worst-case evaluation of `F F^t` over samples, used by the degree-one
/// normal-form checks.
pub(crate) fn max_isotropy_residual(
    map: &dyn BallMap,
    points: &[Vec<Complex64>],
) -> Result<(f64, f64)> {
    let mut worst_sq = 0.0f64;
    let mut worst_norm = 0.0f64;
    for z in points {
        let vals = map.eval_flat(z)?;
        let sq: Complex64 = vals.iter().map(|v| v * v).sum();
        let n2: f64 = vals.iter().map(|v| v.norm_sqr()).sum();
        let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
        worst_sq = worst_sq.max(sq.norm());
        worst_norm = worst_norm.max((n2 - r2).abs());
    }
    Ok((worst_sq, worst_norm))
}
