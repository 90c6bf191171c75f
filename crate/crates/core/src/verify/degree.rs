//! Degree-bound instance checks for rational isometries into the Lie ball.

use super::plan::{sample_ball_points, SamplePlan};
use super::report::{Aux, Report, ResidualSweep};
use super::residual::max_isotropy_residual;
use super::TOL_FUNCTIONAL_EQ;
use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use crate::mapzoo::{degree, HoloMap};
use alloc::format;

/// Checks the degree bounds: the extracted degree must be 1 or 2, exactly 2
/// when `m < 2n`, and degree-1 maps must satisfy the isotropic normal form
/// (`F F^t = 0` and `|F|^2 = |z|^2` on samples).
///
/// Violations are reported at a unit sentinel residual against the
/// functional-equation tolerance; degree-1 maps report their sampled
/// normal-form residual.
pub fn degree_check(f: &HoloMap, plan: &SamplePlan) -> Result<Report> {
    let m = match f.target {
        DomainSpec::TypeIV(m) => m,
        ref other => {
            return Err(Error::BadParameter(format!(
                "degree bounds apply to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    let n = f.source_dim;
    if m < n + 1 || n + 1 < 3 {
        return Err(Error::BadParameter(format!(
            "degree bounds require m >= n + 1 >= 3, got m = {m}, n = {n}"
        )));
    }
    let d = degree(f)?;
    let mut sweep = ResidualSweep::new();
    if d != 1 && d != 2 {
        sweep.add(1.0, &[]);
    }
    if m < 2 * n && d != 2 {
        sweep.add(1.0, &[]);
    }
    if d == 1 {
        let points = sample_ball_points(plan, n)?;
        let (sq, norm) = max_isotropy_residual(f, &points)?;
        sweep.add(sq.max(norm), &[]);
    } else {
        sweep.add(0.0, &[]);
    }
    Ok(sweep.finish(
        "degree",
        f.family.clone(),
        plan.clone(),
        TOL_FUNCTIONAL_EQ,
        Aux::Degree(d),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapzoo::{build_r, build_r_type4, linear_embedding_2n};

    #[test]
    fn canonical_rational_map_has_degree_two() {
        let map = build_r_type4(3).unwrap(); // m + 1 = 4 < 2 m for m = 3
        let report = degree_check(&map, &SamplePlan::new(50, 42)).unwrap();
        assert!(report.pass);
        assert_eq!(report.witness.aux, Aux::Degree(2));
    }

    #[test]
    fn linear_embedding_passes_with_degree_one() {
        let map = linear_embedding_2n(3).unwrap(); // m = 2n, degree 1 allowed
        let report = degree_check(&map, &SamplePlan::new(200, 42)).unwrap();
        assert!(report.pass, "max {:e}", report.max_residual);
        assert_eq!(report.witness.aux, Aux::Degree(1));
    }

    #[test]
    fn rational_angle_family_has_degree_two() {
        let map = build_r(3, 2, &[0.4]).unwrap();
        let report = degree_check(&map, &SamplePlan::new(50, 42)).unwrap();
        assert!(report.pass);
        assert_eq!(report.witness.aux, Aux::Degree(2));
    }

    #[test]
    fn radical_maps_are_rejected() {
        let map = crate::mapzoo::build_i_type4(3).unwrap();
        assert!(degree_check(&map, &SamplePlan::new(10, 1)).is_err());
    }
}
