//! Properness probes: the image defect must die along boundary rays.
//!
//! Properness is a limit statement; a finite probe can only evidence it.
//! The pass rule is pragmatic: the defect at the last grid radius must fall
//! below a threshold and decrease over the final grid steps, for every
//! sampled direction.

use super::plan::sample_directions;
use super::report::{Aux, Report, ResidualSweep};
use super::SamplePlan;
use crate::domains::boundary_defect;
use crate::error::{Error, Result};
use crate::mapzoo::BallMap;
use alloc::boxed::Box;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Defect threshold at the last grid radius.
pub const PROPER_FINAL_DEFECT: f64 = 0.05;

/// Residual reported for a direction whose defect tail fails to decrease;
/// it sits at the natural scale of the defect and always fails the probe.
const NON_DECREASING_SENTINEL: f64 = 1.0;

/// Default radius grid, increasing toward the boundary.
pub fn default_t_grid() -> Vec<f64> {
    alloc::vec![0.5, 0.75, 0.9, 0.95, 0.97, 0.99, 0.995, 0.998, 0.999]
}

/// Tabulates the image defect along `directions` random boundary rays.
///
/// Per direction the reported residual is the defect at the last radius, or
/// a sentinel at defect scale when the tail is not strictly decreasing; the
/// probe passes when every residual is below [`PROPER_FINAL_DEFECT`].
pub fn properness_probe(
    map: &dyn BallMap,
    directions: usize,
    t_grid: &[f64],
    seed: u64,
) -> Result<Report> {
    if t_grid.len() < 3 {
        return Err(Error::BadParameter(
            "radius grid needs at least three points".into(),
        ));
    }
    for w in t_grid.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadParameter("radius grid must increase".into()));
        }
    }
    if !(t_grid[0] > 0.0 && *t_grid.last().unwrap() < 1.0) {
        return Err(Error::BadParameter("radius grid must lie in (0, 1)".into()));
    }
    let target = map.target();
    let mut sweep = ResidualSweep::new();
    for (d, dir) in sample_directions(directions, seed, map.source_dim())
        .into_iter()
        .enumerate()
    {
        let mut defects = Vec::with_capacity(t_grid.len());
        for &t in t_grid {
            let z: Vec<Complex64> = dir.iter().map(|v| v * t).collect();
            let image = map.eval(&z).map_err(|e| Error::ProbeFailure {
                direction: d,
                source: Box::new(e),
            })?;
            defects.push(boundary_defect(&target, &image)?);
        }
        let k = defects.len();
        let tail_decreasing = defects[k - 3] > defects[k - 2] && defects[k - 2] > defects[k - 1];
        let residual = if tail_decreasing {
            defects[k - 1]
        } else {
            NON_DECREASING_SENTINEL
        };
        sweep.add(residual, &dir);
    }
    Ok(sweep.finish(
        "proper",
        map.label(),
        SamplePlan {
            count: directions,
            seed,
            rmax: t_grid.last().copied(),
        },
        PROPER_FINAL_DEFECT,
        Aux::None,
    ))
}
