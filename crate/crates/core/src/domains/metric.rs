//! Bergman metrics: the closed-form ball metric and a central finite
//! difference Hessian of `log` kernel factor for every domain kind.

use super::{contains, defect_flat, DomainSpec, Point};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// Default finite-difference step; against the exact ball oracle this meets
/// a 1e-6 relative error budget for radii up to 0.8.
pub const DEFAULT_METRIC_STEP: f64 = 1e-4;

/// Closed-form Bergman metric of the unit ball:
/// `(n+1) [ (1-|z|^2) delta_ij + conj(z_i) z_j ] / (1-|z|^2)^2`.
pub fn ball_metric_exact(n: usize, z: &[Complex64]) -> CMatrix {
    assert_eq!(z.len(), n);
    let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
    assert!(r2 < 1.0, "point must lie inside the ball");
    let denom = (1.0 - r2) * (1.0 - r2);
    let mut g = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = z[i].conj() * z[j];
            if i == j {
                v += Complex64::new(1.0 - r2, 0.0);
            }
            g.set(i, j, v * ((n as f64 + 1.0) / denom));
        }
    }
    g
}

/// Bergman metric `g_{i j̄} = d^2 log K / dz_i dz̄_j` over the flattened
/// ambient coordinates, by central second differences in the underlying real
/// coordinates: `d^2/dz dz̄ = (d^2/dx^2 + d^2/dy^2)/4` on the diagonal and
/// the 4-point mixed stencil off the diagonal.
///
/// Points with kernel factor defect `<= 100 h` are rejected as too close to
/// the boundary for the stencil.
pub fn metric(spec: &DomainSpec, point: &Point, h: f64) -> Result<CMatrix> {
    if !contains(spec, point)? {
        return Err(Error::OutsideDomain);
    }
    let flat = point.flatten();
    if defect_flat(spec, &flat) <= 100.0 * h {
        return Err(Error::NearBoundary { step: h });
    }
    Ok(metric_flat(spec, &flat, h))
}

/// The same stencil on flattened ambient coordinates without the membership
/// guard; pullback sweeps perturb matrix entries independently and validate
/// membership on their own schedule.
pub fn metric_flat_for(spec: &DomainSpec, flat: &[Complex64], h: f64) -> CMatrix {
    metric_flat(spec, flat, h)
}

pub(crate) fn metric_flat(spec: &DomainSpec, flat: &[Complex64], h: f64) -> CMatrix {
    let n = flat.len();
    let genus = spec.genus() as f64;
    let phi = |pt: &[Complex64]| -> f64 { -genus * defect_flat(spec, pt).ln() };

    // perturbation helper: real offsets per complex coordinate,
    // axis 0 = real part, axis 1 = imaginary part
    let shifted = |shifts: &[(usize, usize, f64)]| -> f64 {
        let mut pt: Vec<Complex64> = flat.to_vec();
        for &(idx, axis, delta) in shifts {
            if axis == 0 {
                pt[idx] += Complex64::new(delta, 0.0);
            } else {
                pt[idx] += Complex64::new(0.0, delta);
            }
        }
        phi(&pt)
    };

    let phi0 = phi(flat);
    let mut g = CMatrix::zeros(n, n);
    for i in 0..n {
        // second differences in x_i and y_i
        let dxx = (shifted(&[(i, 0, h)]) - 2.0 * phi0 + shifted(&[(i, 0, -h)])) / (h * h);
        let dyy = (shifted(&[(i, 1, h)]) - 2.0 * phi0 + shifted(&[(i, 1, -h)])) / (h * h);
        g.set(i, i, Complex64::new(0.25 * (dxx + dyy), 0.0));
    }
    let mixed = |i: usize, ai: usize, j: usize, aj: usize| -> f64 {
        (shifted(&[(i, ai, h), (j, aj, h)]) - shifted(&[(i, ai, h), (j, aj, -h)])
            - shifted(&[(i, ai, -h), (j, aj, h)])
            + shifted(&[(i, ai, -h), (j, aj, -h)]))
            / (4.0 * h * h)
    };
    for i in 0..n {
        for j in i + 1..n {
            let xx = mixed(i, 0, j, 0);
            let yy = mixed(i, 1, j, 1);
            let xy = mixed(i, 0, j, 1);
            let yx = mixed(i, 1, j, 0);
            let val = Complex64::new(0.25 * (xx + yy), 0.25 * (xy - yx));
            g.set(i, j, val);
            g.set(j, i, val.conj());
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_rel_dev(a: &CMatrix, b: &CMatrix) -> f64 {
        let scale = b.norm_inf().max(1e-300);
        a.sub(b).norm_inf() / scale
    }

    #[test]
    fn ball_metric_at_origin() {
        let spec = DomainSpec::Ball(3);
        let g = metric(&spec, &Point::origin(&spec), DEFAULT_METRIC_STEP).unwrap();
        let want = CMatrix::identity(3).scale(c(4.0, 0.0));
        assert!(max_rel_dev(&g, &want) < 1e-6);
    }

    #[test]
    fn ball_metric_one_dim_interior() {
        let spec = DomainSpec::Ball(1);
        let p = Point::vector(vec![c(0.5, 0.0)]);
        let g = metric(&spec, &p, DEFAULT_METRIC_STEP).unwrap();
        let want = 2.0 / (1.0 - 0.25f64).powi(2);
        assert!((g[(0, 0)].re - want).abs() / want < 1e-6);
        assert!(g[(0, 0)].im.abs() < 1e-8);
    }

    #[test]
    fn finite_differences_match_exact_ball_metric() {
        let spec = DomainSpec::Ball(2);
        for z in [
            vec![c(0.1, -0.3), c(0.2, 0.1)],
            vec![c(0.5, 0.3), c(-0.4, 0.2)],
            vec![c(0.0, 0.79), c(0.1, 0.0)],
        ] {
            let fd = metric(&spec, &Point::vector(z.clone()), DEFAULT_METRIC_STEP).unwrap();
            let exact = ball_metric_exact(2, &z);
            assert!(max_rel_dev(&fd, &exact) < 1e-6, "z = {z:?}");
        }
    }

    #[test]
    fn lie_ball_metric_at_origin_is_genus_times_identity() {
        for m in [2usize, 4] {
            let spec = DomainSpec::TypeIV(m);
            let g = metric(&spec, &Point::origin(&spec), DEFAULT_METRIC_STEP).unwrap();
            let want = CMatrix::identity(m).scale(c(m as f64, 0.0));
            assert!(max_rel_dev(&g, &want) < 1e-6);
        }
    }

    #[test]
    fn near_boundary_points_are_rejected() {
        let spec = DomainSpec::Ball(1);
        let p = Point::vector(vec![c(0.999999, 0.0)]);
        assert!(matches!(
            metric(&spec, &p, 1e-4),
            Err(Error::NearBoundary { .. })
        ));
    }
}
