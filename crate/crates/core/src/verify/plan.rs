//! Seeded sample plans: uniform points of the ball and uniform boundary
//! directions.

use crate::error::{Error, Result};
use crate::linalg::random_unit_vector;
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[cfg(not(test))]
use num_traits::Float;

/// How a sweep draws its sample points: a count, an RNG seed, and an
/// optional radius cap. The radial law is uniform-in-ball (radius
/// `u^(1/2n)` against a uniform direction).
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePlan {
    pub count: usize,
    pub seed: u64,
    pub rmax: Option<f64>,
}

impl SamplePlan {
    pub fn new(count: usize, seed: u64) -> Self {
        SamplePlan {
            count,
            seed,
            rmax: None,
        }
    }

    pub fn with_rmax(mut self, rmax: f64) -> Self {
        self.rmax = Some(rmax);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::BadParameter("sample count must be positive".into()));
        }
        if let Some(r) = self.rmax {
            if !(r > 0.0 && r < 1.0) {
                return Err(Error::BadParameter(format!(
                    "radius cap must lie in (0, 1), got {r}"
                )));
            }
        }
        Ok(())
    }
}

/// Uniform interior points of the ball of complex dimension `n`.
pub fn sample_ball_points(plan: &SamplePlan, n: usize) -> Result<Vec<Vec<Complex64>>> {
    plan.validate()?;
    let cap = plan.rmax.unwrap_or(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    Ok((0..plan.count)
        .map(|_| {
            let dir = complex_direction(n, &mut rng);
            let u: f64 = rng.random();
            let r = cap * u.powf(1.0 / (2.0 * n as f64));
            dir.into_iter().map(|d| d * r).collect()
        })
        .collect())
}

/// Uniform unit directions (points of the boundary sphere).
pub fn sample_directions(count: usize, seed: u64, n: usize) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| complex_direction(n, &mut rng)).collect()
}

fn complex_direction<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let reals = random_unit_vector(2 * n, rng);
    reals
        .chunks_exact(2)
        .map(|p| Complex64::new(p[0], p[1]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_interior() {
        let plan = SamplePlan::new(200, 42);
        let a = sample_ball_points(&plan, 3).unwrap();
        let b = sample_ball_points(&plan, 3).unwrap();
        assert_eq!(a, b);
        for z in &a {
            let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
            assert!(r2 < 1.0);
        }
        // different seeds decorrelate
        let c = sample_ball_points(&SamplePlan::new(200, 43), 3).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn radius_cap_is_respected() {
        let plan = SamplePlan::new(100, 7).with_rmax(0.5);
        for z in sample_ball_points(&plan, 2).unwrap() {
            let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
            assert!(r2 <= 0.25 + 1e-12);
        }
    }

    #[test]
    fn directions_have_unit_norm() {
        for d in sample_directions(50, 11, 4) {
            let r2: f64 = d.iter().map(|v| v.norm_sqr()).sum();
            assert!((r2 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bad_plans_are_rejected() {
        assert!(SamplePlan::new(0, 1).validate().is_err());
        assert!(SamplePlan::new(1, 1).with_rmax(1.5).validate().is_err());
    }
}
