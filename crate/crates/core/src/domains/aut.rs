//! Automorphisms: Moebius transforms of the unit ball and the indefinite
//! orthogonal action on the Lie ball.

use super::{lift_from_components, DomainSpec, Point};
use crate::error::{Error, Result};
use crate::linalg::{expm_real, random_j2_skew, CMatrix, RMatrix};
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// Automorphism of the unit ball: the Moebius involution centered at `a`
/// followed by a unitary rotation.
#[derive(Debug, Clone)]
pub struct AutBall {
    center: Vec<Complex64>,
    unitary: CMatrix,
}

impl AutBall {
    pub fn new(center: Vec<Complex64>, unitary: CMatrix) -> Result<Self> {
        let n = center.len();
        if unitary.rows() != n || unitary.cols() != n {
            return Err(Error::Dimension(format!(
                "unitary must be {n} x {n}, got {} x {}",
                unitary.rows(),
                unitary.cols()
            )));
        }
        let norm_sqr: f64 = center.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr >= 1.0 {
            return Err(Error::BadParameter(
                "center must lie inside the unit ball".into(),
            ));
        }
        let gram = unitary.hermitian().mul(&unitary);
        let defect = gram.sub(&CMatrix::identity(n)).norm_inf();
        if defect > 1e-12 {
            return Err(Error::BadParameter(format!(
                "matrix is not unitary (defect {defect:e})"
            )));
        }
        Ok(AutBall { center, unitary })
    }

    pub fn identity(n: usize) -> Self {
        AutBall {
            center: alloc::vec![Complex64::new(0.0, 0.0); n],
            unitary: CMatrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[Complex64] {
        &self.center
    }

    pub fn unitary(&self) -> &CMatrix {
        &self.unitary
    }
}

/// Applies the ball automorphism: with `U = I` the center is sent exactly
/// to the origin.
pub fn apply_aut_ball(phi: &AutBall, z: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = phi.dim();
    if z.len() != n {
        return Err(Error::Dimension(format!(
            "point has length {}, automorphism acts on dimension {n}",
            z.len()
        )));
    }
    let a = &phi.center;
    let a_sqr: f64 = a.iter().map(|v| v.norm_sqr()).sum();
    let moebius: Vec<Complex64> = if a_sqr == 0.0 {
        z.to_vec()
    } else {
        // <z, a> = sum z_i conj(a_i)
        let inner: Complex64 = z.iter().zip(a).map(|(zi, ai)| zi * ai.conj()).sum();
        let den = Complex64::new(1.0, 0.0) - inner;
        if den.norm() < 1e-14 {
            return Err(Error::SingularAction);
        }
        let s = (1.0 - a_sqr).sqrt();
        let proj = inner / Complex64::new(a_sqr, 0.0);
        (0..n)
            .map(|i| {
                let pz = proj * a[i];
                let qz = z[i] - pz;
                (a[i] - pz - Complex64::new(s, 0.0) * qz) / den
            })
            .collect()
    };
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| phi.unitary[(i, j)] * moebius[j])
                .sum::<Complex64>()
        })
        .collect())
}

/// Automorphism of the Lie ball `D_IV(m)`, stored as a real
/// `(m+2) x (m+2)` matrix preserving `J_2 = diag(I_m, -I_2)` with
/// `det(D) > 0` on its lower-right 2 x 2 block.
#[derive(Debug, Clone)]
pub struct AutIV {
    t: RMatrix,
}

impl AutIV {
    pub fn new(t: RMatrix) -> Result<Self> {
        let n = t.rows();
        if t.cols() != n || n < 4 {
            return Err(Error::Dimension(format!(
                "expected square matrix of size m+2 >= 4, got {} x {}",
                t.rows(),
                t.cols()
            )));
        }
        let m = n - 2;
        let mut j2 = RMatrix::identity(n);
        j2.set(m, m, -1.0);
        j2.set(m + 1, m + 1, -1.0);
        let defect = t.mul(&j2).mul(&t.transpose()).sub(&j2).norm_inf();
        if defect > 1e-10 {
            return Err(Error::BadParameter(format!(
                "matrix does not preserve the indefinite form (defect {defect:e})"
            )));
        }
        let det_d = t[(m, m)] * t[(m + 1, m + 1)] - t[(m, m + 1)] * t[(m + 1, m)];
        if det_d <= 0.0 {
            return Err(Error::BadParameter(format!(
                "lower-right block must have positive determinant, got {det_d}"
            )));
        }
        Ok(AutIV { t })
    }

    pub fn identity(m: usize) -> Self {
        AutIV {
            t: RMatrix::identity(m + 2),
        }
    }

    /// Block-diagonal automorphism `diag(A, I_2)` acting as `Z -> Z A`.
    pub fn from_rotation(a: &RMatrix) -> Result<Self> {
        let m = a.rows();
        if a.cols() != m {
            return Err(Error::Dimension("rotation block must be square".into()));
        }
        let mut t = RMatrix::identity(m + 2);
        for i in 0..m {
            for j in 0..m {
                t.set(i, j, a[(i, j)]);
            }
        }
        AutIV::new(t)
    }

    /// Random element of the identity component: `exp(t S)` for a random
    /// form-skew generator `S` and `t <= 0.5`, which keeps `det(D) > 0`.
    pub fn random<R: rand::Rng + ?Sized>(m: usize, scale: f64, rng: &mut R) -> Self {
        let s = random_j2_skew(m, scale.min(0.5), rng);
        AutIV::new(expm_real(&s)).expect("exponential lies in the identity component")
    }

    pub fn m(&self) -> usize {
        self.t.rows() - 2
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.t
    }
}

/// Action of an `AutIV` element on a Lie-ball point via the homogeneous
/// lift: the image is the first `m` lift coordinates of `xi(Z) T` divided by
/// the quadric-normalizing scalar.
pub fn apply_aut_iv(aut: &AutIV, z: &Point) -> Result<Point> {
    let m = aut.m();
    let spec = DomainSpec::TypeIV(m);
    z.check_shape(&spec)?;
    let flat = z.flatten();
    let w: Complex64 = flat.iter().map(|v| v * v).sum::<Complex64>() * 0.5;
    let lift = lift_from_components(&flat, w);
    let t = &aut.t;
    // row vector times matrix
    let image: Vec<Complex64> = (0..m + 2)
        .map(|j| {
            (0..m + 2)
                .map(|i| lift[i] * t[(i, j)])
                .sum::<Complex64>()
        })
        .collect();
    let sqrt2 = 2.0f64.sqrt();
    let mu = image[m] / sqrt2 + image[m + 1] * Complex64::new(0.0, 1.0 / sqrt2);
    if mu.norm() < 1e-14 {
        return Err(Error::SingularAction);
    }
    let out: Vec<Complex64> = image[..m].iter().map(|v| v / mu).collect();
    Ok(Point::vector(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{boundary_defect, contains, homogeneous_lift_iv};
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_ball_aut_is_identity() {
        let phi = AutBall::identity(2);
        let z = vec![c(0.3, 0.1), c(-0.2, 0.4)];
        assert_eq!(apply_aut_ball(&phi, &z).unwrap(), z);
    }

    #[test]
    fn center_maps_to_origin() {
        let phi = AutBall::new(vec![c(0.5, 0.0)], CMatrix::identity(1)).unwrap();
        let w = apply_aut_ball(&phi, &[c(0.5, 0.0)]).unwrap();
        assert!(w[0].norm() < 1e-15);
    }

    #[test]
    fn moebius_norm_identity() {
        let a = vec![c(0.3, -0.2), c(0.1, 0.25)];
        let phi = AutBall::new(a.clone(), CMatrix::identity(2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let z: Vec<Complex64> = (0..2)
                .map(|_| {
                    c(
                        0.4 * (rng.random::<f64>() - 0.5),
                        0.4 * (rng.random::<f64>() - 0.5),
                    )
                })
                .collect();
            let w = apply_aut_ball(&phi, &z).unwrap();
            let a_sqr: f64 = a.iter().map(|v| v.norm_sqr()).sum();
            let z_sqr: f64 = z.iter().map(|v| v.norm_sqr()).sum();
            let w_sqr: f64 = w.iter().map(|v| v.norm_sqr()).sum();
            let inner: Complex64 = z.iter().zip(&a).map(|(zi, ai)| zi * ai.conj()).sum();
            let want = (1.0 - a_sqr) * (1.0 - z_sqr) / (Complex64::new(1.0, 0.0) - inner).norm_sqr();
            assert!((1.0 - w_sqr - want).abs() < 1e-13);
        }
    }

    #[test]
    fn aut_iv_identity_acts_trivially() {
        let t = AutIV::identity(3);
        let z = Point::vector(vec![c(0.2, 0.1), c(-0.3, 0.0), c(0.05, 0.4)]);
        let w = apply_aut_iv(&t, &z).unwrap();
        for (a, b) in w.flatten().iter().zip(z.flatten()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn rotation_block_acts_linearly() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = 4;
        let rot = crate::linalg::random_special_orthogonal(m, 0.4, &mut rng);
        let aut = AutIV::from_rotation(&rot).unwrap();
        let z = vec![c(0.2, 0.05), c(-0.1, 0.1), c(0.3, 0.0), c(0.0, -0.2)];
        let w = apply_aut_iv(&aut, &Point::vector(z.clone())).unwrap().flatten();
        for j in 0..m {
            let want: Complex64 = (0..m).map(|i| z[i] * rot[(i, j)]).sum();
            assert!((w[j] - want).norm() < 1e-13);
        }
    }

    #[test]
    fn random_aut_iv_respects_lift_proportionality() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let m = 3;
        let spec = DomainSpec::TypeIV(m);
        for _ in 0..20 {
            let aut = AutIV::random(m, 0.4, &mut rng);
            let z = Point::vector(vec![
                c(0.2, -0.1) * rng.random::<f64>(),
                c(-0.15, 0.2) * rng.random::<f64>(),
                c(0.1, 0.1) * rng.random::<f64>(),
            ]);
            assert!(contains(&spec, &z).unwrap());
            let w = apply_aut_iv(&aut, &z).unwrap();
            assert!(contains(&spec, &w).unwrap());

            // xi(T(Z)) is proportional to xi(Z) T
            let lift_in = homogeneous_lift_iv(&z).unwrap();
            let lift_out = homogeneous_lift_iv(&w).unwrap();
            let t = aut.matrix();
            let moved: Vec<Complex64> = (0..m + 2)
                .map(|j| (0..m + 2).map(|i| lift_in[i] * t[(i, j)]).sum())
                .collect();
            let mu = moved[m + 1] / lift_out[m + 1];
            let mut worst = 0.0f64;
            for (a, b) in moved.iter().zip(&lift_out) {
                worst = worst.max((a - b * mu).norm());
            }
            assert!(worst < 1e-10, "proportionality defect {worst:e}");

            // defect transforms by |mu|^-2
            let d_in = boundary_defect(&spec, &z).unwrap();
            let d_out = boundary_defect(&spec, &w).unwrap();
            assert!((d_out * mu.norm_sqr() - d_in).abs() < 1e-11);
        }
    }

    #[test]
    fn zero_maps_into_domain_with_proportional_lift() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let m = 5;
        let aut = AutIV::random(m, 0.5, &mut rng);
        let z = Point::origin(&DomainSpec::TypeIV(m));
        let w = apply_aut_iv(&aut, &z).unwrap();
        assert!(contains(&DomainSpec::TypeIV(m), &w).unwrap());
        // xi(T(0)) is proportional to xi(0) T
        let lift_in = homogeneous_lift_iv(&z).unwrap();
        let lift_out = homogeneous_lift_iv(&w).unwrap();
        let t = aut.matrix();
        let moved: Vec<Complex64> = (0..m + 2)
            .map(|j| (0..m + 2).map(|i| lift_in[i] * t[(i, j)]).sum())
            .collect();
        let mu = moved[m + 1] / lift_out[m + 1];
        for (a, b) in moved.iter().zip(&lift_out) {
            assert!((a - b * mu).norm() < 1e-10);
        }
    }
}
