//! The four classical bounded matrix/vector domains, their defining
//! positivity conditions, Bergman kernel factors and metrics, and the
//! automorphism groups used by the verification harness.

mod aut;
mod metric;
mod point;

pub use aut::{AutBall, AutIV, apply_aut_ball, apply_aut_iv};
pub use metric::{ball_metric_exact, metric, metric_flat_for, DEFAULT_METRIC_STEP};
pub use point::Point;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// Symmetry tolerance accepted when constructing matrix-shaped points.
pub const POINT_SYMMETRY_TOL: f64 = 1e-12;

/// One of the classical bounded symmetric domains.
///
/// `Ball(n)` is the unit ball in `C^n`; `TypeI(p, q)` the p x q contractive
/// matrices (q >= p >= 1); `TypeII(n)` its skew-symmetric and `TypeIII(n)`
/// its symmetric slice; `TypeIV(m)` the Lie ball in `C^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainSpec {
    Ball(usize),
    TypeI(usize, usize),
    TypeII(usize),
    TypeIII(usize),
    TypeIV(usize),
}

/// Ambient shape of a point of a domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointShape {
    Vector(usize),
    Matrix(usize, usize),
}

impl DomainSpec {
    /// Rejects parameter combinations outside the classical ranges.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            DomainSpec::Ball(n) => n >= 1,
            DomainSpec::TypeI(p, q) => p >= 1 && q >= p,
            DomainSpec::TypeII(n) => n >= 2,
            DomainSpec::TypeIII(n) => n >= 1,
            DomainSpec::TypeIV(m) => m >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParameter(format!("invalid domain {self:?}")))
        }
    }

    /// Exponent on the kernel factor in the Bergman kernel of the domain.
    pub fn genus(&self) -> usize {
        match *self {
            DomainSpec::Ball(n) => n + 1,
            DomainSpec::TypeI(p, q) => p + q,
            DomainSpec::TypeII(n) => n - 1,
            DomainSpec::TypeIII(n) => n + 1,
            DomainSpec::TypeIV(m) => m,
        }
    }

    /// Shape of the ambient data holding a point.
    pub fn shape(&self) -> PointShape {
        match *self {
            DomainSpec::Ball(n) => PointShape::Vector(n),
            DomainSpec::TypeI(p, q) => PointShape::Matrix(p, q),
            DomainSpec::TypeII(n) => PointShape::Matrix(n, n),
            DomainSpec::TypeIII(n) => PointShape::Matrix(n, n),
            DomainSpec::TypeIV(m) => PointShape::Vector(m),
        }
    }

    /// Number of complex entries in the flattened ambient representation.
    pub fn flat_len(&self) -> usize {
        match self.shape() {
            PointShape::Vector(n) => n,
            PointShape::Matrix(r, c) => r * c,
        }
    }

    /// Number of independent map components used to describe a point
    /// (strict upper triangle for skew matrices, upper triangle for
    /// symmetric ones, everything otherwise).
    pub fn component_count(&self) -> usize {
        match *self {
            DomainSpec::TypeII(n) => n * (n - 1) / 2,
            DomainSpec::TypeIII(n) => n * (n + 1) / 2,
            other => other.flat_len(),
        }
    }

    /// Largest dimension of a unit ball admitting a holomorphic isometry
    /// into this domain. Rejected for balls.
    pub fn max_ball_dimension(&self) -> Result<usize> {
        match *self {
            DomainSpec::Ball(_) => Err(Error::BadParameter(
                "maximal ball dimension is defined for the matrix and Lie-ball domains only".into(),
            )),
            DomainSpec::TypeI(p, q) => Ok(p + q - 1),
            DomainSpec::TypeII(n) => Ok(2 * n - 3),
            DomainSpec::TypeIII(n) => Ok(n),
            DomainSpec::TypeIV(m) => Ok(m - 1),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            DomainSpec::Ball(n) => format!("B^{n}"),
            DomainSpec::TypeI(p, q) => format!("D_I({p},{q})"),
            DomainSpec::TypeII(n) => format!("D_II({n})"),
            DomainSpec::TypeIII(n) => format!("D_III({n})"),
            DomainSpec::TypeIV(m) => format!("D_IV({m})"),
        }
    }
}

/// Kernel factor (boundary defect) evaluated on flattened ambient data,
/// without any shape or symmetry validation.
///
/// The metric code differentiates through this, and its perturbed inputs are
/// not symmetric/skew; the determinant formula is well defined regardless.
pub(crate) fn defect_flat(spec: &DomainSpec, flat: &[Complex64]) -> f64 {
    debug_assert_eq!(flat.len(), spec.flat_len());
    match *spec {
        DomainSpec::Ball(_) => 1.0 - flat.iter().map(|z| z.norm_sqr()).sum::<f64>(),
        DomainSpec::TypeI(p, q) => gram_det(flat, p, q),
        DomainSpec::TypeII(n) | DomainSpec::TypeIII(n) => gram_det(flat, n, n),
        DomainSpec::TypeIV(_) => {
            let zzbar: f64 = flat.iter().map(|z| z.norm_sqr()).sum();
            let zzt: Complex64 = flat.iter().map(|z| z * z).sum();
            1.0 - zzbar + 0.25 * zzt.norm_sqr()
        }
    }
}

/// `det(I_p - Z Z̄^t)` for a flattened p x q matrix.
fn gram_det(flat: &[Complex64], p: usize, q: usize) -> f64 {
    let z = CMatrix::from_flat(p, q, flat);
    let gram = CMatrix::identity(p).sub(&z.mul(&z.hermitian()));
    crate::linalg::det(&gram).expect("gram matrix is square").re
}

/// Membership test for the open domain.
///
/// Matrix types use Cholesky success on `I - Z Z̄^t`; the Lie ball checks its
/// two defining inequalities.
pub fn contains(spec: &DomainSpec, point: &Point) -> Result<bool> {
    point.check_shape(spec)?;
    let flat = point.flatten();
    Ok(match *spec {
        DomainSpec::Ball(_) => flat.iter().map(|z| z.norm_sqr()).sum::<f64>() < 1.0,
        DomainSpec::TypeI(p, q) => {
            let z = CMatrix::from_flat(p, q, &flat);
            CMatrix::identity(p)
                .sub(&z.mul(&z.hermitian()))
                .is_positive_definite()
        }
        DomainSpec::TypeII(n) | DomainSpec::TypeIII(n) => {
            let z = CMatrix::from_flat(n, n, &flat);
            CMatrix::identity(n)
                .sub(&z.mul(&z.hermitian()))
                .is_positive_definite()
        }
        DomainSpec::TypeIV(_) => {
            let zzbar: f64 = flat.iter().map(|z| z.norm_sqr()).sum();
            zzbar < 2.0 && defect_flat(spec, &flat) > 0.0
        }
    })
}

/// The scalar factor that is positive inside the domain and vanishes on the
/// relevant boundary stratum: `1 - |z|^2`, `det(I - Z Z̄^t)`, or the quartic
/// Lie-ball polynomial.
pub fn boundary_defect(spec: &DomainSpec, point: &Point) -> Result<f64> {
    point.check_shape(spec)?;
    Ok(defect_flat(spec, &point.flatten()))
}

/// Bergman kernel factor `defect^(-genus)`, the positive constants in front
/// normalized to one since they cancel under `d d-bar log`.
pub fn kernel_factor(spec: &DomainSpec, point: &Point) -> Result<f64> {
    if !contains(spec, point)? {
        return Err(Error::OutsideDomain);
    }
    let defect = boundary_defect(spec, point)?;
    Ok(defect.powi(-(spec.genus() as i32)))
}

/// Homogeneous coordinates of a Lie-ball point on the hyperquadric:
/// `(z_1, ..., z_m, (1 + Z Z^t / 2)/sqrt(2), (1 - Z Z^t / 2)/sqrt(-2))`.
pub fn homogeneous_lift_iv(point: &Point) -> Result<Vec<Complex64>> {
    let flat = point.flatten();
    let w: Complex64 = flat.iter().map(|z| z * z).sum::<Complex64>() * 0.5;
    Ok(lift_from_components(&flat, w))
}

/// Shared lift builder: `values` followed by the two quadric coordinates of
/// `w = (sum of squares)/2`.
pub(crate) fn lift_from_components(values: &[Complex64], w: Complex64) -> Vec<Complex64> {
    let sqrt2 = Complex64::new(2.0f64.sqrt(), 0.0);
    // 1/sqrt(-2) = -i/sqrt(2) on the principal branch
    let inv_sqrt_m2 = Complex64::new(0.0, -1.0) / sqrt2;
    let mut lift = values.to_vec();
    lift.push((Complex64::new(1.0, 0.0) + w) / sqrt2);
    lift.push((Complex64::new(1.0, 0.0) - w) * inv_sqrt_m2);
    lift
}

/// `-xi J_2 xi̅^t` for a lift vector, which reproduces the quartic defect.
#[cfg(test)]
pub(crate) fn lift_form(lift: &[Complex64]) -> f64 {
    let m = lift.len() - 2;
    let mut s = 0.0;
    for (i, z) in lift.iter().enumerate() {
        if i < m {
            s -= z.norm_sqr();
        } else {
            s += z.norm_sqr();
        }
    }
    s
}
