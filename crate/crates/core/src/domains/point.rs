//! Spec-shaped points of the classical domains.

use super::{DomainSpec, PointShape, POINT_SYMMETRY_TOL};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// A point of one of the classical domains: a complex vector for the ball
/// and the Lie ball, a complex matrix for the three matrix types.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    Vector(Vec<Complex64>),
    Matrix(CMatrix),
}

impl Point {
    pub fn vector(data: Vec<Complex64>) -> Self {
        Point::Vector(data)
    }

    pub fn matrix(data: CMatrix) -> Self {
        Point::Matrix(data)
    }

    /// The origin of a domain.
    pub fn origin(spec: &DomainSpec) -> Self {
        match spec.shape() {
            PointShape::Vector(n) => Point::Vector(vec![Complex64::new(0.0, 0.0); n]),
            PointShape::Matrix(r, c) => Point::Matrix(CMatrix::zeros(r, c)),
        }
    }

    /// Builds a shape-checked point for `spec`, repairing symmetry drift up
    /// to [`POINT_SYMMETRY_TOL`] and rejecting anything worse.
    pub fn new(spec: &DomainSpec, data: Point) -> Result<Self> {
        data.check_shape(spec)?;
        match (*spec, data) {
            (DomainSpec::TypeII(n), Point::Matrix(m)) => {
                let defect = m.skew_defect();
                if defect > POINT_SYMMETRY_TOL {
                    return Err(Error::ShapeMismatch {
                        expected: format!("skew-symmetric {n} x {n} matrix"),
                        got: format!("asymmetry {defect:e}"),
                    });
                }
                // repair drift below the tolerance
                let clean = m.sub(&m.transpose()).scale(Complex64::new(0.5, 0.0));
                Ok(Point::Matrix(clean))
            }
            (DomainSpec::TypeIII(n), Point::Matrix(m)) => {
                let mut defect = 0.0f64;
                for i in 0..n {
                    for j in 0..n {
                        defect = defect.max((m[(i, j)] - m[(j, i)]).norm());
                    }
                }
                if defect > POINT_SYMMETRY_TOL {
                    return Err(Error::ShapeMismatch {
                        expected: format!("symmetric {n} x {n} matrix"),
                        got: format!("asymmetry {defect:e}"),
                    });
                }
                let clean = m.add(&m.transpose()).scale(Complex64::new(0.5, 0.0));
                Ok(Point::Matrix(clean))
            }
            (_, data) => Ok(data),
        }
    }

    /// Rebuilds a point from flattened row-major ambient data.
    pub fn from_flat(spec: &DomainSpec, flat: &[Complex64]) -> Result<Self> {
        if flat.len() != spec.flat_len() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} ambient entries", spec.flat_len()),
                got: format!("{}", flat.len()),
            });
        }
        match spec.shape() {
            PointShape::Vector(_) => Ok(Point::Vector(flat.to_vec())),
            PointShape::Matrix(r, c) => Ok(Point::Matrix(CMatrix::from_flat(r, c, flat))),
        }
    }

    pub fn check_shape(&self, spec: &DomainSpec) -> Result<()> {
        let ok = match (self, spec.shape()) {
            (Point::Vector(v), PointShape::Vector(n)) => v.len() == n,
            (Point::Matrix(m), PointShape::Matrix(r, c)) => m.rows() == r && m.cols() == c,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                expected: format!("{:?}", spec.shape()),
                got: match self {
                    Point::Vector(v) => format!("vector of length {}", v.len()),
                    Point::Matrix(m) => format!("{} x {} matrix", m.rows(), m.cols()),
                },
            })
        }
    }

    /// Row-major flattened ambient entries.
    pub fn flatten(&self) -> Vec<Complex64> {
        match self {
            Point::Vector(v) => v.clone(),
            Point::Matrix(m) => m.as_slice().to_vec(),
        }
    }

    /// Max entry modulus.
    pub fn norm_inf(&self) -> f64 {
        self.flatten().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}
