//! Pfaffian of a complex skew-symmetric matrix.

use super::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::SKEW_TOL;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Pfaffian of a square skew-symmetric matrix.
///
/// The input must be skew within [`SKEW_TOL`] in the max-entry norm; it is
/// then replaced by `(A - A^t)/2` so accumulated drift cannot leak into the
/// recursion. Odd orders return exactly zero, and `pf(A)^2 = det(A)`.
pub fn pfaffian(a: &CMatrix) -> Result<Complex64> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let defect = a.skew_defect();
    if defect > SKEW_TOL {
        return Err(Error::NotSkew {
            max_asymmetry: defect,
        });
    }
    let n = a.rows();
    if n % 2 == 1 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    // symmetrize before recursing
    let clean = a.sub(&a.transpose()).scale(Complex64::new(0.5, 0.0));
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_rec(&clean, &idx))
}

/// Row expansion `pf(A) = sum_j (-1)^j a_{1j} pf(A with rows/cols 1, j removed)`.
fn pf_rec(a: &CMatrix, idx: &[usize]) -> Complex64 {
    if idx.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    if idx.len() == 2 {
        return a[(idx[0], idx[1])];
    }
    let i0 = idx[0];
    let mut acc = Complex64::new(0.0, 0.0);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = a[(i0, j)];
        if entry == Complex64::new(0.0, 0.0) {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&k| k != i0 && k != j)
            .collect();
        let term = entry * pf_rec(a, &rest);
        // position 1 in the active list carries sign +
        if pos % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
