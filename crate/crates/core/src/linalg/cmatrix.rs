//! Dense complex matrix with row-major storage.

use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must have at least one entry");
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend_from_slice(r);
        }
        CMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix from a flat row-major slice.
    pub fn from_flat(rows: usize, cols: usize, data: &[Complex64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        CMatrix {
            rows,
            cols,
            data: data.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self[(i, j)]);
            }
        }
        t
    }

    /// Conjugate transpose.
    pub fn hermitian(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self[(i, j)].conj());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)] + a * rhs[(k, j)];
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= *b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Max entry modulus.
    pub fn norm_inf(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Submatrix selected by row and column index lists (assumed valid).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> CMatrix {
        let mut out = Self::zeros(row_idx.len(), col_idx.len());
        for (oi, &i) in row_idx.iter().enumerate() {
            for (oj, &j) in col_idx.iter().enumerate() {
                out.set(oi, oj, self[(i, j)]);
            }
        }
        out
    }

    /// Copy with one row and one column removed.
    pub(crate) fn drop_row_col(&self, row: usize, col: usize) -> CMatrix {
        let mut out = Self::zeros(self.rows - 1, self.cols - 1);
        let mut oi = 0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let mut oj = 0;
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                out.set(oi, oj, self[(i, j)]);
                oj += 1;
            }
            oi += 1;
        }
        out
    }

    /// LU factorization with partial pivoting, packed in one matrix.
    ///
    /// Returns `(lu, permutation_sign, singular)`.
    pub(crate) fn lu_factor(&self) -> (CMatrix, f64, bool) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut lu = self.clone();
        let mut sign = 1.0;
        for k in 0..n {
            let mut pivot = k;
            let mut best = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > best {
                    best = v;
                    pivot = i;
                }
            }
            if best == 0.0 {
                return (lu, sign, true);
            }
            if pivot != k {
                for j in 0..n {
                    let a = lu[(k, j)];
                    let b = lu[(pivot, j)];
                    lu.set(k, j, b);
                    lu.set(pivot, j, a);
                }
                sign = -sign;
            }
            let d = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu.set(i, k, f);
                for j in k + 1..n {
                    let v = lu[(i, j)] - f * lu[(k, j)];
                    lu.set(i, j, v);
                }
            }
        }
        (lu, sign, false)
    }

    /// Solves `self * x = b` for square `self` via LU.
    pub fn solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        // factor with explicit permutation bookkeeping
        let mut lu = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut pivot = k;
            let mut best = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > best {
                    best = v;
                    pivot = i;
                }
            }
            if best == 0.0 {
                return Err(Error::IllConditioned(format!(
                    "singular system of size {n}"
                )));
            }
            if pivot != k {
                perm.swap(k, pivot);
                for j in 0..n {
                    let a = lu[(k, j)];
                    let b2 = lu[(pivot, j)];
                    lu.set(k, j, b2);
                    lu.set(pivot, j, a);
                }
            }
            let d = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu.set(i, k, f);
                for j in k + 1..n {
                    let v = lu[(i, j)] - f * lu[(k, j)];
                    lu.set(i, j, v);
                }
            }
        }
        let mut x: Vec<Complex64> = perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let v = x[i] - lu[(i, j)] * x[j];
                x[i] = v;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let v = x[i] - lu[(i, j)] * x[j];
                x[i] = v;
            }
            x[i] /= lu[(i, i)];
        }
        Ok(x)
    }

    /// Matrix inverse via LU column solves.
    pub fn inverse(&self) -> Result<CMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        for j in 0..n {
            e[j] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e)?;
            e[j] = Complex64::new(0.0, 0.0);
            for i in 0..n {
                out.set(i, j, col[i]);
            }
        }
        Ok(out)
    }

    /// Cholesky test for Hermitian positive definiteness.
    ///
    /// Returns `false` as soon as a pivot fails to be strictly positive, which
    /// is the membership test used for the matrix domains.
    pub fn is_positive_definite(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut l = CMatrix::zeros(n, n);
        for j in 0..n {
            let mut d = self[(j, j)].re;
            for k in 0..j {
                d -= l[(j, k)].norm_sqr();
            }
            // NaN-safe: any non-positive or non-finite pivot fails
            if d.partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater) || !d.is_finite() {
                return false;
            }
            let dj = d.sqrt();
            l.set(j, j, Complex64::new(dj, 0.0));
            for i in j + 1..n {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)].conj();
                }
                l.set(i, j, s / dj);
            }
        }
        true
    }

    /// Unitary polar factor via Newton iteration `X <- (X + X^-H)/2`.
    pub fn polar_unitary(&self) -> Result<CMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut x = self.clone();
        for _ in 0..60 {
            let inv_h = x.inverse()?.hermitian();
            let next = x.add(&inv_h).scale(Complex64::new(0.5, 0.0));
            let drift = next.sub(&x).norm_inf();
            x = next;
            if drift < 1e-15 {
                break;
            }
        }
        let gram = x.hermitian().mul(&x);
        let err = gram.sub(&CMatrix::identity(n)).norm_inf();
        if err > 1e-10 {
            return Err(Error::IllConditioned(format!(
                "polar iteration did not reach a unitary factor (defect {err:e})"
            )));
        }
        Ok(x)
    }

    /// Max entry modulus of `A + A^t`, the skew-symmetry defect.
    pub fn skew_defect(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self[(i, j)] + self[(j, i)]).norm());
            }
        }
        worst
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn solve_round_trip() {
        let m = CMatrix::from_rows(&[
            vec![c(2.0, 1.0), c(0.5, -0.2), c(0.0, 0.3)],
            vec![c(-1.0, 0.0), c(1.5, 0.7), c(0.2, 0.0)],
            vec![c(0.3, 0.3), c(0.0, -1.0), c(2.5, 0.1)],
        ]);
        let x_true = vec![c(1.0, -2.0), c(0.5, 0.5), c(-0.25, 1.0)];
        let b: Vec<Complex64> = (0..3)
            .map(|i| (0..3).map(|j| m[(i, j)] * x_true[j]).sum())
            .collect();
        let x = m.solve(&b).unwrap();
        for (a, b) in x.iter().zip(&x_true) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn inverse_times_self_is_identity() {
        let m = CMatrix::from_rows(&[
            vec![c(1.0, 0.5), c(0.2, 0.0)],
            vec![c(0.0, -0.3), c(2.0, 0.0)],
        ]);
        let prod = m.mul(&m.inverse().unwrap());
        assert!(prod.sub(&CMatrix::identity(2)).norm_inf() < 1e-13);
    }

    #[test]
    fn cholesky_detects_definiteness() {
        let id = CMatrix::identity(3);
        assert!(id.is_positive_definite());
        let mut neg = CMatrix::identity(3);
        neg.set(2, 2, c(-0.5, 0.0));
        assert!(!neg.is_positive_definite());
    }

    #[test]
    fn polar_of_unitary_is_itself() {
        // 2x2 unitary built from a phase rotation
        let (s, co) = (0.6f64, 0.8f64);
        let u = CMatrix::from_rows(&[vec![c(co, 0.0), c(-s, 0.0)], vec![c(s, 0.0), c(co, 0.0)]]);
        let p = u.polar_unitary().unwrap();
        assert!(p.sub(&u).norm_inf() < 1e-12);
    }
}
