//! Dense complex and real matrix kernel: determinants, minors, the Cayley
//! minor expansion, Pfaffians, indefinite-unitarity tests, one-sided Jacobi
//! singular values, real kernel extraction and orthonormal extension, and
//! small matrix exponentials.
//!
//! Everything here is plain `Vec`-backed row-major storage; the sizes in this
//! crate are tiny (matrices up to a few dozen rows), so no external linear
//! algebra backend is pulled in.

mod cmatrix;
mod expm;
mod jacobi;
mod pfaffian;
mod rmatrix;

pub use cmatrix::CMatrix;
pub use expm::{
    expm_complex, expm_real, random_indefinite_skew, random_j2_skew, random_skew,
    random_special_orthogonal, random_unit_vector,
};
pub use jacobi::{extend_orthonormal, jacobi_svd, real_kernel_vector, real_rank};
pub use pfaffian::pfaffian;
pub use rmatrix::{RMatrix, RVector};

use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Default relative tolerance on singular values when deciding numerical rank.
///
/// Residuals of the constructed maps sit near machine epsilon, so 1e-8 leaves
/// four-plus orders of separation between "zero" and "signal".
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Absolute skew-symmetry tolerance accepted by [`pfaffian`].
pub const SKEW_TOL: f64 = 1e-12;

/// Determinant of a square complex matrix.
///
/// Dispatches to direct cofactor expansion for sizes up to 4 and LU with
/// partial pivoting above that, which keeps the two code paths independently
/// testable against each other.
pub fn det(m: &CMatrix) -> Result<Complex64> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() <= 4 {
        Ok(det_cofactor(m))
    } else {
        Ok(det_lu(m))
    }
}

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_cofactor(m: &CMatrix) -> Complex64 {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    match n {
        0 => Complex64::new(1.0, 0.0),
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        _ => {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if m[(0, j)] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let sub = m.drop_row_col(0, j);
                let term = m[(0, j)] * det_cofactor(&sub);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Determinant by LU factorization with partial pivoting.
pub fn det_lu(m: &CMatrix) -> Complex64 {
    assert_eq!(m.rows(), m.cols());
    let (lu, sign, singular) = m.lu_factor();
    if singular {
        return Complex64::new(0.0, 0.0);
    }
    let mut d = Complex64::new(sign, 0.0);
    for i in 0..m.rows() {
        d *= lu[(i, i)];
    }
    d
}

/// Determinant of the submatrix selected by `row_idx` x `col_idx`.
///
/// Index lists must be strictly increasing, in range, and of equal nonzero
/// length.
pub fn minor_det(z: &CMatrix, row_idx: &[usize], col_idx: &[usize]) -> Result<Complex64> {
    if row_idx.is_empty() || row_idx.len() != col_idx.len() {
        return Err(Error::BadIndices(format!(
            "index lists must have equal nonzero length, got {} and {}",
            row_idx.len(),
            col_idx.len()
        )));
    }
    for (list, bound, name) in [(row_idx, z.rows(), "row"), (col_idx, z.cols(), "column")] {
        for w in list.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::BadIndices(format!(
                    "{name} indices must be strictly increasing"
                )));
            }
        }
        if *list.last().unwrap() >= bound {
            return Err(Error::BadIndices(format!(
                "{name} index {} out of range (< {bound})",
                list.last().unwrap()
            )));
        }
    }
    det(&z.submatrix(row_idx, col_idx))
}

/// Evaluates `1 + sum_k (-1)^k sum |k x k minors of Z|^2` for a p x q matrix
/// with p <= q.
///
/// This expansion equals `det(I_p - Z Z̄^t)`, which is the cross-check the
/// test suite runs against the direct determinant.
pub fn cayley_det_expansion(z: &CMatrix) -> Result<f64> {
    let (p, q) = (z.rows(), z.cols());
    if p > q {
        return Err(Error::Dimension(format!(
            "expansion requires p <= q, got {p} x {q}"
        )));
    }
    let mut total = 1.0;
    for k in 1..=p {
        let mut sum = 0.0;
        for_each_combination(p, k, &mut |rows| {
            for_each_combination(q, k, &mut |cols| {
                let minor = det(&z.submatrix(rows, cols)).expect("submatrix is square");
                sum += minor.norm_sqr();
            });
        });
        if k % 2 == 0 {
            total += sum;
        } else {
            total -= sum;
        }
    }
    Ok(total)
}

/// True iff `U J Ū^t = J` within `tol` in the max-entry norm, where
/// `J = diag(I_p, -I_q)`.
///
/// A dimension mismatch is an error, never `false`.
pub fn is_j_unitary(u: &CMatrix, p: usize, q: usize, tol: f64) -> Result<bool> {
    let n = p + q;
    if u.rows() != n || u.cols() != n {
        return Err(Error::Dimension(format!(
            "expected {n} x {n} matrix for signature ({p},{q}), got {} x {}",
            u.rows(),
            u.cols()
        )));
    }
    let mut uj = u.clone();
    for i in 0..n {
        for j in p..n {
            let v = -uj[(i, j)];
            uj.set(i, j, v);
        }
    }
    let m = uj.mul(&u.hermitian());
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expect = if i != j {
                Complex64::new(0.0, 0.0)
            } else if i < p {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(-1.0, 0.0)
            };
            worst = worst.max((m[(i, j)] - expect).norm());
        }
    }
    Ok(worst <= tol)
}

/// Calls `f` on every strictly increasing `k`-subset of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let remaining = k - cur.len();
        for i in start..=(n - remaining) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k == 0 || k > n {
        return;
    }
    let mut cur = Vec::with_capacity(k);
    rec(0, n, k, &mut cur, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn det_identity_is_one() {
        let m = CMatrix::identity(3);
        assert_eq!(det(&m).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn det_diagonal_product() {
        let mut m = CMatrix::zeros(2, 2);
        m.set(0, 0, c(2.0, 0.0));
        m.set(1, 1, c(0.0, 3.0));
        let d = det(&m).unwrap();
        assert!((d - c(0.0, 6.0)).norm() < 1e-15);
    }

    #[test]
    fn det_rejects_non_square() {
        let m = CMatrix::zeros(2, 3);
        assert!(matches!(det(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn lu_and_cofactor_agree_on_4x4() {
        // fixed pseudo-random entries
        let mut m = CMatrix::zeros(4, 4);
        let mut v = 0.37f64;
        for i in 0..4 {
            for j in 0..4 {
                v = (v * 997.0 + 0.123).fract();
                let w = (v * 31.0 + 1.7).fract();
                m.set(i, j, c(v - 0.5, w - 0.5));
            }
        }
        let a = det_cofactor(&m);
        let b = det_lu(&m);
        assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn minor_det_single_entry_and_full() {
        let m = CMatrix::from_rows(&[vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(3.0, 0.0), c(4.0, 0.0)]]);
        assert_eq!(minor_det(&m, &[0], &[1]).unwrap(), c(2.0, 0.0));
        let full = minor_det(&m, &[0, 1], &[0, 1]).unwrap();
        assert!((full - c(-2.0, 0.0)).norm() < 1e-15);
        assert_eq!(full, det(&m).unwrap());
    }

    #[test]
    fn minor_det_rejects_bad_indices() {
        let m = CMatrix::identity(2);
        assert!(minor_det(&m, &[1, 0], &[0, 1]).is_err());
        assert!(minor_det(&m, &[0, 2], &[0, 1]).is_err());
        assert!(minor_det(&m, &[], &[]).is_err());
        assert!(minor_det(&m, &[0], &[0, 1]).is_err());
    }

    #[test]
    fn cayley_expansion_zero_matrix() {
        let z = CMatrix::zeros(3, 4);
        assert_eq!(cayley_det_expansion(&z).unwrap(), 1.0);
    }

    #[test]
    fn cayley_expansion_row_vector() {
        let z = CMatrix::from_rows(&[vec![c(0.3, 0.1), c(-0.2, 0.25), c(0.05, -0.4)]]);
        let want = 1.0 - z.row(0).iter().map(|e| e.norm_sqr()).sum::<f64>();
        assert!((cayley_det_expansion(&z).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn cayley_expansion_matches_determinant() {
        let mut z = CMatrix::zeros(3, 4);
        let mut v = 0.11f64;
        for i in 0..3 {
            for j in 0..4 {
                v = (v * 883.0 + 0.217).fract();
                let w = (v * 57.0 + 0.31).fract();
                // entries of modulus < 0.4
                z.set(i, j, c(0.28 * (v - 0.5), 0.28 * (w - 0.5)));
            }
        }
        let expansion = cayley_det_expansion(&z).unwrap();
        let gram = CMatrix::identity(3).sub(&z.mul(&z.hermitian()));
        let direct = det(&gram).unwrap();
        assert!(direct.im.abs() < 1e-12);
        assert!((expansion - direct.re).abs() < 1e-10);
    }

    #[test]
    fn j_unitary_examples() {
        let eye = CMatrix::identity(4);
        assert!(is_j_unitary(&eye, 3, 1, 1e-12).unwrap());

        let mut phases = CMatrix::zeros(4, 4);
        for i in 0..4 {
            phases.set(i, i, Complex64::from_polar(1.0, 0.7));
        }
        assert!(is_j_unitary(&phases, 3, 1, 1e-12).unwrap());

        // hyperbolic rotation in coordinates (0, n) for signature (n, 1)
        let t = 0.3f64;
        let n = 3;
        let mut h = CMatrix::identity(n + 1);
        h.set(0, 0, c(t.cosh(), 0.0));
        h.set(0, n, c(t.sinh(), 0.0));
        h.set(n, 0, c(t.sinh(), 0.0));
        h.set(n, n, c(t.cosh(), 0.0));
        assert!(is_j_unitary(&h, n, 1, 1e-12).unwrap());

        // dimension mismatch is rejected, not reported as `false`
        assert!(is_j_unitary(&eye, 2, 1, 1e-12).is_err());
    }

    #[test]
    fn combinations_are_exhaustive() {
        let mut count = 0;
        for_each_combination(5, 3, &mut |c| {
            assert!(c.windows(2).all(|w| w[0] < w[1]));
            count += 1;
        });
        assert_eq!(count, 10);
    }
}
