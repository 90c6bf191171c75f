//! One-sided Jacobi singular values, numerical rank, kernel extraction and
//! orthonormal basis extension for real matrices.

use super::{RMatrix, RVector, DEFAULT_RANK_TOL};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;

#[cfg(not(test))]
use num_traits::Float;

/// Singular values and right singular vectors of a real matrix by one-sided
/// Jacobi iteration on column pairs.
///
/// The sweep order `(0,1), (0,2), ..., (n-2,n-1)` is fixed so results are
/// bit-reproducible. Returns the per-column singular values (unsorted) and
/// the accumulated orthogonal `V` with `A V = U diag(sigma)`.
pub fn jacobi_svd(a: &RMatrix) -> (Vec<f64>, RMatrix) {
    let n = a.cols();
    let mut w = a.clone();
    let mut v = RMatrix::identity(n);
    let eps = 1e-15f64;
    for _sweep in 0..64 {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for i in 0..w.rows() {
                    app += w[(i, p)] * w[(i, p)];
                    aqq += w[(i, q)] * w[(i, q)];
                    apq += w[(i, p)] * w[(i, q)];
                }
                if apq.abs() <= eps * (app * aqq).sqrt() || apq == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (2.0 * apq);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..w.rows() {
                    let wp = w[(i, p)];
                    let wq = w[(i, q)];
                    w.set(i, p, c * wp - s * wq);
                    w.set(i, q, s * wp + c * wq);
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v.set(i, p, c * vp - s * vq);
                    v.set(i, q, s * vp + c * vq);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let sigma: Vec<f64> = (0..n)
        .map(|j| (0..w.rows()).map(|i| w[(i, j)] * w[(i, j)]).sum::<f64>().sqrt())
        .collect();
    (sigma, v)
}

/// Number of singular values above `tol * sigma_max`.
pub fn real_rank(c: &RMatrix, tol: f64) -> usize {
    let (sigma, _) = jacobi_svd(c);
    let smax = sigma.iter().copied().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sigma.iter().filter(|&&s| s > tol * smax).count()
}

/// Unit real vector `v` with `C v = 0` up to `1e-9 * |C|_inf`, or `None` if
/// `C` has full column rank within [`DEFAULT_RANK_TOL`].
pub fn real_kernel_vector(c: &RMatrix) -> Option<RVector> {
    let (sigma, v) = jacobi_svd(c);
    let smax = sigma.iter().copied().fold(0.0, f64::max);
    let (jmin, &smin) = sigma
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite singular values"))?;
    if smax > 0.0 && smin > DEFAULT_RANK_TOL * smax {
        return None;
    }
    let mut vec: RVector = (0..v.rows()).map(|i| v[(i, jmin)]).collect();
    let norm = vec.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in vec.iter_mut() {
        *x /= norm;
    }
    let residual = c
        .mul_vec(&vec)
        .iter()
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    if residual > 1e-9 * c.norm_inf().max(1e-300) {
        return None;
    }
    Some(vec)
}

/// Real orthogonal matrix whose last column is the given unit vector, the
/// remaining columns filled by Gram-Schmidt over the standard basis.
pub fn extend_orthonormal(v: &[f64]) -> Result<RMatrix> {
    let m = v.len();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::BadParameter("cannot extend the zero vector".into()));
    }
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::BadParameter(format!(
            "vector must be unit norm within 1e-12, got |v| = {norm}"
        )));
    }
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m);
    for i in 0..m {
        if basis.len() == m - 1 {
            break;
        }
        let mut w: Vec<f64> = (0..m).map(|k| if k == i { 1.0 } else { 0.0 }).collect();
        // two rounds of projection for orthogonality at 1e-15
        for _ in 0..2 {
            let dv: f64 = w.iter().zip(v).map(|(a, b)| a * b).sum();
            for (wk, vk) in w.iter_mut().zip(v) {
                *wk -= dv * vk;
            }
            for b in &basis {
                let d: f64 = w.iter().zip(b).map(|(a, c)| a * c).sum();
                for (wk, bk) in w.iter_mut().zip(b) {
                    *wk -= d * bk;
                }
            }
        }
        let wn = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if wn < 1e-4 {
            continue;
        }
        for x in w.iter_mut() {
            *x /= wn;
        }
        basis.push(w);
    }
    if basis.len() != m - 1 {
        return Err(Error::IllConditioned(
            "orthonormal extension did not complete".into(),
        ));
    }
    let mut out = RMatrix::zeros(m, m);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..m {
            out.set(i, j, b[i]);
        }
    }
    for i in 0..m {
        out.set(i, m - 1, v[i]);
    }
    let defect = out.orthogonality_defect();
    if defect > 1e-12 {
        return Err(Error::IllConditioned(format!(
            "extension has orthogonality defect {defect:e}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn kernel_of_row_vector() {
        let c = RMatrix::from_rows(&[vec![1.0, 1.0]]);
        let v = real_kernel_vector(&c).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        assert!((v[0].abs() - s).abs() < 1e-12 && (v[1].abs() - s).abs() < 1e-12);
        assert!((v[0] + v[1]).abs() < 1e-12);
    }

    #[test]
    fn full_rank_has_no_kernel() {
        assert!(real_kernel_vector(&RMatrix::identity(3)).is_none());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(real_rank(&RMatrix::zeros(3, 3), DEFAULT_RANK_TOL), 0);
        assert_eq!(real_rank(&RMatrix::identity(4), DEFAULT_RANK_TOL), 4);
        // samples of n+4 = 6 independent functions 1, x, x^2, ..., x^5
        let xs = [0.1, -0.7, 0.43, 0.91, -0.32, 0.66, -0.05, 0.27];
        let rows: Vec<Vec<f64>> = xs
            .iter()
            .map(|&x: &f64| (0..6).map(|k| x.powi(k)).collect())
            .collect();
        let m = RMatrix::from_rows(&rows);
        assert_eq!(real_rank(&m, DEFAULT_RANK_TOL), 6);
    }

    #[test]
    fn extend_identity_style() {
        let mut v = vec![0.0; 4];
        v[3] = 1.0;
        let c = extend_orthonormal(&v).unwrap();
        for i in 0..4 {
            assert!((c[(i, 3)] - v[i]).abs() < 1e-15);
        }
        assert!(c.sub(&RMatrix::identity(4)).norm_inf() < 1e-15);
    }

    #[test]
    fn extend_diagonal_pair() {
        let s = 1.0 / 2.0f64.sqrt();
        let c = extend_orthonormal(&[s, s]).unwrap();
        // first column is the Gram-Schmidt residual of e_1, i.e. (1,-1)/sqrt(2)
        assert!((c[(0, 0)] - s).abs() < 1e-14);
        assert!((c[(1, 0)] + s).abs() < 1e-14);
        assert!((c[(0, 1)] - s).abs() < 1e-14);
        assert!((c[(1, 1)] - s).abs() < 1e-14);
    }

    #[test]
    fn extend_rejects_zero_and_non_unit() {
        assert!(extend_orthonormal(&[0.0, 0.0]).is_err());
        assert!(extend_orthonormal(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn jacobi_reproduces_known_singular_values() {
        // diag(3, 2) embedded in a rotation
        let a = RMatrix::from_rows(&[vec![3.0, 0.0], vec![0.0, -2.0], vec![0.0, 0.0]]);
        let (mut sigma, v) = jacobi_svd(&a);
        sigma.sort_by(|x, y| y.partial_cmp(x).unwrap());
        assert!((sigma[0] - 3.0).abs() < 1e-12);
        assert!((sigma[1] - 2.0).abs() < 1e-12);
        assert!(v.orthogonality_defect() < 1e-12);
    }
}
