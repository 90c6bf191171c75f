//! Small dense matrix exponentials (scaling and squaring with a truncated
//! series) and seeded generators for the structured random matrices the
//! verification sweeps need.

use super::{CMatrix, RMatrix};
use alloc::vec::Vec;
use num_complex::Complex64;
use rand::Rng;

#[cfg(not(test))]
use num_traits::Float;

const TAYLOR_TERMS: usize = 18;

/// Exponential of a real square matrix.
pub fn expm_real(a: &RMatrix) -> RMatrix {
    assert_eq!(a.rows(), a.cols());
    let norm = a.norm_inf();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let b = a.scale(1.0 / 2.0f64.powi(squarings as i32));
    let mut result = RMatrix::identity(a.rows());
    let mut term = RMatrix::identity(a.rows());
    for k in 1..=TAYLOR_TERMS {
        term = term.mul(&b).scale(1.0 / k as f64);
        result = result.add(&term);
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// Exponential of a complex square matrix.
pub fn expm_complex(a: &CMatrix) -> CMatrix {
    assert_eq!(a.rows(), a.cols());
    let norm = a.norm_inf();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let b = a.scale(Complex64::new(1.0 / 2.0f64.powi(squarings as i32), 0.0));
    let mut result = CMatrix::identity(a.rows());
    let mut term = CMatrix::identity(a.rows());
    for k in 1..=TAYLOR_TERMS {
        term = term.mul(&b).scale(Complex64::new(1.0 / k as f64, 0.0));
        result = result.add(&term);
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

/// One standard normal draw (Box-Muller); pinned here rather than pulled from
/// a distributions crate so seeded streams never shift under dependency bumps.
pub(crate) fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
}

/// Random real skew-symmetric matrix with entries of the given scale.
pub fn random_skew<R: Rng + ?Sized>(m: usize, scale: f64, rng: &mut R) -> RMatrix {
    let mut s = RMatrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let v = scale * normal(rng);
            s.set(i, j, v);
            s.set(j, i, -v);
        }
    }
    s
}

/// Random rotation `exp(S)` for skew `S`; lies in the identity component of
/// the orthogonal group.
pub fn random_special_orthogonal<R: Rng + ?Sized>(m: usize, scale: f64, rng: &mut R) -> RMatrix {
    expm_real(&random_skew(m, scale, rng))
}

/// Random real `(m+2) x (m+2)` generator `S` with `S J + J S^t = 0` for
/// `J = diag(I_m, -I_2)`; its exponential preserves the indefinite form.
pub fn random_j2_skew<R: Rng + ?Sized>(m: usize, scale: f64, rng: &mut R) -> RMatrix {
    let n = m + 2;
    let mut s = RMatrix::zeros(n, n);
    // skew block on the first m coordinates
    for i in 0..m {
        for j in i + 1..m {
            let v = scale * normal(rng);
            s.set(i, j, v);
            s.set(j, i, -v);
        }
    }
    // skew block on the last two
    let w = scale * normal(rng);
    s.set(m, m + 1, w);
    s.set(m + 1, m, -w);
    // symmetric coupling block
    for i in 0..m {
        for j in m..n {
            let v = scale * normal(rng);
            s.set(i, j, v);
            s.set(j, i, v);
        }
    }
    s
}

/// Random complex `n x n` generator `S` with `S J + J S^H = 0` for
/// `J = diag(I_{n-1}, -1)`; `exp(S)` preserves the signature-(n-1,1) form.
pub fn random_indefinite_skew<R: Rng + ?Sized>(n: usize, scale: f64, rng: &mut R) -> CMatrix {
    assert!(n >= 2);
    let k = n - 1;
    let mut s = CMatrix::zeros(n, n);
    // skew-Hermitian block on the first k coordinates
    for i in 0..k {
        for j in i..k {
            if i == j {
                s.set(i, i, Complex64::new(0.0, scale * normal(rng)));
            } else {
                let v = Complex64::new(scale * normal(rng), scale * normal(rng));
                s.set(i, j, v);
                s.set(j, i, -v.conj());
            }
        }
    }
    // coupling column q and its conjugate row
    for i in 0..k {
        let v = Complex64::new(scale * normal(rng), scale * normal(rng));
        s.set(i, k, v);
        s.set(k, i, v.conj());
    }
    // purely imaginary corner
    s.set(k, k, Complex64::new(0.0, scale * normal(rng)));
    s
}

/// Random real unit vector.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}
