//! The diagonal congruence obstruction and its numerical falsifier.
//!
//! The obstruction: for real spectra with `|lambda| < |lambda_1| <= ... <=
//! |lambda_{n+1}|` there is no signature-(n,1) matrix `U` and scalar `c`
//! with `U diag(lambda, lambda_2, ..) U^t = c diag(lambda_1, ..)`. The
//! falsifier searches that orbit numerically and reports the best residual
//! it could reach - evidence, not proof.

use crate::error::{Error, Result};
use crate::linalg::{expm_complex, random_indefinite_skew, CMatrix};
use alloc::format;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[cfg(not(test))]
use num_traits::Float;

/// Default number of random restarts.
pub const CONGRUENCE_RESTARTS: usize = 50;

/// Default number of local descent iterations per restart.
pub const CONGRUENCE_ITERS: usize = 500;

/// Verdict of the spectral obstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceVerdict {
    /// The hypothesis holds: no congruence can exist.
    Impossible,
    /// The hypothesis fails; nothing is asserted either way.
    Undecided,
}

/// Checks `|lambda| < |others[0]| <= |others[1]| <= ...`.
pub fn congruence_criterion(lambda: f64, others: &[f64]) -> CongruenceVerdict {
    if others.is_empty() {
        return CongruenceVerdict::Undecided;
    }
    if lambda.abs() >= others[0].abs() {
        return CongruenceVerdict::Undecided;
    }
    for w in others.windows(2) {
        if w[0].abs() > w[1].abs() {
            return CongruenceVerdict::Undecided;
        }
    }
    CongruenceVerdict::Impossible
}

/// Minimizes `|U diag(a) U^t - c diag(b)|_F` over `U = exp(S)` for
/// form-skew `S`, with `c` solved in closed form per candidate, by random
/// restarts plus gradient-free local descent. Returns the best residual.
///
/// Restart zero starts at the identity, so equal (or proportional) spectra
/// report a residual at roundoff level.
pub fn congruence_search(
    a: &[f64],
    b: &[f64],
    restarts: usize,
    iters: usize,
    seed: u64,
) -> Result<f64> {
    let size = a.len();
    if size < 2 || b.len() != size {
        return Err(Error::Dimension(format!(
            "spectra must share a size >= 2, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let diag_a = diag(a);
    let b_norm_sqr: f64 = b.iter().map(|x| x * x).sum();
    if b_norm_sqr == 0.0 {
        return Err(Error::BadParameter("reference spectrum is zero".into()));
    }
    let objective = |u: &CMatrix| -> f64 {
        let m = u.mul(&diag_a).mul(&u.transpose());
        // optimal c for min |M - c diag(b)|_F
        let mut inner = Complex64::new(0.0, 0.0);
        for (i, bi) in b.iter().enumerate() {
            inner += m[(i, i)] * bi;
        }
        let c = inner / b_norm_sqr;
        let mut res = 0.0f64;
        for i in 0..size {
            for j in 0..size {
                let want = if i == j {
                    c * b[i]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                res += (m[(i, j)] - want).norm_sqr();
            }
        }
        res.sqrt()
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for restart in 0..restarts.max(1) {
        let mut u = if restart == 0 {
            CMatrix::identity(size)
        } else {
            expm_complex(&random_indefinite_skew(size, 0.5, &mut rng))
        };
        let mut current = objective(&u);
        best = best.min(current);
        let mut step = 0.3f64;
        for _ in 0..iters {
            let proposal = expm_complex(&random_indefinite_skew(size, step, &mut rng)).mul(&u);
            let value = objective(&proposal);
            if value < current {
                current = value;
                u = proposal;
                step = (step * 1.05).min(0.6);
            } else {
                step = (step * 0.97).max(1e-4);
            }
        }
        best = best.min(current);
    }
    Ok(best)
}

fn diag(values: &[f64]) -> CMatrix {
    let mut m = CMatrix::zeros(values.len(), values.len());
    for (i, &v) in values.iter().enumerate() {
        m.set(i, i, Complex64::new(v, 0.0));
    }
    m
}
