//! Deciding whether a polynomial table is the exact square of another
//! polynomial, by graded Newton iteration on coefficients.

use crate::error::{Error, Result};
use crate::mapzoo::PolyTable;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Per-coefficient tolerance of the final square comparison.
const SQUARE_COEFF_TOL: f64 = 1e-10;

/// True iff `p` equals `q^2` for some polynomial `q`, within
/// 1e-10 per coefficient after normalization.
///
/// Odd total degree returns `false` immediately. Tables without a constant
/// term are first moved to a base point where they do not vanish; squares
/// stay squares under that substitution.
pub fn perfect_square_test(p: &PolyTable) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if p.total_degree() % 2 == 1 {
        return Ok(false);
    }
    let nvars = p.nvars();
    let c0 = p.coeff(&vec![0u16; nvars]);
    if c0.norm() >= 1e-12 {
        return Ok(newton_square_matches(p, c0));
    }
    // homogeneous tables with a pure power dehomogenize cleanly
    if let Some(d) = p.homogeneous_degree() {
        for i in 0..nvars {
            let mut exps = vec![0u16; nvars];
            exps[i] = d as u16;
            if p.coeff(&exps).norm() >= 1e-12 {
                let dehom = p.set_var_one(i);
                let c = dehom.coeff(&vec![0u16; nvars]);
                return Ok(newton_square_matches(&dehom, c));
            }
        }
    }
    // otherwise shift to a deterministic base point with p(v) != 0
    for attempt in 0..5u32 {
        let v: Vec<Complex64> = (0..nvars)
            .map(|i| Complex64::new(0.31 + 0.17 * ((attempt as usize + i) % 7) as f64, 0.0))
            .collect();
        let value = p.eval(&v);
        if value.norm() >= 1e-8 {
            let shifted = shift(p, &v);
            return Ok(newton_square_matches(&shifted, value));
        }
    }
    Err(Error::IllConditioned(
        "could not find a base point where the table is nonzero".into(),
    ))
}

/// Graded Newton: with `P~ = p / c0` (so `P~(0) = 1`), solve
/// `Q^2 = P~` grade by grade up to half the degree, then compare `Q^2`
/// against `P~` coefficientwise.
fn newton_square_matches(p: &PolyTable, c0: Complex64) -> bool {
    let scale = Complex64::new(1.0, 0.0) / c0;
    let normalized = p.scale(scale);
    let degree = normalized.total_degree();
    let half = degree / 2;
    let mut q = PolyTable::one(p.nvars());
    for g in 1..=half {
        // 2 q_g = P_g - sum_{a=1}^{g-1} q_a q_{g-a}
        let mut rhs = normalized.graded_part(g);
        for a in 1..g {
            rhs = rhs.sub(&q.graded_part(a).mul(&q.graded_part(g - a)));
        }
        let q_g = rhs.scale(Complex64::new(0.5, 0.0));
        for (e, c) in q_g.iter_terms() {
            q.add_term(e, c);
        }
    }
    let square = q.square();
    let tol = SQUARE_COEFF_TOL * normalized.max_coeff_norm().max(1.0);
    square.approx_eq(&normalized, tol)
}

/// Substitution `z -> z + v` by binomial expansion of each term.
fn shift(p: &PolyTable, v: &[Complex64]) -> PolyTable {
    let nvars = p.nvars();
    let mut out = PolyTable::zero(nvars);
    for (exps, coeff) in p.iter_terms() {
        // expand prod (z_i + v_i)^{e_i}
        let mut partial: Vec<(Vec<u16>, Complex64)> = vec![(vec![0u16; nvars], coeff)];
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
            for (base_exps, base_coeff) in &partial {
                // binomial coefficients C(e, k) v_i^{e-k} z_i^k
                let mut binom = 1.0f64;
                for k in 0..=e {
                    if k > 0 {
                        binom *= (e - k + 1) as f64 / k as f64;
                    }
                    let mut pw = Complex64::new(1.0, 0.0);
                    for _ in 0..(e - k) {
                        pw *= v[i];
                    }
                    let mut exps2 = base_exps.clone();
                    exps2[i] += k;
                    next.push((exps2, base_coeff * pw * binom));
                }
            }
            partial = next;
        }
        for (e2, c2) in partial {
            out.add_term(&e2, c2);
        }
    }
    out
}
