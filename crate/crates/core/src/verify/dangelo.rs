//! Unitary decomposition of Lie-ball isometries and the quadratic
//! classification it induces.
//!
//! An isometry `F` into the Lie ball satisfies
//! `sum |F_i|^2 = |z|^2 + |h|^2` with `h = (sum F_i^2)/2`, so the tuple
//! `(z_1, ..., z_n, h, 0, ..., 0)` is related to `F` by a constant unitary.
//! The unitary is fit by least squares over samples, completed to a square
//! matrix, and polished by polar projection.

use super::plan::{sample_ball_points, SamplePlan};
use super::residual::isometry_residual;
use super::TOL_DECOMPOSITION;
use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::mapzoo::{BallMap, HoloMap, PolyTable};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// Samples for the fit are capped at this radius; radical components
/// condition poorly near the fit boundary.
const FIT_RADIUS_CAP: f64 = 0.7;

/// Result of the unitary decomposition.
#[derive(Debug, Clone)]
pub struct DAngeloDecomposition {
    /// `m x m` unitary with `(z, h, 0, ..., 0) V = F`.
    pub v: CMatrix,
    pub source_dim: usize,
    /// Max reconstruction residual over the fit samples.
    pub residual: f64,
    /// Exact coefficient table of `h` when the map is polynomial.
    pub h_table: Option<PolyTable>,
}

/// Half the sum of squared components of the image at `z`.
fn half_square_sum(values: &[Complex64]) -> Complex64 {
    values.iter().map(|v| v * v).sum::<Complex64>() * 0.5
}

/// Fits the constant unitary relating `(z, h, 0...)` to `F` over at least
/// `4 m^2` interior samples.
pub fn dangelo_solve(map: &HoloMap, plan: &SamplePlan) -> Result<DAngeloDecomposition> {
    let m = match map.target {
        DomainSpec::TypeIV(m) => m,
        ref other => {
            return Err(Error::BadParameter(format!(
                "decomposition applies to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    let n = map.source_dim;
    // the decomposition only exists under the defect identity
    let gate = isometry_residual(map, &SamplePlan::new(200, plan.seed ^ 0x5eed))?;
    if !gate.pass {
        return Err(Error::NotIsometric {
            residual: gate.max_residual,
            tolerance: gate.tolerance,
        });
    }
    let mut fit_plan = plan.clone();
    fit_plan.count = plan.count.max(4 * m * m);
    fit_plan.rmax = Some(plan.rmax.unwrap_or(FIT_RADIUS_CAP).min(FIT_RADIUS_CAP));
    let points = sample_ball_points(&fit_plan, n)?;
    let rows = points.len();

    // left factor A (rows x (n+1)) and image B (rows x m)
    let mut a = CMatrix::zeros(rows, n + 1);
    let mut b = CMatrix::zeros(rows, m);
    let mut h_scale = 0.0f64;
    for (r, z) in points.iter().enumerate() {
        let values = map.eval_flat(z)?;
        for (i, zi) in z.iter().enumerate() {
            a.set(r, i, *zi);
        }
        let h = half_square_sum(&values);
        h_scale = h_scale.max(h.norm());
        a.set(r, n, h);
        for (j, v) in values.iter().enumerate() {
            b.set(r, j, *v);
        }
    }

    // normal equations for the determined rows of V
    let h_degenerate = h_scale < 1e-12;
    let cols = if h_degenerate { n } else { n + 1 };
    let ah = a.submatrix(
        &(0..rows).collect::<Vec<_>>(),
        &(0..cols).collect::<Vec<_>>(),
    );
    let gram = ah.hermitian().mul(&ah);
    let rhs = ah.hermitian().mul(&b);
    let mut v_rows: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    {
        // solve gram X = rhs column by column
        let mut x = CMatrix::zeros(cols, m);
        for j in 0..m {
            let col: Vec<Complex64> = (0..cols).map(|i| rhs[(i, j)]).collect();
            let sol = gram.solve(&col).map_err(|_| {
                Error::IllConditioned("normal equations of the unitary fit are singular".into())
            })?;
            for i in 0..cols {
                x.set(i, j, sol[i]);
            }
        }
        for i in 0..cols {
            v_rows.push((0..m).map(|j| x[(i, j)]).collect());
        }
    }
    if h_degenerate {
        // the row multiplying h is unconstrained; fill it with the
        // orthonormal completion below
        v_rows.push(vec![Complex64::new(0.0, 0.0); m]);
    }
    complete_rows(&mut v_rows, m)?;
    if h_degenerate {
        // move a completion vector into the h slot
        let filler = v_rows.remove(n + 1);
        v_rows[n] = filler;
        v_rows.insert(n + 1, vec![Complex64::new(0.0, 0.0); m]);
        v_rows.truncate(m);
        // repair: rebuild trailing rows to stay orthonormal
        let head: Vec<Vec<Complex64>> = v_rows[..n + 1].to_vec();
        v_rows = head;
        complete_rows(&mut v_rows, m)?;
    }
    let v = CMatrix::from_rows(&v_rows).polar_unitary()?;

    // reconstruction residual over the fit samples
    let mut residual = 0.0f64;
    for z in &points {
        let values = map.eval_flat(z)?;
        let h = half_square_sum(&values);
        for j in 0..m {
            let mut rec = Complex64::new(0.0, 0.0);
            for (i, zi) in z.iter().enumerate() {
                rec += zi * v[(i, j)];
            }
            rec += h * v[(n, j)];
            residual = residual.max((rec - values[j]).norm());
        }
    }
    if residual > TOL_DECOMPOSITION {
        return Err(Error::IllConditioned(format!(
            "reconstruction residual {residual:e} exceeds {TOL_DECOMPOSITION:e}"
        )));
    }
    let h_table = map.is_polynomial.then(|| {
        let mut acc = PolyTable::zero(n);
        for comp in &map.components {
            acc = acc.add(&comp.rational.num.square());
        }
        acc.scale(Complex64::new(0.5, 0.0))
    });
    Ok(DAngeloDecomposition {
        v,
        source_dim: n,
        residual,
        h_table,
    })
}

/// Extends a set of (near-)orthonormal rows to `m` rows by Gram-Schmidt
/// over the standard basis.
fn complete_rows(rows: &mut Vec<Vec<Complex64>>, m: usize) -> Result<()> {
    let mut candidate = 0usize;
    while rows.len() < m {
        if candidate >= m {
            return Err(Error::IllConditioned(
                "unitary completion ran out of basis vectors".into(),
            ));
        }
        let mut w: Vec<Complex64> = (0..m)
            .map(|k| {
                if k == candidate {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        for _ in 0..2 {
            for row in rows.iter() {
                let inner: Complex64 = w.iter().zip(row).map(|(a, b)| a * b.conj()).sum();
                let norm_sqr: f64 = row.iter().map(|v| v.norm_sqr()).sum();
                if norm_sqr > 0.0 {
                    for (wk, rk) in w.iter_mut().zip(row) {
                        *wk -= inner / norm_sqr * rk;
                    }
                }
            }
        }
        let norm = w.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        candidate += 1;
        if norm < 1e-4 {
            continue;
        }
        for wk in w.iter_mut() {
            *wk /= norm;
        }
        rows.push(w);
    }
    Ok(())
}

/// Tags of the quadratic classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadraticTag {
    /// `h` vanishes identically: the map is linear.
    HZeroLinear,
    /// `a = 0` and `h = q / (2 - p)`: the map has degree two.
    AZeroDegree2,
    /// Neither branch holds within tolerance (irrational maps land here).
    Inconsistent,
}

impl QuadraticTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            QuadraticTag::HZeroLinear => "h_zero_linear",
            QuadraticTag::AZeroDegree2 => "a_zero_degree2",
            QuadraticTag::Inconsistent => "inconsistent",
        }
    }
}

/// The data of the induced quadratic relation
/// `a h^2 + (p(z) - 2) h + q(z) = 0`.
#[derive(Debug, Clone)]
pub struct QuadraticData {
    pub a: Complex64,
    /// Homogeneous linear part.
    pub p: PolyTable,
    /// Homogeneous quadratic part.
    pub q: PolyTable,
    pub tag: QuadraticTag,
}

/// Extracts `a`, `p`, `q` from the fitted unitary and classifies the map.
///
/// `a` sums the squares of the full `h` row (all `m` columns); `p` and `q`
/// assemble the corresponding mixed sums of the coordinate rows.
pub fn quadratic_classify(
    dec: &DAngeloDecomposition,
    map: &HoloMap,
    plan: &SamplePlan,
) -> Result<QuadraticData> {
    let n = dec.source_dim;
    let m = dec.v.rows();
    let v = &dec.v;
    let mut a = Complex64::new(0.0, 0.0);
    for j in 0..m {
        a += v[(n, j)] * v[(n, j)];
    }
    let mut p = PolyTable::zero(n);
    for i in 0..n {
        let mut coeff = Complex64::new(0.0, 0.0);
        for j in 0..m {
            coeff += v[(n, j)] * v[(i, j)];
        }
        let mut exps = vec![0u16; n];
        exps[i] = 1;
        p.add_term(&exps, coeff * 2.0);
    }
    let mut q = PolyTable::zero(n);
    for i in 0..n {
        for i2 in i..n {
            let mut coeff = Complex64::new(0.0, 0.0);
            for j in 0..m {
                coeff += v[(i, j)] * v[(i2, j)];
            }
            if i != i2 {
                coeff *= 2.0;
            }
            let mut exps = vec![0u16; n];
            exps[i] += 1;
            exps[i2] += 1;
            q.add_term(&exps, coeff);
        }
    }

    // classify against sampled values of h
    let mut fit_plan = plan.clone();
    fit_plan.rmax = Some(plan.rmax.unwrap_or(FIT_RADIUS_CAP).min(FIT_RADIUS_CAP));
    let points = sample_ball_points(&fit_plan, n)?;
    let mut h_max = 0.0f64;
    let mut branch_residual = 0.0f64;
    for z in &points {
        let values = map.eval_flat(z)?;
        let h = half_square_sum(&values);
        h_max = h_max.max(h.norm());
        let pz = p.eval(z);
        let qz = q.eval(z);
        let denom = Complex64::new(2.0, 0.0) - pz;
        if denom.norm() > 1e-8 {
            branch_residual = branch_residual.max((h - qz / denom).norm());
        }
    }
    let tag = if h_max <= 1e-8 {
        QuadraticTag::HZeroLinear
    } else if a.norm() <= 1e-7 && branch_residual <= 1e-7 {
        QuadraticTag::AZeroDegree2
    } else {
        QuadraticTag::Inconsistent
    };
    Ok(QuadraticData { a, p, q, tag })
}

/// Max residual of `a h^2 + (p - 2) h + q` over fresh samples.
pub fn quadratic_relation_residual(
    data: &QuadraticData,
    map: &HoloMap,
    plan: &SamplePlan,
) -> Result<f64> {
    let mut capped = plan.clone();
    capped.rmax = Some(plan.rmax.unwrap_or(FIT_RADIUS_CAP).min(FIT_RADIUS_CAP));
    let mut worst = 0.0f64;
    for z in sample_ball_points(&capped, map.source_dim)? {
        let values = map.eval_flat(&z)?;
        let h = half_square_sum(&values);
        let rel = data.a * h * h + (data.p.eval(&z) - Complex64::new(2.0, 0.0)) * h
            + data.q.eval(&z);
        worst = worst.max(rel.norm());
    }
    Ok(worst)
}
