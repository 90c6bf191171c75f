//! Maps into all four classical domains built over a proper ball map `G`:
//! the block constructions `H_G` and `W_G`, the canonical isometries they
//! reduce to when `G` is the identity, the everywhere-holomorphic polynomial
//! isometries, and the paired linear embedding.

use super::component::{MapComponent, Rational};
use super::generators::identity_map;
use super::map::HoloMap;
use super::poly::PolyTable;
use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Extracts the rational (radical-free) parts of a generator after checking
/// the expected component count and that it fixes the origin.
fn generator_parts(g: &HoloMap, want: usize, role: &str) -> Result<Vec<Rational>> {
    if g.components.len() != want {
        return Err(Error::ShapeMismatch {
            expected: format!("{want} generator components for {role}"),
            got: format!("{}", g.components.len()),
        });
    }
    if !g.is_rational {
        return Err(Error::NotRational);
    }
    Ok(g.components.iter().map(|c| c.rational.clone()).collect())
}

/// `num / (den_base - 1)` for rational `num`, `den_base`.
fn over_shifted(num: &Rational, shift: &Rational) -> MapComponent {
    // a/b / ((c/d) - 1) = a d / (b (c - d))
    let den = num.den.mul(&shift.num.sub(&shift.den));
    MapComponent::from_rational(num.num.mul(&shift.den), den)
}

/// Rectangular-matrix map over `G = (g_1..g_q, h_2..h_p)`: first row the
/// `g`s, first column the `h`s, interior `h_i g_j / (g_1 - 1)`.
pub fn build_hg_type1(p: usize, q: usize, g: &HoloMap) -> Result<HoloMap> {
    if p < 2 || q < p {
        return Err(Error::BadParameter(format!(
            "matrix block construction requires q >= p >= 2, got ({p},{q})"
        )));
    }
    let parts = generator_parts(g, p + q - 1, "the rectangular-matrix construction")?;
    let (gs, hs) = parts.split_at(q);
    let g1 = &gs[0];
    let mut components = Vec::with_capacity(p * q);
    for gj in gs {
        components.push(MapComponent {
            rational: gj.clone(),
            radical: None,
        });
    }
    for hi in hs {
        components.push(MapComponent {
            rational: hi.clone(),
            radical: None,
        });
        for gj in &gs[1..] {
            let prod = Rational::new(hi.num.mul(&gj.num), hi.den.mul(&gj.den));
            components.push(over_shifted(&prod, g1));
        }
    }
    HoloMap::new(
        format!("HG_I[{},p={p},q={q}]", g.family),
        g.source_dim,
        DomainSpec::TypeI(p, q),
        components,
        1,
    )
}

/// Skew-matrix map over `G = (g_2..g_m, h_3..h_m)`; interior entries
/// `(g_i h_j - g_j h_i) / (g_2 - 1)`. The defect identity holds squared.
pub fn build_hg_type2(m: usize, g: &HoloMap) -> Result<HoloMap> {
    if m < 3 {
        return Err(Error::BadParameter(format!(
            "skew-matrix block construction requires m >= 3, got {m}"
        )));
    }
    let parts = generator_parts(g, 2 * m - 3, "the skew-matrix construction")?;
    let (gs, hs) = parts.split_at(m - 1); // g_2..g_m, h_3..h_m
    let g2 = &gs[0];
    // strict upper triangle, row-major
    let mut components = Vec::with_capacity(m * (m - 1) / 2);
    for gj in gs {
        components.push(MapComponent {
            rational: gj.clone(),
            radical: None,
        });
    }
    for hj in hs {
        components.push(MapComponent {
            rational: hj.clone(),
            radical: None,
        });
    }
    // rows i = 3..m (1-based), entries (i, j) with j > i
    for i in 3..=m {
        for j in (i + 1)..=m {
            let gi = &gs[i - 2];
            let gj = &gs[j - 2];
            let hi = &hs[i - 3];
            let hj = &hs[j - 3];
            let cross = Rational::new(
                gi.num
                    .mul(&hj.num)
                    .mul(&gj.den)
                    .mul(&hi.den)
                    .sub(&gj.num.mul(&hi.num).mul(&gi.den).mul(&hj.den)),
                gi.den.mul(&gj.den).mul(&hi.den).mul(&hj.den),
            );
            components.push(over_shifted(&cross, g2));
        }
    }
    HoloMap::new(
        format!("HG_II[{},m={m}]", g.family),
        g.source_dim,
        DomainSpec::TypeII(m),
        components,
        2,
    )
}

/// Symmetric-matrix map over `G = (g_1..g_m)`; interior entries
/// `g_i g_j / (2 (g_1 - 1))`.
pub fn build_hg_type3(m: usize, g: &HoloMap) -> Result<HoloMap> {
    if m < 2 || m < g.source_dim {
        return Err(Error::BadParameter(format!(
            "symmetric-matrix block construction requires m >= max(n, 2), got m = {m}, n = {}",
            g.source_dim
        )));
    }
    let gs = generator_parts(g, m, "the symmetric-matrix construction")?;
    let g1 = &gs[0];
    let inv_sqrt2 = re(1.0 / 2.0f64.sqrt());
    // upper triangle including the diagonal, row-major
    let mut components = Vec::with_capacity(m * (m + 1) / 2);
    components.push(MapComponent {
        rational: gs[0].clone(),
        radical: None,
    });
    for gj in &gs[1..] {
        components.push(MapComponent {
            rational: gj.scale(inv_sqrt2),
            radical: None,
        });
    }
    for i in 2..=m {
        for j in i..=m {
            let gi = &gs[i - 1];
            let gj = &gs[j - 1];
            let prod = Rational::new(
                gi.num.mul(&gj.num).scale(re(0.5)),
                gi.den.mul(&gj.den),
            );
            components.push(over_shifted(&prod, g1));
        }
    }
    HoloMap::new(
        format!("HG_III[{},m={m}]", g.family),
        g.source_dim,
        DomainSpec::TypeIII(m),
        components,
        1,
    )
}

/// Lie-ball map over `G = (g_1..g_m)` with the rational tail
/// `(P_m / Q, P_{m+1} / Q)`, `Q = sqrt(2) (1 - g_m)`.
pub fn build_hg_type4(m: usize, g: &HoloMap) -> Result<HoloMap> {
    if m < g.source_dim {
        return Err(Error::BadParameter(format!(
            "Lie-ball block construction requires m >= n, got m = {m}, n = {}",
            g.source_dim
        )));
    }
    let gs = generator_parts(g, m, "the Lie-ball construction")?;
    for gi in &gs {
        if !gi.is_polynomial() {
            return Err(Error::NotRational);
        }
    }
    let n = g.source_dim;
    let gm = &gs[m - 1].num;
    let mut half_sum = PolyTable::zero(n);
    for gi in &gs[..m - 1] {
        half_sum = half_sum.add(&gi.num.square());
    }
    half_sum = half_sum.scale(re(0.5));
    let gm2 = gm.square();
    let p_m = half_sum.sub(&gm2).add(gm);
    let p_m1 = half_sum.add(&gm2).sub(gm).scale(Complex64::new(0.0, 1.0));
    let q = PolyTable::one(n).sub(gm).scale(re(2.0f64.sqrt()));
    let mut components: Vec<MapComponent> = gs[..m - 1]
        .iter()
        .map(|gi| MapComponent {
            rational: gi.clone(),
            radical: None,
        })
        .collect();
    components.push(MapComponent::from_rational(p_m, q.clone()));
    components.push(MapComponent::from_rational(p_m1, q));
    HoloMap::new(
        format!("HG_IV[{},m={m}]", g.family),
        n,
        DomainSpec::TypeIV(m + 1),
        components,
        1,
    )
}

/// Lie-ball map over `G` with the radical tail
/// `1 - sqrt(1 - sum g_j^2)`.
pub fn build_wg(m: usize, g: &HoloMap) -> Result<HoloMap> {
    if m < g.source_dim {
        return Err(Error::BadParameter(format!(
            "Lie-ball radical construction requires m >= n, got m = {m}, n = {}",
            g.source_dim
        )));
    }
    let gs = generator_parts(g, m, "the Lie-ball radical construction")?;
    for gi in &gs {
        if !gi.is_polynomial() {
            return Err(Error::NotRational);
        }
    }
    let n = g.source_dim;
    let mut radicand = PolyTable::one(n);
    for gi in &gs {
        radicand = radicand.sub(&gi.num.square());
    }
    let mut components: Vec<MapComponent> = gs
        .iter()
        .map(|gi| MapComponent {
            rational: gi.clone(),
            radical: None,
        })
        .collect();
    components.push(MapComponent::with_radical(
        Rational::from_poly(PolyTable::one(n)),
        Rational::from_poly(PolyTable::constant(n, re(-1.0))),
        radicand,
    ));
    HoloMap::new(
        format!("WG[{},m={m}]", g.family),
        n,
        DomainSpec::TypeIV(m + 1),
        components,
        1,
    )
}

/// Canonical rectangular-matrix isometry from the ball of maximal dimension.
pub fn build_r_type1(p: usize, q: usize) -> Result<HoloMap> {
    let mut map = build_hg_type1(p, q, &identity_map(p + q - 1))?;
    map.family = format!("R_I[p={p},q={q}]");
    Ok(map)
}

/// Canonical skew-matrix isometry from the ball of maximal dimension.
pub fn build_r_type2(m: usize) -> Result<HoloMap> {
    let mut map = build_hg_type2(m, &identity_map(2 * m - 3))?;
    map.family = format!("R_II[m={m}]");
    Ok(map)
}

/// Canonical symmetric-matrix isometry from the ball of maximal dimension.
pub fn build_r_type3(m: usize) -> Result<HoloMap> {
    let mut map = build_hg_type3(m, &identity_map(m))?;
    map.family = format!("R_III[m={m}]");
    Ok(map)
}

/// Canonical rational Lie-ball isometry from the ball of maximal dimension.
pub fn build_r_type4(m: usize) -> Result<HoloMap> {
    if m < 2 {
        return Err(Error::BadParameter(format!(
            "the canonical Lie-ball maps require m >= 2, got {m}"
        )));
    }
    let mut map = build_hg_type4(m, &identity_map(m))?;
    map.family = format!("R_IV[m={m}]");
    Ok(map)
}

/// Canonical radical Lie-ball isometry from the ball of maximal dimension.
pub fn build_i_type4(m: usize) -> Result<HoloMap> {
    if m < 2 {
        return Err(Error::BadParameter(format!(
            "the canonical Lie-ball maps require m >= 2, got {m}"
        )));
    }
    let mut map = build_wg(m, &identity_map(m))?;
    map.family = format!("I_IV[m={m}]");
    Ok(map)
}

/// Which classical target a polynomial isometry is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyIsometryKind {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
}

/// Slice generator `(0, z_1, ..., z_{c-1})`: the identity map preceded by a
/// zero component, defined on the ball one dimension down.
fn slice_generator(total: usize) -> HoloMap {
    let n = total - 1;
    let mut components = Vec::with_capacity(total);
    components.push(MapComponent::zero(n));
    for i in 0..n {
        components.push(MapComponent::from_poly(PolyTable::var(n, i)));
    }
    HoloMap::new("slice", n, DomainSpec::Ball(total), components, 1)
        .expect("slice generator is well formed")
}

/// Polynomial isometries extending holomorphically to all of complex
/// affine space, one per classical target.
///
/// Dims: `(p, q)` with `q >= p >= 2` for the rectangular type, `n >= 4` for
/// the skew type, `n >= 2` for the symmetric and Lie-ball types.
pub fn build_polynomial_isometry(kind: PolyIsometryKind, dims: (usize, usize)) -> Result<HoloMap> {
    match kind {
        PolyIsometryKind::TypeI => {
            let (p, q) = dims;
            if p < 2 || q < p {
                return Err(Error::BadParameter(format!(
                    "polynomial rectangular isometry requires q >= p >= 2, got ({p},{q})"
                )));
            }
            // vanishing first generator component turns every interior
            // denominator into the constant -1
            let mut map = build_hg_type1(p, q, &slice_generator(p + q - 1))?;
            debug_assert!(map.is_polynomial);
            map.family = format!("poly_I[p={p},q={q}]");
            Ok(map)
        }
        PolyIsometryKind::TypeII => {
            let m = dims.0;
            if m < 4 {
                return Err(Error::BadParameter(format!(
                    "polynomial skew isometry requires n >= 4, got {m}"
                )));
            }
            let mut map = build_hg_type2(m, &slice_generator(2 * m - 3))?;
            debug_assert!(map.is_polynomial);
            map.family = format!("poly_II[n={m}]");
            Ok(map)
        }
        PolyIsometryKind::TypeIII => {
            let m = dims.0;
            if m < 2 {
                return Err(Error::BadParameter(format!(
                    "polynomial symmetric isometry requires n >= 2, got {m}"
                )));
            }
            let g = slice_generator(m);
            let mut map = build_hg_type3(m, &g)?;
            debug_assert!(map.is_polynomial);
            map.family = format!("poly_III[n={m}]");
            Ok(map)
        }
        PolyIsometryKind::TypeIV => {
            let m = dims.0;
            if m < 2 {
                return Err(Error::BadParameter(format!(
                    "polynomial Lie-ball isometry requires n >= 2, got {m}"
                )));
            }
            let n = m - 1;
            let mut components: Vec<MapComponent> = (0..n)
                .map(|i| MapComponent::from_poly(PolyTable::var(n, i)))
                .collect();
            let mut sum = PolyTable::zero(n);
            for i in 0..n {
                sum = sum.add(&PolyTable::var(n, i).square());
            }
            let quarter = 2.0f64.sqrt() / 4.0;
            components.push(MapComponent::from_poly(sum.scale(re(-quarter))));
            components.push(MapComponent::from_poly(
                sum.scale(Complex64::new(0.0, quarter)),
            ));
            HoloMap::new(
                format!("poly_IV[n={m}]"),
                n,
                DomainSpec::TypeIV(m + 1),
                components,
                1,
            )
        }
    }
}

/// The linear totally geodesic embedding into the Lie ball of dimension
/// `2n`: coordinates split into `(sqrt(2)/2 z_j, i sqrt(2)/2 z_j)` pairs,
/// so the squares cancel pairwise and `F F^t` vanishes identically.
pub fn linear_embedding_2n(n: usize) -> Result<HoloMap> {
    if n < 1 {
        return Err(Error::BadParameter("dimension must be positive".into()));
    }
    let h = 2.0f64.sqrt() / 2.0;
    let mut components = Vec::with_capacity(2 * n);
    for i in 0..n {
        let zi = PolyTable::var(n, i);
        components.push(MapComponent::from_poly(zi.scale(re(h))));
        components.push(MapComponent::from_poly(zi.scale(Complex64::new(0.0, h))));
    }
    HoloMap::new(
        format!("linear_2n[n={n}]"),
        n,
        DomainSpec::TypeIV(2 * n),
        components,
        1,
    )
}
