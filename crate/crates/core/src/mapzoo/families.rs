//! The angle-parametrized families of isometries into the Lie ball and the
//! minimum proper maps built over monomial ball maps.

use super::component::{MapComponent, Rational};
use super::map::HoloMap;
use super::poly::PolyTable;
use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn im(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

fn check_angle_range(thetas: &[f64], closed_top: bool) -> Result<()> {
    for &t in thetas {
        let ok = t > 0.0 && if closed_top { t <= FRAC_PI_4 } else { t < FRAC_PI_4 };
        if !ok {
            return Err(Error::BadParameter(format!(
                "angle {t} outside (0, pi/4{}",
                if closed_top { "]" } else { ")" }
            )));
        }
    }
    Ok(())
}

fn all_quarter_pi(thetas: &[f64]) -> bool {
    thetas.iter().all(|t| (t - FRAC_PI_4).abs() < 1e-12)
}

/// `cos(angle) z_j` and `i sin(angle) z_j`.
fn angle_pair(n: usize, j: usize, angle: f64) -> [MapComponent; 2] {
    let zj = PolyTable::var(n, j);
    [
        MapComponent::from_poly(zj.scale(re(angle.cos()))),
        MapComponent::from_poly(zj.scale(im(angle.sin()))),
    ]
}

/// Shared body of the radical families: angle pairs on the first `k-1`
/// coordinates, plain coordinates after that, and the closing component
/// `1 - sqrt(1 - sum cos(2 a_j) z_j^2 - sum z_j^2)`.
fn i_general(n: usize, k: usize, angles: &[f64], family: String) -> Result<HoloMap> {
    debug_assert!(2 <= k && k <= n + 1);
    debug_assert_eq!(angles.len(), k - 1);
    let mut components = Vec::with_capacity(n + k);
    let mut radicand = PolyTable::one(n);
    for (j, &a) in angles.iter().enumerate() {
        components.extend(angle_pair(n, j, a));
        radicand = radicand.sub(&PolyTable::var(n, j).square().scale(re((2.0 * a).cos())));
    }
    let mut voided = true;
    for idx in (k - 1)..n {
        components.push(MapComponent::from_poly(PolyTable::var(n, idx)));
        radicand = radicand.sub(&PolyTable::var(n, idx).square());
        voided = false;
    }
    components.push(MapComponent::with_radical(
        Rational::from_poly(PolyTable::one(n)),
        Rational::from_poly(PolyTable::constant(n, re(-1.0))),
        radicand,
    ));
    let mut map = HoloMap::new(family, n, DomainSpec::TypeIV(n + k), components, 1)?;
    if voided {
        map = map.with_note(format!("plain coordinate block void for k = {k}"));
    }
    Ok(map)
}

/// Radical family `I` into the Lie ball of dimension `n + k`,
/// `2 <= k <= n + 2`.
///
/// Angle lists: `k - 1` angles for `k <= n + 1`; for `k = n + 2` pass `n`
/// pair angles plus one final mixing angle in the open interval.
pub fn build_i(n: usize, k: usize, thetas: &[f64]) -> Result<HoloMap> {
    if n < 2 || k < 2 || k > n + 2 {
        return Err(Error::BadParameter(format!(
            "family I requires n >= 2 and 2 <= k <= n + 2, got n = {n}, k = {k}"
        )));
    }
    let family = format!("I[n={n},k={k}]");
    if k <= n + 1 {
        if thetas.len() != k - 1 {
            return Err(Error::BadParameter(format!(
                "family I with k = {k} takes {} angles, got {}",
                k - 1,
                thetas.len()
            )));
        }
        check_angle_range(thetas, true)?;
        if k == n + 1 && all_quarter_pi(thetas) {
            return Err(Error::BadParameter(
                "angles must not all equal pi/4 for this family".into(),
            ));
        }
        return i_general(n, k, thetas, family);
    }
    // k = n + 2: all coordinates paired, two mixed radical components
    if thetas.len() != n + 1 {
        return Err(Error::BadParameter(format!(
            "family I with k = n + 2 takes n + 1 = {} angles, got {}",
            n + 1,
            thetas.len()
        )));
    }
    let (pair_angles, rest) = thetas.split_at(n);
    let mix = rest[0];
    check_angle_range(pair_angles, true)?;
    check_angle_range(&[mix], false)?;
    if all_quarter_pi(pair_angles) {
        return Err(Error::BadParameter(
            "angles must not all equal pi/4 for this family".into(),
        ));
    }
    let mut components = Vec::with_capacity(2 * n + 2);
    let mut u = PolyTable::zero(n);
    for (j, &a) in pair_angles.iter().enumerate() {
        components.extend(angle_pair(n, j, a));
        u = u.add(&PolyTable::var(n, j).square().scale(re((2.0 * a).cos())));
    }
    let radicand = PolyTable::one(n).sub(&u.scale(re((2.0 * mix).cos())));
    let c2 = (2.0 * mix).cos();
    for scalar in [re(mix.cos() / c2), im(mix.sin() / c2)] {
        components.push(MapComponent::with_radical(
            Rational::from_poly(PolyTable::constant(n, scalar)),
            Rational::from_poly(PolyTable::constant(n, -scalar)),
            radicand.clone(),
        ));
    }
    HoloMap::new(family, n, DomainSpec::TypeIV(2 * n + 2), components, 1)
}

/// Rational family `R` into the Lie ball of dimension `n + k`,
/// `2 <= k <= n + 2`.
///
/// Angle lists: `k - 1` angles for `k <= n`, `n - 1` for `k = n + 1`, `n`
/// for `k = n + 2`.
pub fn build_r(n: usize, k: usize, thetas: &[f64]) -> Result<HoloMap> {
    if n < 2 || k < 2 || k > n + 2 {
        return Err(Error::BadParameter(format!(
            "family R requires n >= 2 and 2 <= k <= n + 2, got n = {n}, k = {k}"
        )));
    }
    let family = format!("R[n={n},k={k}]");
    let inv_2s2 = 1.0 / (2.0 * 2.0f64.sqrt());
    if k <= n {
        if thetas.len() != k - 1 {
            return Err(Error::BadParameter(format!(
                "family R with k = {k} takes {} angles, got {}",
                k - 1,
                thetas.len()
            )));
        }
        check_angle_range(thetas, true)?;
        let mut components = Vec::with_capacity(n + k);
        // shared quadratic sum over paired and plain coordinates
        let mut s = PolyTable::zero(n);
        for (j, &a) in thetas.iter().enumerate() {
            components.extend(angle_pair(n, j, a));
            s = s.add(&PolyTable::var(n, j).square().scale(re((2.0 * a).cos())));
        }
        let mut voided = true;
        for idx in (k - 1)..(n - 1) {
            components.push(MapComponent::from_poly(PolyTable::var(n, idx)));
            s = s.add(&PolyTable::var(n, idx).square());
            voided = false;
        }
        let zn = PolyTable::var(n, n - 1);
        let zn2 = zn.square();
        let num_a = s.sub(&zn2.scale(re(2.0))).add(&zn.scale(re(2.0)));
        let num_b = s.add(&zn2.scale(re(2.0))).sub(&zn.scale(re(2.0)));
        let den = PolyTable::one(n).sub(&zn);
        components.push(MapComponent {
            rational: Rational::new(num_a.scale(re(inv_2s2)), den.clone()),
            radical: None,
        });
        components.push(MapComponent {
            rational: Rational::new(num_b.scale(im(-inv_2s2)), den),
            radical: None,
        });
        let mut map = HoloMap::new(family, n, DomainSpec::TypeIV(n + k), components, 1)?;
        if voided {
            map = map.with_note(format!("plain coordinate block void for k = {k}"));
        }
        return Ok(map);
    }
    // polynomial forms: k = n + 1 pairs all but the last coordinate,
    // k = n + 2 pairs all of them
    let pairs = if k == n + 1 { n - 1 } else { n };
    if thetas.len() != pairs {
        return Err(Error::BadParameter(format!(
            "family R with k = {k} takes {pairs} angles, got {}",
            thetas.len()
        )));
    }
    check_angle_range(thetas, true)?;
    let mut components = Vec::with_capacity(n + k);
    let mut u = PolyTable::zero(n);
    for (j, &a) in thetas.iter().enumerate() {
        components.extend(angle_pair(n, j, a));
        u = u.add(&PolyTable::var(n, j).square().scale(re((2.0 * a).cos())));
    }
    if k == n + 1 {
        components.push(MapComponent::from_poly(PolyTable::var(n, n - 1)));
        u = u.add(&PolyTable::var(n, n - 1).square());
    }
    components.push(MapComponent::from_poly(u.scale(re(inv_2s2))));
    components.push(MapComponent::from_poly(u.scale(im(-inv_2s2))));
    HoloMap::new(family, n, DomainSpec::TypeIV(n + k), components, 1)
}

/// The one-real-parameter families: the first coordinate carries `theta`,
/// coordinates `2..k-1` carry the fixed `beta`, and `k = n + 2` mixes the
/// radical through `alpha`.
pub fn build_i_family4(
    n: usize,
    k: usize,
    theta: f64,
    beta: Option<f64>,
    alpha: Option<f64>,
) -> Result<HoloMap> {
    if n < 2 || k < 2 || k > n + 2 {
        return Err(Error::BadParameter(format!(
            "family I_theta requires n >= 2 and 2 <= k <= n + 2, got n = {n}, k = {k}"
        )));
    }
    check_angle_range(&[theta], true)?;
    let family = format!("I_theta[n={n},k={k}]");
    if k == 2 {
        return i_general(n, 2, &[theta], family);
    }
    let beta = beta.ok_or_else(|| {
        Error::BadParameter("this family requires the fixed angle beta".into())
    })?;
    if !(beta > 0.0 && beta <= theta) {
        return Err(Error::BadParameter(format!(
            "angles must satisfy 0 < beta <= theta, got beta = {beta}, theta = {theta}"
        )));
    }
    if k <= n + 1 {
        let mut angles = Vec::with_capacity(k - 1);
        angles.push(theta);
        angles.extend(core::iter::repeat_n(beta, k - 2));
        return i_general(n, k, &angles, family);
    }
    // k = n + 2
    let alpha = alpha.ok_or_else(|| {
        Error::BadParameter("this family requires the mixing angle alpha".into())
    })?;
    check_angle_range(&[alpha], false)?;
    check_angle_range(&[beta], false)?;
    let mut components = Vec::with_capacity(2 * n + 2);
    let mut u = PolyTable::var(n, 0).square().scale(re((2.0 * theta).cos()));
    components.extend(angle_pair(n, 0, theta));
    for j in 1..n {
        components.extend(angle_pair(n, j, beta));
        u = u.add(&PolyTable::var(n, j).square().scale(re((2.0 * beta).cos())));
    }
    let c2 = (2.0 * alpha).cos();
    let radicand = PolyTable::one(n).sub(&u.scale(re(c2)));
    // (cos a / cos 2a)(1 - sqrt(Y)) and (i sin a / cos 2a)(sqrt(Y) - 1)
    let first = re(alpha.cos() / c2);
    components.push(MapComponent::with_radical(
        Rational::from_poly(PolyTable::constant(n, first)),
        Rational::from_poly(PolyTable::constant(n, -first)),
        radicand.clone(),
    ));
    let second = im(alpha.sin() / c2);
    components.push(MapComponent::with_radical(
        Rational::from_poly(PolyTable::constant(n, -second)),
        Rational::from_poly(PolyTable::constant(n, second)),
        radicand,
    ));
    HoloMap::new(family, n, DomainSpec::TypeIV(2 * n + 2), components, 1)
}

/// Minimum proper map into the Lie ball of dimension `N + k` built over a
/// monomial ball map with real coefficients, `1 <= k <= N + 1`;
/// `theta` is required (in the open interval) once `k >= 2`.
pub fn build_mnk(f: &HoloMap, k: usize, theta: Option<f64>) -> Result<HoloMap> {
    let cap = match f.target {
        DomainSpec::Ball(cap) => cap,
        other => {
            return Err(Error::BadParameter(format!(
                "base map must target a ball, got {}",
                other.label()
            )))
        }
    };
    let n_comp = f.components.len();
    debug_assert_eq!(n_comp, cap);
    let monomials: Option<Vec<(Vec<u16>, Complex64)>> =
        f.components.iter().map(|c| c.as_monomial()).collect();
    let monomials = monomials.ok_or_else(|| {
        Error::BadParameter("base map components must be single monomials".into())
    })?;
    if monomials.iter().any(|(_, c)| c.im.abs() > 1e-15) {
        return Err(Error::BadParameter(
            "base map coefficients must be real".into(),
        ));
    }
    if k == 0 || k > n_comp + 1 {
        return Err(Error::BadParameter(format!(
            "k must lie in [1, N + 1] = [1, {}], got {k}",
            n_comp + 1
        )));
    }
    let n = f.source_dim;
    let family = format!("M[{},k={k}]", f.family);
    let squares: Vec<PolyTable> = f
        .components
        .iter()
        .map(|c| c.rational.num.square())
        .collect();
    let mut components = Vec::with_capacity(n_comp + k);
    let mut radicand = PolyTable::one(n);
    if k == 1 {
        components.extend(f.components.iter().cloned());
        for s in &squares {
            radicand = radicand.sub(s);
        }
    } else {
        let theta = theta.ok_or_else(|| {
            Error::BadParameter("a mixing angle is required once k >= 2".into())
        })?;
        check_angle_range(&[theta], false)?;
        let c2 = (2.0 * theta).cos();
        for j in 0..k - 1 {
            let base = &f.components[j].rational.num;
            components.push(MapComponent::from_poly(base.scale(re(theta.cos()))));
            components.push(MapComponent::from_poly(base.scale(im(theta.sin()))));
            radicand = radicand.sub(&squares[j].scale(re(c2)));
        }
        for j in k - 1..n_comp {
            components.push(f.components[j].clone());
            radicand = radicand.sub(&squares[j]);
        }
    }
    components.push(MapComponent::with_radical(
        Rational::from_poly(PolyTable::one(n)),
        Rational::from_poly(PolyTable::constant(n, re(-1.0))),
        radicand,
    ));
    let mut map = HoloMap::new(family, n, DomainSpec::TypeIV(n_comp + k), components, 1)?;
    if k == n_comp + 1 {
        map = map.with_note("plain component block void for k = N + 1");
    }
    Ok(map)
}
