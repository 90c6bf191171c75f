//! Standard proper ball-to-ball generators: identity, the Whitney map,
//! homogeneous maps with multinomial coefficients, and user-supplied
//! monomial maps.

use super::component::MapComponent;
use super::map::HoloMap;
use super::poly::PolyTable;
use crate::domains::DomainSpec;
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

#[cfg(not(test))]
use num_traits::Float;

/// The identity map on the ball.
pub fn identity_map(n: usize) -> HoloMap {
    let components = (0..n)
        .map(|i| MapComponent::from_poly(PolyTable::var(n, i)))
        .collect();
    HoloMap::new(format!("identity[n={n}]"), n, DomainSpec::Ball(n), components, 1)
        .expect("identity map is well formed")
}

/// Whitney map into the ball of dimension `2n - 1`:
/// `(z_1, ..., z_{n-1}, z_1 z_n, ..., z_{n-1} z_n, z_n^2)`.
pub fn whitney(n: usize) -> Result<HoloMap> {
    if n < 1 {
        return Err(Error::BadParameter("dimension must be positive".into()));
    }
    let mut components = Vec::with_capacity(2 * n - 1);
    for i in 0..n - 1 {
        components.push(MapComponent::from_poly(PolyTable::var(n, i)));
    }
    let zn = PolyTable::var(n, n - 1);
    for i in 0..n - 1 {
        components.push(MapComponent::from_poly(PolyTable::var(n, i).mul(&zn)));
    }
    components.push(MapComponent::from_poly(zn.square()));
    HoloMap::new(
        format!("whitney[n={n}]"),
        n,
        DomainSpec::Ball(2 * n - 1),
        components,
        1,
    )
}

/// Homogeneous degree-`d` map whose components are `sqrt(d!/a!) z^a` over
/// all exponent vectors of total degree `d`, so the squared norms sum to
/// `|z|^(2d)`. That identity is spot-checked on construction.
pub fn homogeneous(n: usize, d: usize) -> Result<HoloMap> {
    if n < 1 || d < 1 {
        return Err(Error::BadParameter(
            "dimension and degree must be positive".into(),
        ));
    }
    if d > 12 {
        return Err(Error::BadParameter(
            "homogeneous degree capped at 12".into(),
        ));
    }
    let mut exponents = Vec::new();
    enumerate_compositions(n, d, &mut vec![0u16; n], 0, &mut exponents);
    // descending lexicographic order, deterministic
    exponents.sort();
    exponents.reverse();
    let components: Vec<MapComponent> = exponents
        .iter()
        .map(|exps| {
            let coeff = (multinomial(d, exps)).sqrt();
            MapComponent::from_poly(PolyTable::monomial(n, exps, Complex64::new(coeff, 0.0)))
        })
        .collect();
    let map = HoloMap::new(
        format!("homogeneous[n={n},d={d}]"),
        n,
        DomainSpec::Ball(components.len()),
        components,
        1,
    )?;
    // boundary identity check at fixed sample points
    for s in 0..5 {
        let z: Vec<Complex64> = (0..n)
            .map(|i| {
                let phase = 0.7 * (s as f64 + 1.0) + 1.3 * i as f64;
                Complex64::from_polar(0.9, phase)
            })
            .collect();
        let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
        let img: f64 = map
            .eval_components(&z)
            .expect("interior evaluation")
            .iter()
            .map(|v| v.norm_sqr())
            .sum();
        if (img - r2.powi(d as i32)).abs() > 1e-10 * r2.powi(d as i32).max(1.0) {
            return Err(Error::IllConditioned(
                "multinomial identity failed on samples".into(),
            ));
        }
    }
    Ok(map)
}

/// Monomial map from an explicit term list; coefficients are real by
/// construction of the input.
pub fn monomial_map(n: usize, terms: &[(Vec<u16>, f64)]) -> Result<HoloMap> {
    if terms.is_empty() {
        return Err(Error::BadParameter("term list must be nonempty".into()));
    }
    let mut components = Vec::with_capacity(terms.len());
    for (exps, coeff) in terms {
        if exps.len() != n {
            return Err(Error::BadParameter(format!(
                "exponent vector length {} does not match dimension {n}",
                exps.len()
            )));
        }
        if exps.iter().all(|&e| e == 0) {
            return Err(Error::BadParameter(
                "constant components are not allowed (the map must fix the origin)".into(),
            ));
        }
        components.push(MapComponent::from_poly(PolyTable::monomial(
            n,
            exps,
            Complex64::new(*coeff, 0.0),
        )));
    }
    HoloMap::new(
        format!("monomial[n={n},c={}]", terms.len()),
        n,
        DomainSpec::Ball(components.len()),
        components,
        1,
    )
}

fn enumerate_compositions(
    n: usize,
    remaining: usize,
    cur: &mut Vec<u16>,
    idx: usize,
    out: &mut Vec<Vec<u16>>,
) {
    if idx == n - 1 {
        cur[idx] = remaining as u16;
        out.push(cur.clone());
        cur[idx] = 0;
        return;
    }
    for take in (0..=remaining).rev() {
        cur[idx] = take as u16;
        enumerate_compositions(n, remaining - take, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

fn multinomial(d: usize, exps: &[u16]) -> f64 {
    let mut value = 1.0f64;
    let mut left = d;
    for &e in exps {
        // multiply binomial(left, e) factor by factor
        for i in 0..e as usize {
            value *= (left - i) as f64 / (i + 1) as f64;
        }
        left -= e as usize;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapzoo::BallMap;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn whitney_two_components_and_sphere_identity() {
        let w = whitney(2).unwrap();
        assert_eq!(w.components.len(), 3);
        let z = [c(0.3, 0.2), c(-0.4, 0.1)];
        let vals = w.eval_components(&z).unwrap();
        assert!((vals[0] - z[0]).norm() < 1e-15);
        assert!((vals[1] - z[0] * z[1]).norm() < 1e-15);
        assert!((vals[2] - z[1] * z[1]).norm() < 1e-15);
        // sum of squared norms approaches 1 on the sphere
        let s: f64 = vals.iter().map(|v| v.norm_sqr()).sum();
        let z1 = z[0].norm_sqr();
        let z2 = z[1].norm_sqr();
        assert!((s - (z1 + z2 * (z1 + z2))).abs() < 1e-15);
    }

    #[test]
    fn homogeneous_2_2_matches_hand_coefficients() {
        let h = homogeneous(2, 2).unwrap();
        assert_eq!(h.components.len(), 3);
        let z = [c(0.5, 0.1), c(0.2, -0.3)];
        let vals = h.eval_components(&z).unwrap();
        let s2 = 2.0f64.sqrt();
        assert!((vals[0] - z[0] * z[0]).norm() < 1e-15);
        assert!((vals[1] - z[0] * z[1] * s2).norm() < 1e-14);
        assert!((vals[2] - z[1] * z[1]).norm() < 1e-15);
    }

    #[test]
    fn identity_is_identity() {
        let id = identity_map(3);
        let z = [c(0.1, 0.0), c(0.0, 0.2), c(-0.3, 0.1)];
        assert_eq!(id.eval_flat(&z).unwrap(), z.to_vec());
    }

    #[test]
    fn monomial_map_validates_input() {
        assert!(monomial_map(2, &[]).is_err());
        assert!(monomial_map(2, &[(vec![0, 0], 1.0)]).is_err());
        assert!(monomial_map(2, &[(vec![1], 1.0)]).is_err());
        let m = monomial_map(2, &[(vec![1, 0], 0.5), (vec![1, 2], 2.0)]).unwrap();
        assert_eq!(m.components.len(), 2);
    }
}
