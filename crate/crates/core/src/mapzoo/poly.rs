//! Sparse multivariate polynomials over the complex numbers, keyed by
//! exponent vectors.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Coefficients below this modulus are dropped on insertion; it separates
/// representation noise from genuine terms.
pub const COEFF_CLEAN_TOL: f64 = 1e-15;

/// Sparse polynomial in `nvars` complex variables.
///
/// Terms live in a `BTreeMap` so iteration (and therefore evaluation and
/// serialization) is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyTable {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Complex64>,
}

impl PolyTable {
    pub fn zero(nvars: usize) -> Self {
        PolyTable {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Complex64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(&vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Complex64::new(1.0, 0.0))
    }

    /// The coordinate `z_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        Self::monomial(nvars, &exps, Complex64::new(1.0, 0.0))
    }

    pub fn monomial(nvars: usize, exps: &[u16], coeff: Complex64) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Complex64> {
        match self.terms.len() {
            0 => Some(Complex64::new(0.0, 0.0)),
            1 => {
                let (exps, &c) = self.terms.iter().next().unwrap();
                exps.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&[u16], Complex64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u16]) -> Complex64 {
        self.terms
            .get(exps)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Accumulates a term, dropping the entry if it falls below
    /// [`COEFF_CLEAN_TOL`].
    pub fn add_term(&mut self, exps: &[u16], coeff: Complex64) {
        assert_eq!(exps.len(), self.nvars);
        let entry = self
            .terms
            .entry(exps.to_vec())
            .or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
        if entry.norm() < COEFF_CLEAN_TOL {
            self.terms.remove(exps);
        }
    }

    pub fn add(&self, rhs: &PolyTable) -> PolyTable {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.iter_terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &PolyTable) -> PolyTable {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.iter_terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn neg(&self) -> PolyTable {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn scale(&self, s: Complex64) -> PolyTable {
        let mut out = PolyTable::zero(self.nvars);
        for (e, c) in self.iter_terms() {
            out.add_term(e, c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &PolyTable) -> PolyTable {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = PolyTable::zero(self.nvars);
        for (ea, ca) in self.iter_terms() {
            for (eb, cb) in rhs.iter_terms() {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exps, ca * cb);
            }
        }
        out
    }

    pub fn square(&self) -> PolyTable {
        self.mul(self)
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.nvars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (exps, c) in self.iter_terms() {
            let mut term = c;
            for (zi, &e) in z.iter().zip(exps) {
                if e > 0 {
                    term *= zi.powu(e as u32);
                }
            }
            acc += term;
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// `Some(d)` iff every term has total degree `d` (zero counts as
    /// homogeneous of degree 0).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Terms of total degree exactly `d`.
    pub fn graded_part(&self, d: usize) -> PolyTable {
        let mut out = PolyTable::zero(self.nvars);
        for (e, c) in self.iter_terms() {
            if e.iter().map(|&x| x as usize).sum::<usize>() == d {
                out.add_term(e, c);
            }
        }
        out
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops coefficients below `tol` relative to the largest one.
    pub fn drop_small_relative(&self, tol: f64) -> PolyTable {
        let cutoff = tol * self.max_coeff_norm();
        let mut out = PolyTable::zero(self.nvars);
        for (e, c) in self.iter_terms() {
            if c.norm() >= cutoff {
                out.add_term(e, c);
            }
        }
        out
    }

    /// Substitutes `z_i = 1`, merging terms.
    pub fn set_var_one(&self, i: usize) -> PolyTable {
        assert!(i < self.nvars);
        let mut out = PolyTable::zero(self.nvars);
        for (e, c) in self.iter_terms() {
            let mut exps = e.to_vec();
            exps[i] = 0;
            out.add_term(&exps, c);
        }
        out
    }

    /// `Some(k)` iff `self = k * rhs` entrywise within `tol` relative.
    pub fn proportionality(&self, rhs: &PolyTable, tol: f64) -> Option<Complex64> {
        if self.nvars != rhs.nvars || self.terms.len() != rhs.terms.len() {
            return None;
        }
        if rhs.is_zero() {
            return self.is_zero().then_some(Complex64::new(1.0, 0.0));
        }
        // anchor the ratio on the largest coefficient of rhs
        let (anchor, &cb) = rhs
            .terms
            .iter()
            .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())?;
        let ca = self.terms.get(anchor)?;
        let k = ca / cb;
        let scale = self.max_coeff_norm().max(rhs.max_coeff_norm() * k.norm());
        for (e, cb) in rhs.iter_terms() {
            let ca = self.coeff(e);
            if (ca - k * cb).norm() > tol * scale.max(1e-300) {
                return None;
            }
        }
        Some(k)
    }

    /// Entrywise closeness within `tol` absolute.
    pub fn approx_eq(&self, rhs: &PolyTable, tol: f64) -> bool {
        if self.nvars != rhs.nvars {
            return false;
        }
        let mut keys: alloc::collections::BTreeSet<&Vec<u16>> = self.terms.keys().collect();
        keys.extend(rhs.terms.keys());
        keys.into_iter()
            .all(|e| (self.coeff(e) - rhs.coeff(e)).norm() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn arithmetic_and_eval() {
        // p = 1 - z0^2 - 2 z0 z1
        let n = 2;
        let mut p = PolyTable::one(n);
        p.add_term(&[2, 0], c(-1.0, 0.0));
        p.add_term(&[1, 1], c(-2.0, 0.0));
        let z = [c(0.3, 0.1), c(-0.2, 0.4)];
        let want = c(1.0, 0.0) - z[0] * z[0] - z[0] * z[1] * 2.0;
        assert!((p.eval(&z) - want).norm() < 1e-15);
        assert_eq!(p.total_degree(), 2);

        let q = p.mul(&p);
        assert!((q.eval(&z) - want * want).norm() < 1e-14);
        assert_eq!(q.total_degree(), 4);
    }

    #[test]
    fn cleanup_threshold() {
        let mut p = PolyTable::zero(1);
        p.add_term(&[1], c(1e-16, 0.0));
        assert!(p.is_zero());
        p.add_term(&[1], c(1.0, 0.0));
        p.add_term(&[1], c(-1.0, 0.0));
        assert!(p.is_zero());
    }

    #[test]
    fn proportionality_detects_scalar_multiples() {
        let p = PolyTable::var(2, 0).sub(&PolyTable::one(2));
        let q = p.scale(c(0.0, -2.5));
        let k = q.proportionality(&p, 1e-13).unwrap();
        assert!((k - c(0.0, -2.5)).norm() < 1e-13);
        assert!(p.proportionality(&PolyTable::var(2, 1), 1e-13).is_none());
    }

    #[test]
    fn dehomogenize_merges_terms() {
        // z0^2 + z0 s + s^2 at s = 1 -> z0^2 + z0 + 1
        let mut p = PolyTable::zero(2);
        p.add_term(&[2, 0], c(1.0, 0.0));
        p.add_term(&[1, 1], c(1.0, 0.0));
        p.add_term(&[0, 2], c(1.0, 0.0));
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = p.set_var_one(1);
        assert_eq!(q.coeff(&[0, 0]), c(1.0, 0.0));
        assert_eq!(q.coeff(&[1, 0]), c(1.0, 0.0));
        assert_eq!(q.coeff(&[2, 0]), c(1.0, 0.0));
        assert!(q.homogeneous_degree().is_none());
    }
}
