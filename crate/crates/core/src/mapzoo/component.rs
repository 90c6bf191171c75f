//! The normal form of one map component: a rational function plus an
//! optional single-radical term, `r(z) + s(z) sqrt(S(z))`.
//!
//! Every map shipped by this crate is either rational or carries exactly one
//! square root whose radicand has `S(0) = 1` and `Re S > 0` on the ball;
//! the evaluation path guards both.

use super::poly::PolyTable;
use crate::error::{Error, Result};
use alloc::vec::Vec;
use num_complex::Complex64;

/// Modulus below which a denominator aborts evaluation.
pub const DENOMINATOR_GUARD: f64 = 1e-14;

/// Quotient of two polynomial tables. Constant denominators are folded into
/// the numerator on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Rational {
    pub num: PolyTable,
    pub den: PolyTable,
}

impl Rational {
    pub fn from_poly(num: PolyTable) -> Self {
        let den = PolyTable::one(num.nvars());
        Rational { num, den }
    }

    pub fn new(num: PolyTable, den: PolyTable) -> Self {
        assert_eq!(num.nvars(), den.nvars());
        if let Some(c) = den.as_constant() {
            assert!(c.norm() > 0.0, "denominator must not vanish identically");
            Rational {
                num: num.scale(Complex64::new(1.0, 0.0) / c),
                den: PolyTable::one(num.nvars()),
            }
        } else {
            Rational { num, den }
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(PolyTable::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, z: &[Complex64]) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm() < DENOMINATOR_GUARD {
            return Err(Error::SmallDenominator { value: d.norm() });
        }
        Ok(self.num.eval(z) / d)
    }

    pub fn scale(&self, s: Complex64) -> Rational {
        Rational {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// Sum of two quotients; denominators that are scalar multiples of each
    /// other share a common form instead of being multiplied out.
    pub fn add(&self, rhs: &Rational) -> Rational {
        if let Some(k) = rhs.den.proportionality(&self.den, 1e-13) {
            // rhs = rhs.num / (k * self.den)
            let merged = self
                .num
                .add(&rhs.num.scale(Complex64::new(1.0, 0.0) / k));
            return Rational::new(merged, self.den.clone());
        }
        Rational::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

/// Radical part `s(z) sqrt(S(z))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Radical {
    pub coeff: Rational,
    pub radicand: PolyTable,
}

/// One component of a holomorphic map in normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct MapComponent {
    pub rational: Rational,
    pub radical: Option<Radical>,
}

impl MapComponent {
    pub fn zero(nvars: usize) -> Self {
        MapComponent {
            rational: Rational::zero(nvars),
            radical: None,
        }
    }

    pub fn from_poly(p: PolyTable) -> Self {
        MapComponent {
            rational: Rational::from_poly(p),
            radical: None,
        }
    }

    pub fn from_rational(num: PolyTable, den: PolyTable) -> Self {
        MapComponent {
            rational: Rational::new(num, den),
            radical: None,
        }
    }

    pub fn with_radical(rational: Rational, coeff: Rational, radicand: PolyTable) -> Self {
        MapComponent {
            rational,
            radical: Some(Radical { coeff, radicand }),
        }
    }

    pub fn nvars(&self) -> usize {
        self.rational.nvars()
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_none()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_rational() && self.rational.is_polynomial()
    }

    /// `Some((exps, c))` iff the component is a single monomial with
    /// coefficient `c`.
    pub fn as_monomial(&self) -> Option<(Vec<u16>, Complex64)> {
        if !self.is_polynomial() || self.rational.num.term_count() != 1 {
            return None;
        }
        let (e, c) = self.rational.num.iter_terms().next()?;
        Some((e.to_vec(), c))
    }

    /// Principal-branch evaluation with the `Re S > 0` guard.
    pub fn eval(&self, z: &[Complex64]) -> Result<Complex64> {
        let mut value = self.rational.eval(z)?;
        if let Some(rad) = &self.radical {
            let s = rad.radicand.eval(z);
            if s.re <= 0.0 {
                return Err(Error::BranchGuard { re: s.re });
            }
            value += rad.coeff.eval(z)? * s.sqrt();
        }
        Ok(value)
    }

    pub fn scale(&self, s: Complex64) -> MapComponent {
        MapComponent {
            rational: self.rational.scale(s),
            radical: self.radical.as_ref().map(|r| Radical {
                coeff: r.coeff.scale(s),
                radicand: r.radicand.clone(),
            }),
        }
    }

    /// Real- or complex-weighted sum of components.
    ///
    /// Radical parts must share one radicand table (all shipped families
    /// do); mixing distinct radicands has no normal form and is rejected.
    pub fn linear_combination(parts: &[(Complex64, &MapComponent)]) -> Result<MapComponent> {
        let nvars = parts
            .first()
            .map(|(_, c)| c.nvars())
            .expect("at least one component");
        let mut rational = Rational::zero(nvars);
        let mut radical: Option<Radical> = None;
        for (w, comp) in parts {
            if *w == Complex64::new(0.0, 0.0) {
                continue;
            }
            rational = rational.add(&comp.rational.scale(*w));
            if let Some(rad) = &comp.radical {
                match &mut radical {
                    None => {
                        radical = Some(Radical {
                            coeff: rad.coeff.scale(*w),
                            radicand: rad.radicand.clone(),
                        })
                    }
                    Some(acc) => {
                        if !acc.radicand.approx_eq(&rad.radicand, 1e-13) {
                            return Err(Error::RadicandMismatch);
                        }
                        acc.coeff = acc.coeff.add(&rad.coeff.scale(*w));
                    }
                }
            }
        }
        // a radical whose coefficient collapsed to zero drops out
        if let Some(rad) = &radical {
            if rad.coeff.is_zero() {
                radical = None;
            }
        }
        Ok(MapComponent { rational, radical })
    }
}
