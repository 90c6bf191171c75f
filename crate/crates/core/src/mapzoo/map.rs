//! The map type shared by every family: a list of components in normal
//! form, a target domain, and the defect exponent its isometry identity is
//! stated with.

use super::component::MapComponent;
use super::poly::PolyTable;
use crate::domains::{apply_aut_ball, apply_aut_iv, AutBall, AutIV, DomainSpec, Point};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, RMatrix};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Anything that maps the unit ball holomorphically into a classical domain
/// and can be evaluated pointwise. Symbolic maps implement it; so do
/// black-box compositions with automorphisms.
pub trait BallMap {
    fn label(&self) -> String;
    fn source_dim(&self) -> usize;
    fn target(&self) -> DomainSpec;
    /// Exponent `e` in the defect identity `defect(F(z)) = (1 - |z|^2)^e`
    /// the map is declared against (2 for the skew-matrix target, else 1).
    fn defect_exponent(&self) -> u32;
    fn eval(&self, z: &[Complex64]) -> Result<Point>;
    fn eval_flat(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        Ok(self.eval(z)?.flatten())
    }
}

/// A map family instance with symbolic components.
#[derive(Debug, Clone)]
pub struct HoloMap {
    pub family: String,
    pub source_dim: usize,
    pub target: DomainSpec,
    pub components: Vec<MapComponent>,
    pub is_polynomial: bool,
    pub is_rational: bool,
    pub defect_exponent: u32,
    /// Degenerate index ranges voided during construction, one note each.
    pub notes: Vec<String>,
}

impl HoloMap {
    /// Builds a map after checking the component count against the target
    /// shape and that the map fixes the origin.
    pub fn new(
        family: impl Into<String>,
        source_dim: usize,
        target: DomainSpec,
        components: Vec<MapComponent>,
        defect_exponent: u32,
    ) -> Result<Self> {
        target.validate()?;
        let want = target.component_count();
        if components.len() != want {
            return Err(Error::ShapeMismatch {
                expected: format!("{want} components for {}", target.label()),
                got: format!("{}", components.len()),
            });
        }
        for c in &components {
            if c.nvars() != source_dim {
                return Err(Error::Dimension(format!(
                    "component has {} variables, source dimension is {source_dim}",
                    c.nvars()
                )));
            }
        }
        let is_rational = components.iter().all(|c| c.is_rational());
        let is_polynomial = components.iter().all(|c| c.is_polynomial());
        let map = HoloMap {
            family: family.into(),
            source_dim,
            target,
            components,
            is_polynomial,
            is_rational,
            defect_exponent,
            notes: Vec::new(),
        };
        let at_zero = map.eval_components(&alloc::vec![Complex64::new(0.0, 0.0); source_dim])?;
        let norm = at_zero.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if norm > 1e-12 {
            return Err(Error::BasePoint { norm });
        }
        Ok(map)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Raw component values, before materializing the target shape.
    pub fn eval_components(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        if z.len() != self.source_dim {
            return Err(Error::Dimension(format!(
                "point has length {}, map source dimension is {}",
                z.len(),
                self.source_dim
            )));
        }
        self.components.iter().map(|c| c.eval(z)).collect()
    }

    /// Materializes component values as a target-shaped point: row-major for
    /// full matrices, strict upper triangle for the skew type, upper
    /// triangle for the symmetric type.
    pub fn assemble(&self, values: &[Complex64]) -> Point {
        match self.target {
            DomainSpec::TypeII(n) => {
                let mut m = CMatrix::zeros(n, n);
                let mut it = values.iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let v = *it.next().expect("component count checked on build");
                        m.set(i, j, v);
                        m.set(j, i, -v);
                    }
                }
                Point::matrix(m)
            }
            DomainSpec::TypeIII(n) => {
                let mut m = CMatrix::zeros(n, n);
                let mut it = values.iter();
                for i in 0..n {
                    for j in i..n {
                        let v = *it.next().expect("component count checked on build");
                        m.set(i, j, v);
                        m.set(j, i, v);
                    }
                }
                Point::matrix(m)
            }
            DomainSpec::TypeI(p, q) => Point::matrix(CMatrix::from_flat(p, q, values)),
            DomainSpec::Ball(_) | DomainSpec::TypeIV(_) => Point::vector(values.to_vec()),
        }
    }
}

impl BallMap for HoloMap {
    fn label(&self) -> String {
        self.family.clone()
    }

    fn source_dim(&self) -> usize {
        self.source_dim
    }

    fn target(&self) -> DomainSpec {
        self.target
    }

    fn defect_exponent(&self) -> u32 {
        self.defect_exponent
    }

    fn eval(&self, z: &[Complex64]) -> Result<Point> {
        let r2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
        if r2 >= 1.0 {
            return Err(Error::OutsideDomain);
        }
        let values = self.eval_components(z)?;
        Ok(self.assemble(&values))
    }
}

/// Appends `extra` zero components to a Lie-ball map.
pub fn pad_zero(f: &HoloMap, extra: usize) -> Result<HoloMap> {
    let m = match f.target {
        DomainSpec::TypeIV(m) => m,
        other => {
            return Err(Error::BadParameter(format!(
                "zero padding applies to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    if extra == 0 {
        return Err(Error::BadParameter("padding must add at least one component".into()));
    }
    let mut components = f.components.clone();
    components.extend((0..extra).map(|_| MapComponent::zero(f.source_dim)));
    let mut out = HoloMap::new(
        format!("pad({},{extra})", f.family),
        f.source_dim,
        DomainSpec::TypeIV(m + extra),
        components,
        f.defect_exponent,
    )?;
    out.notes = f.notes.clone();
    Ok(out)
}

/// Composes a Lie-ball map with a real matrix on the right, `z -> F(z) C`.
///
/// `C` must be orthogonal so the image stays in a Lie ball; the columns are
/// real linear combinations of the components, which keeps the normal form.
pub fn rotate_real(f: &HoloMap, c: &RMatrix) -> Result<HoloMap> {
    let m = match f.target {
        DomainSpec::TypeIV(m) => m,
        other => {
            return Err(Error::BadParameter(format!(
                "right rotation applies to Lie-ball targets, got {}",
                other.label()
            )))
        }
    };
    if c.rows() != m || c.cols() != m {
        return Err(Error::Dimension(format!(
            "rotation must be {m} x {m}, got {} x {}",
            c.rows(),
            c.cols()
        )));
    }
    let defect = c.orthogonality_defect();
    if defect > 1e-8 {
        return Err(Error::BadParameter(format!(
            "matrix is not orthogonal (defect {defect:e})"
        )));
    }
    let mut components = Vec::with_capacity(m);
    for j in 0..m {
        let parts: Vec<(Complex64, &MapComponent)> = (0..m)
            .map(|i| (Complex64::new(c[(i, j)], 0.0), &f.components[i]))
            .collect();
        components.push(MapComponent::linear_combination(&parts)?);
    }
    let mut out = HoloMap::new(
        format!("rot({})", f.family),
        f.source_dim,
        f.target,
        components,
        f.defect_exponent,
    )?;
    out.notes = f.notes.clone();
    Ok(out)
}

/// Maximal total degree over the numerators and the common denominator,
/// after clearing all components to the least common denominator and
/// dropping coefficients below 1e-9 relative.
pub fn degree(f: &HoloMap) -> Result<usize> {
    if !f.is_rational {
        return Err(Error::NotRational);
    }
    // distinct denominators up to scalar multiples
    let mut reps: Vec<PolyTable> = Vec::new();
    let mut rep_of: Vec<Option<(usize, Complex64)>> = Vec::new();
    for comp in &f.components {
        let den = &comp.rational.den;
        if den.as_constant().is_some() {
            rep_of.push(None);
            continue;
        }
        let mut found = None;
        for (idx, rep) in reps.iter().enumerate() {
            if let Some(k) = den.proportionality(rep, 1e-12) {
                found = Some((idx, k));
                break;
            }
        }
        match found {
            Some(pair) => rep_of.push(Some(pair)),
            None => {
                reps.push(den.clone());
                rep_of.push(Some((reps.len() - 1, Complex64::new(1.0, 0.0))));
            }
        }
    }
    let nvars = f.source_dim;
    let common_den = reps
        .iter()
        .fold(PolyTable::one(nvars), |acc, r| acc.mul(r))
        .drop_small_relative(1e-9);
    let mut max_deg = common_den.total_degree();
    for (comp, rep) in f.components.iter().zip(&rep_of) {
        let mut cleared = comp.rational.num.clone();
        for (idx, r) in reps.iter().enumerate() {
            let skip = matches!(rep, Some((j, _)) if *j == idx);
            if !skip {
                cleared = cleared.mul(r);
            }
        }
        if let Some((_, k)) = rep {
            cleared = cleared.scale(Complex64::new(1.0, 0.0) / k);
        }
        max_deg = max_deg.max(cleared.drop_small_relative(1e-9).total_degree());
    }
    Ok(max_deg)
}

/// Black-box evaluator for `T(F(phi(z)))`: the symbolic normal form is
/// dropped, only pointwise evaluation remains.
#[derive(Debug, Clone)]
pub struct ComposedMap {
    inner: HoloMap,
    phi: AutBall,
    aut: Option<AutIV>,
}

/// Composes a map with a source ball automorphism and, for Lie-ball targets,
/// a target automorphism.
pub fn compose(f: &HoloMap, phi: &AutBall, aut: Option<&AutIV>) -> Result<ComposedMap> {
    if phi.dim() != f.source_dim {
        return Err(Error::Dimension(format!(
            "automorphism acts on dimension {}, map source is {}",
            phi.dim(),
            f.source_dim
        )));
    }
    if let Some(t) = aut {
        match f.target {
            DomainSpec::TypeIV(m) if t.m() == m => {}
            DomainSpec::TypeIV(m) => {
                return Err(Error::Dimension(format!(
                    "target automorphism acts on dimension {}, map target is {m}",
                    t.m()
                )))
            }
            other => {
                return Err(Error::BadParameter(format!(
                    "target automorphisms are supported for Lie-ball targets, got {}",
                    other.label()
                )))
            }
        }
    }
    Ok(ComposedMap {
        inner: f.clone(),
        phi: phi.clone(),
        aut: aut.cloned(),
    })
}

impl BallMap for ComposedMap {
    fn label(&self) -> String {
        format!("composed({})", self.inner.family)
    }

    fn source_dim(&self) -> usize {
        self.inner.source_dim
    }

    fn target(&self) -> DomainSpec {
        self.inner.target
    }

    fn defect_exponent(&self) -> u32 {
        self.inner.defect_exponent
    }

    fn eval(&self, z: &[Complex64]) -> Result<Point> {
        let moved = apply_aut_ball(&self.phi, z)?;
        let image = self.inner.eval(&moved)?;
        match &self.aut {
            Some(t) => apply_aut_iv(t, &image),
            None => Ok(image),
        }
    }
}
