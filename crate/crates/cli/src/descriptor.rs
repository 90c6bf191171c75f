//! JSON descriptors for map families and their dispatch onto the builders.

use cartan_core::domains::DomainSpec;
use cartan_core::mapzoo::{
    build_hg_type1, build_hg_type2, build_hg_type3, build_hg_type4, build_i, build_i_family4,
    build_i_type4, build_mnk, build_polynomial_isometry, build_r, build_r_type1, build_r_type2,
    build_r_type3, build_r_type4, build_wg, homogeneous, identity_map,
    linear_embedding_2n, monomial_map, pad_zero, whitney, HoloMap, PolyIsometryKind,
};
use serde::{Deserialize, Serialize};

/// One family instance as it appears in configs and reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Informative; validated against the built map when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetSpec>,
    #[serde(default)]
    pub params: Params,
    /// Coefficient tables for the `monomial` generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentTerm>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetSpec {
    pub kind: String,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub thetas: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra: Option<usize>,
    /// Base family for `pad`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<FamilyDescriptor>>,
    /// Ball-to-ball generator for the block constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Box<FamilyDescriptor>>,
    /// Declared-exponent override, for misconfiguration probes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect_exponent: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentTerm {
    pub exponents: Vec<u16>,
    pub coeff: f64,
}

pub fn target_spec_of(spec: &DomainSpec) -> TargetSpec {
    let (kind, dims) = match *spec {
        DomainSpec::Ball(n) => ("ball", vec![n]),
        DomainSpec::TypeI(p, q) => ("type1", vec![p, q]),
        DomainSpec::TypeII(n) => ("type2", vec![n]),
        DomainSpec::TypeIII(n) => ("type3", vec![n]),
        DomainSpec::TypeIV(m) => ("type4", vec![m]),
    };
    TargetSpec {
        kind: kind.to_string(),
        dims,
    }
}

impl FamilyDescriptor {
    /// Builds the map this descriptor names. Every failure is a
    /// configuration error, reported as a message.
    pub fn build(&self) -> Result<HoloMap, String> {
        let fam = self.family.as_str();
        let n = || {
            self.n
                .ok_or_else(|| format!("family {fam} requires the field n"))
        };
        let k = || {
            self.params
                .k
                .ok_or_else(|| format!("family {fam} requires params.k"))
        };
        let m = || {
            self.params
                .m
                .ok_or_else(|| format!("family {fam} requires params.m"))
        };
        let pq = || -> Result<(usize, usize), String> {
            match (self.params.p, self.params.q) {
                (Some(p), Some(q)) => Ok((p, q)),
                _ => Err(format!("family {fam} requires params.p and params.q")),
            }
        };
        let gen = || -> Result<HoloMap, String> {
            self.params
                .generator
                .as_deref()
                .ok_or_else(|| format!("family {fam} requires params.generator"))?
                .build()
        };
        let err = |e: cartan_core::Error| format!("building {fam}: {e}");
        let mut map = match fam {
            "R" => build_r(n()?, k()?, &self.params.thetas).map_err(err)?,
            "I" => build_i(n()?, k()?, &self.params.thetas).map_err(err)?,
            "I_family4" => {
                let theta = self
                    .params
                    .theta
                    .ok_or_else(|| format!("family {fam} requires params.theta"))?;
                build_i_family4(n()?, k()?, theta, self.params.beta, self.params.alpha)
                    .map_err(err)?
            }
            "R_I_canonical" => {
                let (p, q) = pq()?;
                build_r_type1(p, q).map_err(err)?
            }
            "R_II_canonical" => build_r_type2(m()?).map_err(err)?,
            "R_III_canonical" => build_r_type3(m()?).map_err(err)?,
            "R_IV_canonical" => build_r_type4(m()?).map_err(err)?,
            "I_IV_canonical" => build_i_type4(m()?).map_err(err)?,
            "HG_I" => {
                let (p, q) = pq()?;
                build_hg_type1(p, q, &gen()?).map_err(err)?
            }
            "HG_II" => build_hg_type2(m()?, &gen()?).map_err(err)?,
            "HG_III" => build_hg_type3(m()?, &gen()?).map_err(err)?,
            "HG_IV" => build_hg_type4(m()?, &gen()?).map_err(err)?,
            "WG" => build_wg(m()?, &gen()?).map_err(err)?,
            "MNk" => build_mnk(&gen()?, k()?, self.params.theta).map_err(err)?,
            "poly_isometry_I" => {
                let (p, q) = pq()?;
                build_polynomial_isometry(PolyIsometryKind::TypeI, (p, q)).map_err(err)?
            }
            "poly_isometry_II" => {
                build_polynomial_isometry(PolyIsometryKind::TypeII, (m()?, 0)).map_err(err)?
            }
            "poly_isometry_III" => {
                build_polynomial_isometry(PolyIsometryKind::TypeIII, (m()?, 0)).map_err(err)?
            }
            "poly_isometry_IV" => {
                build_polynomial_isometry(PolyIsometryKind::TypeIV, (m()?, 0)).map_err(err)?
            }
            "linear_2n" => linear_embedding_2n(n()?).map_err(err)?,
            "identity" => identity_map(n()?),
            "whitney" => whitney(n()?).map_err(err)?,
            "homogeneous" => {
                let d = self
                    .params
                    .degree
                    .ok_or_else(|| format!("family {fam} requires params.degree"))?;
                homogeneous(n()?, d).map_err(err)?
            }
            "monomial" => {
                let terms: Vec<(Vec<u16>, f64)> = self
                    .components
                    .as_ref()
                    .ok_or_else(|| format!("family {fam} requires a components table"))?
                    .iter()
                    .map(|t| (t.exponents.clone(), t.coeff))
                    .collect();
                monomial_map(n()?, &terms).map_err(err)?
            }
            "pad" => {
                let base = self
                    .params
                    .base
                    .as_deref()
                    .ok_or_else(|| format!("family {fam} requires params.base"))?
                    .build()?;
                let extra = self
                    .params
                    .extra
                    .ok_or_else(|| format!("family {fam} requires params.extra"))?;
                pad_zero(&base, extra).map_err(err)?
            }
            "gap" => {
                return Err("the gap utility is not a map family; use the gap command".into())
            }
            other => return Err(format!("unknown family: {other}")),
        };
        if let Some(e) = self.params.defect_exponent {
            map.defect_exponent = e;
        }
        if let Some(t) = &self.target {
            let actual = target_spec_of(&map.target);
            if *t != actual {
                return Err(format!(
                    "declared target {}({:?}) does not match built target {}({:?})",
                    t.kind, t.dims, actual.kind, actual.dims
                ));
            }
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(json: &str) -> FamilyDescriptor {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn round_trips_and_builds() {
        let d = desc(r#"{"family":"I","n":2,"params":{"k":2,"thetas":[0.5]}}"#);
        let map = d.build().unwrap();
        assert_eq!(map.source_dim, 2);
        assert_eq!(map.target, DomainSpec::TypeIV(4));

        let d = desc(
            r#"{"family":"WG","params":{"m":3,"generator":{"family":"whitney","n":2}}}"#,
        );
        let map = d.build().unwrap();
        assert_eq!(map.target, DomainSpec::TypeIV(4));

        let d = desc(
            r#"{"family":"pad","params":{"extra":2,"base":{"family":"R_IV_canonical","params":{"m":2}}}}"#,
        );
        let map = d.build().unwrap();
        assert_eq!(map.target, DomainSpec::TypeIV(5));
    }

    #[test]
    fn target_validation() {
        let d = desc(
            r#"{"family":"R_IV_canonical","target":{"kind":"type4","dims":[4]},"params":{"m":3}}"#,
        );
        assert!(d.build().is_ok());
        let d = desc(
            r#"{"family":"R_IV_canonical","target":{"kind":"type4","dims":[5]},"params":{"m":3}}"#,
        );
        assert!(d.build().is_err());
    }

    #[test]
    fn exponent_override_applies() {
        let d = desc(
            r#"{"family":"R_IV_canonical","params":{"m":3,"defect_exponent":2}}"#,
        );
        assert_eq!(d.build().unwrap().defect_exponent, 2);
    }

    #[test]
    fn unknown_families_and_missing_params_fail() {
        assert!(desc(r#"{"family":"nope"}"#).build().is_err());
        assert!(desc(r#"{"family":"R","n":2}"#).build().is_err());
        assert!(desc(r#"{"family":"monomial","n":2}"#).build().is_err());
    }

    #[test]
    fn monomial_components_build() {
        let d = desc(
            r#"{"family":"monomial","n":2,"components":[
                {"exponents":[1,0],"coeff":1.0},
                {"exponents":[1,1],"coeff":1.0},
                {"exponents":[0,2],"coeff":1.0}]}"#,
        );
        let map = d.build().unwrap();
        assert_eq!(map.components.len(), 3);
    }
}
