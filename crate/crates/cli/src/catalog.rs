//! The buildable-family catalog behind `list-families`.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub group: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub params: &'static str,
}

/// Every buildable family with its parameter ranges.
pub fn catalog() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            name: "R",
            group: "lie-ball-theta-family",
            source: "B^n",
            target: "D_IV(n+k)",
            params: "n >= 2; k in [2, n+2]; thetas in (0, pi/4], count k-1 (k <= n), n-1 (k = n+1), n (k = n+2)",
        },
        FamilyInfo {
            name: "I",
            group: "lie-ball-theta-family",
            source: "B^n",
            target: "D_IV(n+k)",
            params: "n >= 2; k in [2, n+2]; thetas in (0, pi/4], count k-1 (k <= n+1), n+1 (k = n+2, last angle in (0, pi/4)); not all pi/4 when k >= n+1",
        },
        FamilyInfo {
            name: "I_family4",
            group: "lie-ball-theta-family",
            source: "B^n",
            target: "D_IV(n+k)",
            params: "n >= 2; k in [2, n+2]; 0 < beta <= theta <= pi/4; alpha in (0, pi/4) when k = n+2",
        },
        FamilyInfo {
            name: "R_I_canonical",
            group: "canonical-isometry",
            source: "B^(p+q-1)",
            target: "D_I(p,q)",
            params: "q >= p >= 2",
        },
        FamilyInfo {
            name: "R_II_canonical",
            group: "canonical-isometry",
            source: "B^(2m-3)",
            target: "D_II(m)",
            params: "m >= 3; defect identity holds squared",
        },
        FamilyInfo {
            name: "R_III_canonical",
            group: "canonical-isometry",
            source: "B^m",
            target: "D_III(m)",
            params: "m >= 2",
        },
        FamilyInfo {
            name: "R_IV_canonical",
            group: "canonical-isometry",
            source: "B^m (source n = m)",
            target: "D_IV(m+1)",
            params: "m >= 2",
        },
        FamilyInfo {
            name: "I_IV_canonical",
            group: "canonical-isometry",
            source: "B^m (source n = m)",
            target: "D_IV(m+1)",
            params: "m >= 2",
        },
        FamilyInfo {
            name: "HG_I",
            group: "block-construction",
            source: "B^n (through generator G)",
            target: "D_I(p,q)",
            params: "q >= p >= 2; generator with p+q-1 components, G(0) = 0",
        },
        FamilyInfo {
            name: "HG_II",
            group: "block-construction",
            source: "B^n (through generator G)",
            target: "D_II(m)",
            params: "m >= 3; generator with 2m-3 components, G(0) = 0",
        },
        FamilyInfo {
            name: "HG_III",
            group: "block-construction",
            source: "B^n (through generator G)",
            target: "D_III(m)",
            params: "m >= max(n, 2); generator with m components, G(0) = 0",
        },
        FamilyInfo {
            name: "HG_IV",
            group: "block-construction",
            source: "B^n (through generator G)",
            target: "D_IV(m+1)",
            params: "m >= n; generator with m components, G(0) = 0",
        },
        FamilyInfo {
            name: "WG",
            group: "block-construction",
            source: "B^n (through generator G)",
            target: "D_IV(m+1)",
            params: "m >= n; generator with m components, G(0) = 0",
        },
        FamilyInfo {
            name: "MNk",
            group: "minimum-proper-map",
            source: "B^n (through monomial generator F)",
            target: "D_IV(N+k)",
            params: "k in [1, N+1]; theta in (0, pi/4) once k >= 2; generator components are real monomials",
        },
        FamilyInfo {
            name: "poly_isometry_I",
            group: "polynomial-isometry",
            source: "B^(p+q-2)",
            target: "D_I(p,q)",
            params: "q >= p >= 2",
        },
        FamilyInfo {
            name: "poly_isometry_II",
            group: "polynomial-isometry",
            source: "B^(2m-4)",
            target: "D_II(m)",
            params: "m >= 4",
        },
        FamilyInfo {
            name: "poly_isometry_III",
            group: "polynomial-isometry",
            source: "B^(m-1)",
            target: "D_III(m)",
            params: "m >= 2",
        },
        FamilyInfo {
            name: "poly_isometry_IV",
            group: "polynomial-isometry",
            source: "B^(m-1)",
            target: "D_IV(m+1)",
            params: "m >= 2",
        },
        FamilyInfo {
            name: "linear_2n",
            group: "linear-embedding",
            source: "B^n",
            target: "D_IV(2n)",
            params: "n >= 1; degree 1; F F^t = 0 identically",
        },
        FamilyInfo {
            name: "identity",
            group: "ball-generator",
            source: "B^n",
            target: "B^n",
            params: "n >= 1",
        },
        FamilyInfo {
            name: "whitney",
            group: "ball-generator",
            source: "B^n",
            target: "B^(2n-1)",
            params: "n >= 1",
        },
        FamilyInfo {
            name: "homogeneous",
            group: "ball-generator",
            source: "B^n",
            target: "B^(C(n+d-1,d))",
            params: "n >= 1; degree d in [1, 12]; multinomial coefficients",
        },
        FamilyInfo {
            name: "monomial",
            group: "ball-generator",
            source: "B^n",
            target: "B^(#components)",
            params: "components table with real coefficients and nonconstant exponents",
        },
        FamilyInfo {
            name: "pad",
            group: "derived",
            source: "source of base",
            target: "D_IV(m+extra)",
            params: "base family into a Lie ball; extra >= 1",
        },
        FamilyInfo {
            name: "gap",
            group: "utility",
            source: "-",
            target: "-",
            params: "n > 2; prints K(n) and the gap intervals",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_covers_the_required_entries() {
        let cat = catalog();
        let find = |name: &str| cat.iter().find(|f| f.name == name).unwrap();
        let riv = find("R_IV_canonical");
        assert!(riv.source.contains("n = m") && riv.target.contains("m+1"));
        let fam4 = find("I_family4");
        assert!(fam4.params.contains("beta <= theta <= pi/4"));
        assert_eq!(find("gap").group, "utility");
    }
}
