//! Property tests for the matrix kernel: the minor expansion against the
//! direct determinant, Pfaffian squares, factorization path agreement, and
//! orthonormal extension.

use cartan_core::linalg::{
    cayley_det_expansion, det, det_cofactor, det_lu, extend_orthonormal, pfaffian, CMatrix,
};
use cartan_core::Complex64;
use proptest::prelude::*;

fn complex_entries(len: usize, radius: f64) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-radius..radius, -radius..radius), len)
        .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_expansion_equals_gram_determinant(
        p in 1usize..=5,
        q_off in 0usize..=4,
        seed in complex_entries(25, 0.45),
    ) {
        let q = (p + q_off).min(5);
        let mut z = CMatrix::zeros(p, q);
        for i in 0..p {
            for j in 0..q {
                z.set(i, j, seed[i * 5 + j]);
            }
        }
        let expansion = cayley_det_expansion(&z).unwrap();
        let gram = CMatrix::identity(p).sub(&z.mul(&z.hermitian()));
        let direct = det(&gram).unwrap();
        prop_assert!(direct.im.abs() < 1e-12);
        prop_assert!((expansion - direct.re).abs() <= 1e-10,
            "p={p} q={q}: {expansion} vs {}", direct.re);
    }

    #[test]
    fn pfaffian_squares_to_determinant(
        half in 1usize..=4,
        seed in complex_entries(28, 0.8),
    ) {
        let n = 2 * half;
        let mut a = CMatrix::zeros(n, n);
        let mut it = seed.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = *it.next().unwrap();
                a.set(i, j, v);
                a.set(j, i, -v);
            }
        }
        let pf = pfaffian(&a).unwrap();
        let d = det(&a).unwrap();
        prop_assert!((pf * pf - d).norm() <= 1e-9 * d.norm().max(1.0),
            "order {n}: pf^2 = {:?}, det = {d:?}", pf * pf);
    }

    #[test]
    fn odd_order_pfaffian_is_exactly_zero(
        half in 1usize..=3,
        seed in complex_entries(21, 0.8),
    ) {
        let n = 2 * half + 1;
        let mut a = CMatrix::zeros(n, n);
        let mut it = seed.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = *it.next().unwrap();
                a.set(i, j, v);
                a.set(j, i, -v);
            }
        }
        prop_assert_eq!(pfaffian(&a).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn factorization_paths_agree(
        n in 1usize..=6,
        seed in complex_entries(36, 0.9),
    ) {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, seed[i * 6 + j]);
            }
        }
        let a = det_cofactor(&m);
        let b = det_lu(&m);
        prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn orthonormal_extension_is_orthogonal(
        raw in prop::collection::vec(-1.0f64..1.0, 2..=8),
    ) {
        let norm: f64 = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        let v: Vec<f64> = raw.iter().map(|x| x / norm).collect();
        let c = extend_orthonormal(&v).unwrap();
        prop_assert!(c.orthogonality_defect() <= 1e-12);
        for (i, vi) in v.iter().enumerate() {
            prop_assert!((c[(i, v.len() - 1)] - vi).abs() < 1e-12);
        }
    }
}
