mod common;

use common::{is_darboux, is_orthogonal_of, preserves_form, rank_of};
use proptest::prelude::*;
use symplin::linalg::{int, Mat};
use symplin::symplectic::is_symplectic_map;
use symplin::testkit::{random_form, random_subspace, random_symplectic_map, Rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orthogonality_laws(seed: u64, half in 1usize..4) {
        let mut rng = Rng::new(seed);
        let v = random_form(half, &mut rng);
        let n = v.dim();
        let e = random_subspace(n, rng.below(n + 1), &mut rng);
        let f = random_subspace(n, rng.below(n + 1), &mut rng);
        let eo = v.orthogonal(&e).unwrap();
        prop_assert!(is_orthogonal_of(v.form(), &e, &eo));
        prop_assert_eq!(e.dim() + eo.dim(), n);
        prop_assert_eq!(v.orthogonal(&eo).unwrap(), e.clone());
        let fo = v.orthogonal(&f).unwrap();
        prop_assert_eq!(v.orthogonal(&e.intersect(&f).unwrap()).unwrap(), eo.sum(&fo).unwrap());
    }

    #[test]
    fn darboux_bases_are_exact(seed: u64, half in 0usize..5) {
        let mut rng = Rng::new(seed);
        let v = random_form(half, &mut rng);
        let b = v.darboux_basis();
        prop_assert!(is_darboux(v.form(), b.vectors()));
        prop_assert_eq!(rank_of(b.vectors(), v.dim()), v.dim());
    }

    #[test]
    fn witt_artin_predicates(seed: u64, half in 1usize..4) {
        let mut rng = Rng::new(seed);
        let v = random_form(half, &mut rng);
        let w = random_subspace(v.dim(), rng.below(v.dim() + 1), &mut rng);
        let wa = v.witt_artin(&w).unwrap();
        prop_assert!(wa.verify(&v));
        prop_assert_eq!(wa.k, w.intersect(&v.orthogonal(&w).unwrap()).unwrap());
    }

    #[test]
    fn reduced_form_is_well_defined_and_nondegenerate(seed: u64, half in 1usize..4) {
        let mut rng = Rng::new(seed);
        let v = random_form(half, &mut rng);
        let w = random_subspace(v.dim(), rng.below(v.dim() + 1), &mut rng);
        let red = v.reduce(&w).unwrap();
        let form = red.reduced.form();
        prop_assert_eq!(form.rank(), form.rows());
        let ws = w.basis_vectors();
        let rad = red.radical.basis_vectors();
        for x in &ws {
            let px = red.project(x).unwrap();
            for r in &rad {
                let shifted: Vec<_> = x.iter().zip(r).map(|(a, b)| a + b).collect();
                prop_assert_eq!(red.project(&shifted).unwrap(), px.clone());
            }
            for y in &ws {
                let py = red.project(y).unwrap();
                prop_assert_eq!(red.reduced.omega(&px, &py), v.omega(x, y));
            }
        }
    }

    #[test]
    fn block_sums_of_symplectic_maps(seed: u64, h1 in 1usize..3, h2 in 1usize..3) {
        let mut rng = Rng::new(seed);
        let (v1, v2) = (random_form(h1, &mut rng), random_form(h2, &mut rng));
        let s1 = random_symplectic_map(&v1, &mut rng, 4);
        let s2 = random_symplectic_map(&v2, &mut rng, 4);
        let sum = s1.direct_sum(&s2);
        prop_assert!(preserves_form(&sum));
        let v = v1.dsum(&v2);
        prop_assert!(is_symplectic_map(&v, &v, sum.matrix()));
        let mut bad = s1.matrix().clone();
        if bad.rows() > 0 {
            bad = bad.scale(&int(2));
            let broken = Mat::block_diag(&[&bad, s2.matrix()]);
            prop_assert!(!is_symplectic_map(&v, &v, &broken));
        }
        let (d1, d2) = (v1.dim(), v2.dim());
        let m = sum.matrix();
        prop_assert!(is_symplectic_map(&v1, &v1, &m.submatrix(0, 0, d1, d1)));
        prop_assert!(is_symplectic_map(&v2, &v2, &m.submatrix(d1, d1, d2, d2)));
    }
}
