mod common;

use common::{coordinate_basis, stock};
use jjalg::algebra::{
    adjoint_action, current_algebra, dual_action, is_left_module, is_morphism,
    restrict_to_subalgebra, verify_jj, CommAssocAlgebra,
};
use jjalg::algebra::change_basis;
use jjalg::iso::is_isomorphic;
use jjalg::random::random_invertible;
use jjalg::{Budget, Field, PrimeField, Rationals};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn actions_are_modules<F: Field>(k: &F) {
    for (name, a) in stock(k, 6) {
        assert!(verify_jj(&a).passed(), "{name} over {:?}", k.kind());
        let n = a.dim();
        assert!(is_left_module(&a, n, &adjoint_action(&a)).unwrap().passed(), "adjoint {name}");
        assert!(is_left_module(&a, n, &dual_action(&a)).unwrap().passed(), "dual {name}");
    }
}

#[test]
fn canonical_actions_are_left_modules() {
    for p in [2, 5, 7] {
        actions_are_modules(&PrimeField::new(p).unwrap());
    }
    actions_are_modules(&Rationals);
}

#[test]
fn current_algebra_contains_a_copy_of_a() {
    let b = Budget::default();
    for p in [3, 5] {
        let k = PrimeField::new(p).unwrap();
        for (name, a) in stock(&k, 3) {
            for units in [
                CommAssocAlgebra::ground(k),
                CommAssocAlgebra::truncated_polynomials(k, 2),
                CommAssocAlgebra::truncated_polynomials(k, 3),
            ] {
                let m = units.dim();
                let c = current_algebra(&a, &units).unwrap();
                assert!(verify_jj(&c).passed());
                let idx: Vec<usize> = (0..a.dim()).map(|i| i * m).collect();
                let sub = restrict_to_subalgebra(&c, &coordinate_basis(&k, c.dim(), &idx)).unwrap();
                let out = is_isomorphic(&a, &sub, 3, &b).unwrap();
                assert!(out.is_isomorphic(), "{name} ⊗ dim {m}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(p).unwrap();
        let algebras = stock(&k, 3);
        let (_, a) = &algebras[(seed % algebras.len() as u64) as usize];
        let b = Budget::default();
        let refl = is_isomorphic(a, a, 3, &b).unwrap();
        let w = refl.witness().expect("reflexive");
        prop_assert!(is_morphism(a, a, w).unwrap().passed());
        let g = random_invertible(&k, a.dim(), &mut rng);
        let moved = change_basis(a, &g).unwrap();
        prop_assert!(is_morphism(&moved, a, &g).unwrap().passed());
        let there = is_isomorphic(a, &moved, 3, &b).unwrap();
        let back = is_isomorphic(&moved, a, 3, &b).unwrap();
        let w = there.witness().expect("forward witness");
        let w_inv = w.inverse(&k).expect("invertible");
        prop_assert!(is_morphism(a, &moved, w).unwrap().passed());
        prop_assert!(is_morphism(&moved, a, &w_inv).unwrap().passed());
        prop_assert!(back.is_isomorphic());
    }
}
