mod common;

use std::collections::BTreeSet;

use common::stock;
use jjalg::algebra::{abelian, heisenberg3, square_zero_line, verify_jj, JJAlgebra};
use jjalg::classify::{
    apply_flag_witness, check_flag_datum, classify_h2_codim1, enumerate_flag_data,
    enumerate_flag_data_naive, flag_datum_to_extending, flag_extension, FlagDatum, FlagWitness,
};
use jjalg::extend::{are_equivalent, canonical_datum_with_complement};
use jjalg::random::{random_flag_datum, random_vector, sample};
use jjalg::{Budget, Field, Matrix, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn keys(k: &PrimeField, data: &[FlagDatum<PrimeField>]) -> BTreeSet<Vec<u64>> {
    data.iter().map(|fd| fd.key(k)).collect()
}

fn biconditional_over_full_space(a: &JJAlgebra<PrimeField>) -> usize {
    let k = *a.field();
    let n = a.dim();
    let len = n * n + 2 * n + 1;
    let q = k.size().unwrap();
    let mut valid = 0;
    for idx in 0..q.pow(len as u32) {
        let key: Vec<u64> = (0..len).map(|i| (idx / q.pow(i as u32)) % q).collect();
        let fd = FlagDatum::from_key(&k, n, &key);
        let by_conditions = check_flag_datum(a, &fd).unwrap().passed();
        let by_axioms = verify_jj(&flag_extension(a, &fd).unwrap()).passed();
        assert_eq!(by_conditions, by_axioms, "{fd:?}");
        valid += by_conditions as usize;
    }
    valid
}

#[test]
fn flag_conditions_match_axioms_on_small_spaces() {
    for p in [2, 3, 5] {
        let k = PrimeField::new(p).unwrap();
        assert!(biconditional_over_full_space(&abelian(k, 1)) > 0);
    }
    let k = PrimeField::new(5).unwrap();
    assert!(biconditional_over_full_space(&abelian(k, 2)) > 0);
    assert!(biconditional_over_full_space(&square_zero_line(k)) > 0);
}

#[test]
fn staged_enumeration_equals_naive() {
    let b = Budget::default();
    for p in [2, 3, 5] {
        let k = PrimeField::new(p).unwrap();
        for a in [abelian(k, 1), abelian(k, 2), square_zero_line(k)] {
            let staged = enumerate_flag_data(&a, &b).unwrap();
            let naive = enumerate_flag_data_naive(&a, &b).unwrap();
            assert_eq!(staged.len(), keys(&k, &staged).len(), "duplicates");
            assert_eq!(keys(&k, &staged), keys(&k, &naive), "F{p}, dim {}", a.dim());
        }
    }
}

#[test]
fn every_classification_is_a_partition() {
    let b = Budget::default();
    for p in [2, 3, 5] {
        let k = PrimeField::new(p).unwrap();
        let mut algebras = stock(&k, 2);
        algebras.push(("h3", heisenberg3(k)));
        for (name, a) in algebras {
            let h2 = classify_h2_codim1(&a, &b).unwrap();
            assert!(h2.is_partition(), "{name} over F{p}");
            let n_reps = h2.class_count();
            assert_eq!(h2.certificates.len(), n_reps * (n_reps - 1), "{name}");
            for m in &h2.merges {
                let image = apply_flag_witness(&a, &h2.data[m.source], &m.witness).unwrap();
                assert_eq!(image, h2.data[m.datum]);
            }
            if p == 2 {
                assert!(h2.merges.iter().all(|m| m.witness.u == 1));
            }
        }
    }
}

#[test]
fn extensions_of_stock_algebras_match_enumerated_classes() {
    // An algebra containing A with codimension one, presented in a random
    // basis adapted to A, is equivalent to the extension by some orbit
    // representative.
    let b = Budget::default();
    let k = PrimeField::new(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for a in [abelian(k, 1), abelian(k, 2), square_zero_line(k), heisenberg3(k)] {
        let n = a.dim();
        let h2 = classify_h2_codim1(&a, &b).unwrap();
        let rep_data: Vec<_> = h2
            .representatives()
            .into_iter()
            .map(|fd| flag_datum_to_extending(&a, fd).unwrap())
            .collect();
        for fd in sample(&h2.data, 12, &mut rng) {
            let e = flag_extension(&a, &fd).unwrap();
            let a_basis = Matrix::from_fn(n + 1, n, |r, c| if r == c { 1 } else { 0 });
            let mut w = random_vector(&k, n + 1, 1.0, &mut rng);
            w[n] = rng.gen_range(1..5);
            let complement = Matrix::from_columns(&k, n + 1, &[w]).unwrap();
            let cd = canonical_datum_with_complement(&e, &a_basis, &complement).unwrap();
            let found = rep_data
                .iter()
                .filter_map(|rep| are_equivalent(&cd.datum, rep, &b).unwrap())
                .count();
            assert_eq!(found, 1, "exactly one representative class");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flag_conditions_match_axioms_on_samples(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(5).unwrap();
        let algebras = stock(&k, 3);
        let a = algebras[rng.gen_range(0..algebras.len())].1.clone();
        let fd = random_flag_datum(&k, a.dim(), [0.1, 0.3, 1.0][rng.gen_range(0..3)], &mut rng);
        let e = flag_extension(&a, &fd).unwrap();
        prop_assert_eq!(check_flag_datum(&a, &fd).unwrap().passed(), verify_jj(&e).passed());
        // [e_i, x] = D(e_i) + λ(e_i)x, [x, x] = a₀ + α₀x
        let n = a.dim();
        for i in 0..n {
            let mut expect = fd.d.column(i);
            expect.push(fd.lambda[i]);
            prop_assert_eq!(e.basis_bracket(i, n), &expect[..]);
        }
        let mut xx = fd.a0.clone();
        xx.push(fd.alpha0);
        prop_assert_eq!(e.basis_bracket(n, n), &xx[..]);
    }

    #[test]
    fn flag_witnesses_form_a_group_action(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(5).unwrap();
        let algebras = stock(&k, 3);
        let a = algebras[rng.gen_range(0..algebras.len())].1.clone();
        let n = a.dim();
        let fd = random_flag_datum(&k, n, 0.6, &mut rng);
        let w = |rng: &mut ChaCha8Rng| FlagWitness { r: random_vector(&k, n, 0.8, rng), u: rng.gen_range(1..5) };
        let (w1, w2) = (w(&mut rng), w(&mut rng));
        let y = apply_flag_witness(&a, &fd, &w2).unwrap();
        let z = apply_flag_witness(&a, &y, &w1).unwrap();
        prop_assert_eq!(apply_flag_witness(&a, &fd, &w1.then(&k, &w2)).unwrap(), z);
        prop_assert_eq!(apply_flag_witness(&a, &y, &w2.inverse(&k).unwrap()).unwrap(), fd.clone());
        prop_assert_eq!(apply_flag_witness(&a, &fd, &FlagWitness::identity(&k, n)).unwrap(), fd);
    }
}
