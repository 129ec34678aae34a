mod common;

use common::{random_extension, stock};
use jjalg::algebra::{abelian, is_ideal, is_subalgebra, verify_jj, JJAlgebra};
use jjalg::extend::{check_extending, unified_product, ExtendingDatum};
use jjalg::linalg::BilinearMap;
use jjalg::products::{
    bicrossed_product, check_crossed_system, check_matched_pair, check_skew_crossed,
    check_supersolvable_datum, crossed_product, skew_crossed_product, supersolvable_system,
    CrossedSystem, MatchedPair, SkewCrossedSystem,
};
use jjalg::random::{random_bilinear, random_matrix, random_symmetric, random_vector};
use jjalg::{Field, Matrix, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A datum over `A` with vdim at most 2: either raw and sparse, or taken
/// from a genuine extension.
fn base_datum(k: &PrimeField, rng: &mut ChaCha8Rng) -> ExtendingDatum<PrimeField> {
    if rng.gen_bool(0.5) {
        random_extension(k, 3, 2, rng).2.datum
    } else {
        let algebras = stock(k, 3);
        let a = algebras[rng.gen_range(0..algebras.len())].1.clone();
        let vdim = rng.gen_range(1..=2);
        jjalg::random::random_datum(&a, vdim, 0.15, true, rng)
    }
}

fn v_algebra(d: &ExtendingDatum<PrimeField>) -> JJAlgebra<PrimeField> {
    JJAlgebra::new(*d.field(), d.brace.clone()).unwrap()
}

fn block<F: Field>(k: &F, n: usize, start: usize, len: usize) -> Matrix<F> {
    Matrix::from_fn(n, len, |r, c| if r == start + c { k.one() } else { k.zero() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matched_pair_conditions_agree_with_extending(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(5).unwrap();
        let d = base_datum(&k, &mut rng);
        let mp = MatchedPair::new(d.a.clone(), v_algebra(&d), d.left_act.clone(), d.right_act.clone()).unwrap();
        let ok = check_matched_pair(&mp).unwrap().passed();
        prop_assert_eq!(ok, check_extending(&mp.datum().unwrap()).passed());
        if ok {
            let e = bicrossed_product(&mp).unwrap();
            prop_assert_eq!(&e, &unified_product(&mp.datum().unwrap()));
            prop_assert!(verify_jj(&e).passed());
            let (n, m) = (mp.a.dim(), mp.v.dim());
            prop_assert!(is_subalgebra(&e, &block(&k, n + m, 0, n)).unwrap().passed());
            prop_assert!(is_subalgebra(&e, &block(&k, n + m, n, m)).unwrap().passed());
        }
    }

    #[test]
    fn crossed_conditions_agree_with_extending(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(5).unwrap();
        let d = base_datum(&k, &mut rng);
        let cs = CrossedSystem {
            a: d.a.clone(),
            v: v_algebra(&d),
            right_act: d.right_act.clone(),
            cocycle: d.cocycle.clone(),
        };
        let ok = check_crossed_system(&cs).unwrap().passed();
        prop_assert_eq!(ok, check_extending(&cs.datum().unwrap()).passed());
        if ok {
            let e = crossed_product(&cs).unwrap();
            prop_assert_eq!(&e, &unified_product(&cs.datum().unwrap()));
            let n = cs.a.dim();
            prop_assert!(is_ideal(&e, &block(&k, e.dim(), 0, n)).unwrap().passed());
        }
    }

    #[test]
    fn skew_conditions_agree_with_extending(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(5).unwrap();
        let d = base_datum(&k, &mut rng);
        let s = SkewCrossedSystem {
            a: d.a.clone(),
            vdim: d.vdim,
            left_act: d.left_act.clone(),
            cocycle: d.cocycle.clone(),
            brace: d.brace.clone(),
        };
        let ok = check_skew_crossed(&s).unwrap().passed();
        prop_assert_eq!(ok, check_extending(&s.datum().unwrap()).passed());
        if ok {
            let e = skew_crossed_product(&s).unwrap();
            prop_assert_eq!(&e, &unified_product(&s.datum().unwrap()));
            // V-block brackets are ({x, y}, f(x, y))
            let n = s.a.dim();
            for x in 0..s.vdim {
                for y in 0..s.vdim {
                    let mut expect = s.cocycle.get(x, y).to_vec();
                    expect.extend_from_slice(s.brace.get(x, y));
                    prop_assert_eq!(e.basis_bracket(n + x, n + y), &expect[..]);
                }
            }
        }
    }

    #[test]
    fn line_crossed_systems_are_supersolvable_data(seed in any::<u64>(), p in prop::sample::select(vec![5u64, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = PrimeField::new(p).unwrap();
        let algebras = stock(&k, 3);
        let a = algebras[rng.gen_range(0..algebras.len())].1.clone();
        let n = a.dim();
        let density = [0.0, 0.2, 0.5][rng.gen_range(0..3)];
        let dmap = random_matrix(&k, n, n, density, &mut rng);
        let a0 = random_vector(&k, n, density, &mut rng);
        let c = if rng.gen_bool(0.7) { 0 } else { rng.gen_range(1..p) };
        let mut cs = supersolvable_system(&a, &dmap, &a0).unwrap();
        let mut v = BilinearMap::zero(&k, 1, 1, 1);
        v.set(0, 0, &[c]);
        cs.v = JJAlgebra::new(k, v).unwrap();
        let crossed = check_crossed_system(&cs).unwrap().passed();
        let super_ok = check_supersolvable_datum(&a, &dmap, &a0).unwrap().passed() && c == 0;
        prop_assert_eq!(crossed, super_ok);
    }
}

#[test]
fn sampled_systems_cover_both_outcomes() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let k = PrimeField::new(5).unwrap();
    let (mut pass, mut fail) = (0, 0);
    for _ in 0..400 {
        let d = base_datum(&k, &mut rng);
        let cs = CrossedSystem {
            a: d.a.clone(),
            v: v_algebra(&d),
            right_act: d.right_act.clone(),
            cocycle: d.cocycle.clone(),
        };
        if check_crossed_system(&cs).unwrap().passed() {
            pass += 1;
        } else {
            fail += 1;
        }
    }
    assert!(pass > 20 && fail > 20, "pass {pass}, fail {fail}");
}

#[test]
fn dense_action_verdicts_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let k = PrimeField::new(5).unwrap();
    let a = abelian(k, 2);
    let v = JJAlgebra::new(k, random_symmetric(&k, 1, 1, 0.0, &mut rng)).unwrap();
    let act = random_bilinear(&k, (1, 2, 2), 1.0, &mut rng);
    let mut mp = MatchedPair::trivial(a, v);
    mp.right_act = act;
    let rep = check_matched_pair(&mp).unwrap();
    assert_eq!(rep.passed(), check_extending(&mp.datum().unwrap()).passed());
}
