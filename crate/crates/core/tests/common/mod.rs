#![allow(dead_code)]

use jjalg::algebra::{
    abelian, current_algebra, direct_product, heisenberg3, square_zero_line, CommAssocAlgebra,
};
use jjalg::classify::{flag_extension, heisenberg_flag_datum};
use jjalg::{Field, JJAlgebra, Matrix};

/// Stock algebras up to dimension `max_dim`.
pub fn stock<F: Field>(k: &F, max_dim: usize) -> Vec<(&'static str, JJAlgebra<F>)> {
    let h = heisenberg3(k.clone());
    let sq = square_zero_line(k.clone());
    let line = abelian(k.clone(), 1);
    let one = k.one();
    let zero = k.zero();
    let all = vec![
        ("k1", line.clone()),
        ("k2", abelian(k.clone(), 2)),
        ("k3", abelian(k.clone(), 3)),
        ("sq", sq.clone()),
        ("h3", h.clone()),
        ("sq+k", direct_product(&sq, &line).unwrap()),
        ("h3+k", direct_product(&h, &line).unwrap()),
        ("sq+sq", direct_product(&sq, &sq).unwrap()),
        (
            "h3 flag",
            flag_extension(&h, &heisenberg_flag_datum(k, &one, &one, &zero)).unwrap(),
        ),
        ("h3+sq", direct_product(&h, &sq).unwrap()),
        (
            "h3 current",
            current_algebra(&h, &CommAssocAlgebra::truncated_polynomials(k.clone(), 2)).unwrap(),
        ),
    ];
    all.into_iter().filter(|(_, a)| a.dim() <= max_dim).collect()
}

/// The columns `e_i` for `i` in `idx`, in dimension `n`.
pub fn coordinate_basis<F: Field>(k: &F, n: usize, idx: &[usize]) -> Matrix<F> {
    Matrix::from_fn(n, idx.len(), |r, c| if r == idx[c] { k.one() } else { k.zero() })
}

use jjalg::algebra::{change_basis, is_subalgebra};
use jjalg::extend::{canonical_datum_with_complement, transport_datum, CanonicalDatum, ExtendingDatum};
use jjalg::random::{perturb_datum, random_datum, random_invertible, random_matrix, random_pair};
use rand::Rng;

/// A random extension `A ⊆ E` with `E` a stock algebra in a random basis,
/// `A` spanned by coordinate vectors and a random complement.
pub fn random_extension<F: Field, R: Rng>(
    k: &F,
    max_adim: usize,
    max_vdim: usize,
    rng: &mut R,
) -> (JJAlgebra<F>, Matrix<F>, CanonicalDatum<F>) {
    let pool: Vec<_> = stock(k, max_adim + max_vdim)
        .into_iter()
        .filter(|(_, e)| e.dim() >= 2)
        .collect();
    loop {
        let (_, e) = &pool[rng.gen_range(0..pool.len())];
        let n = e.dim();
        let e = change_basis(e, &random_invertible(k, n, rng)).unwrap();
        let lo = n.saturating_sub(max_vdim).max(1);
        let hi = max_adim.min(n - 1);
        if lo > hi {
            continue;
        }
        let d = rng.gen_range(lo..=hi);
        let mut idx: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            idx.swap(i, rng.gen_range(0..=i));
        }
        idx.truncate(d);
        idx.sort();
        let a_basis = coordinate_basis(k, n, &idx);
        if !is_subalgebra(&e, &a_basis).unwrap().passed() {
            continue;
        }
        let complement = loop {
            let c = random_matrix(k, n, n - d, 1.0, rng);
            if a_basis.hconcat(k, &c).is_invertible(k) {
                break c;
            }
        };
        let cd = canonical_datum_with_complement(&e, &a_basis, &complement).unwrap();
        return (e, a_basis, cd);
    }
}

/// Where a sampled datum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Origin {
    Raw,
    Canonical,
    Transported,
    Perturbed,
}

/// A datum with `dim A <= max_adim`, `vdim <= max_vdim`, drawn from a mix of
/// raw, valid and nearly valid sources.
pub fn sample_datum<F: Field, R: Rng>(
    k: &F,
    max_adim: usize,
    max_vdim: usize,
    rng: &mut R,
) -> (ExtendingDatum<F>, Origin) {
    match rng.gen_range(0..4) {
        0 => {
            let algebras = stock(k, max_adim);
            let a = &algebras[rng.gen_range(0..algebras.len())].1;
            let vdim = rng.gen_range(1..=max_vdim);
            let density = [0.1, 0.25, 0.5, 1.0][rng.gen_range(0..4)];
            let symmetric = rng.gen_bool(0.8);
            (random_datum(a, vdim, density, symmetric, rng), Origin::Raw)
        }
        1 => (random_extension(k, max_adim, max_vdim, rng).2.datum, Origin::Canonical),
        2 => {
            let d = random_extension(k, max_adim, max_vdim, rng).2.datum;
            let pair = random_pair(k, d.adim(), d.vdim, 0.7, rng);
            (transport_datum(&d, &pair).unwrap(), Origin::Transported)
        }
        _ => {
            let d = random_extension(k, max_adim, max_vdim, rng).2.datum;
            (perturb_datum(&d, rng), Origin::Perturbed)
        }
    }
}
