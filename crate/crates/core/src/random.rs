//! Random raw structures for sampled checks.

use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::JJAlgebra;
use crate::classify::FlagDatum;
use crate::extend::{ExtendingDatum, MorphismPair};
use crate::field::Field;
use crate::linalg::{BilinearMap, Matrix, Vector};

/// An element that is zero with probability `1 - density`.
pub fn sparse_element<F: Field, R: Rng + ?Sized>(k: &F, density: f64, rng: &mut R) -> F::Elem {
    if rng.gen_bool(density.clamp(0.0, 1.0)) {
        k.random(rng)
    } else {
        k.zero()
    }
}

pub fn random_vector<F: Field, R: Rng + ?Sized>(
    k: &F,
    n: usize,
    density: f64,
    rng: &mut R,
) -> Vector<F> {
    (0..n).map(|_| sparse_element(k, density, rng)).collect()
}

pub fn random_matrix<F: Field, R: Rng + ?Sized>(
    k: &F,
    rows: usize,
    cols: usize,
    density: f64,
    rng: &mut R,
) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |_, _| sparse_element(k, density, rng))
}

/// A random invertible matrix, by rejection.
pub fn random_invertible<F: Field, R: Rng + ?Sized>(k: &F, n: usize, rng: &mut R) -> Matrix<F> {
    loop {
        let m = random_matrix(k, n, n, 1.0, rng);
        if m.is_invertible(k) {
            return m;
        }
    }
}

pub fn random_bilinear<F: Field, R: Rng + ?Sized>(
    k: &F,
    shape: (usize, usize, usize),
    density: f64,
    rng: &mut R,
) -> BilinearMap<F> {
    let (l, r, t) = shape;
    BilinearMap::from_fn(k, l, r, t, |_, _| random_vector(k, t, density, rng))
}

/// A symmetric `n x n -> t` map.
pub fn random_symmetric<F: Field, R: Rng + ?Sized>(
    k: &F,
    n: usize,
    t: usize,
    density: f64,
    rng: &mut R,
) -> BilinearMap<F> {
    let mut m = BilinearMap::zero(k, n, n, t);
    for i in 0..n {
        for j in i..n {
            m.set_symmetric(i, j, &random_vector(k, t, density, rng));
        }
    }
    m
}

/// A datum with every map drawn independently; `f` and `{-,-}` are
/// symmetric when `symmetric` is set.
pub fn random_datum<F: Field, R: Rng + ?Sized>(
    a: &JJAlgebra<F>,
    vdim: usize,
    density: f64,
    symmetric: bool,
    rng: &mut R,
) -> ExtendingDatum<F> {
    let k = a.field();
    let n = a.dim();
    let mut d = ExtendingDatum::zero(a.clone(), vdim);
    d.left_act = random_bilinear(k, (vdim, n, vdim), density, rng);
    d.right_act = random_bilinear(k, (vdim, n, n), density, rng);
    if symmetric {
        d.cocycle = random_symmetric(k, vdim, n, density, rng);
        d.brace = random_symmetric(k, vdim, vdim, density, rng);
    } else {
        d.cocycle = random_bilinear(k, (vdim, vdim, n), density, rng);
        d.brace = random_bilinear(k, (vdim, vdim, vdim), density, rng);
    }
    d
}

/// A random `(r, v)` with `v` invertible.
pub fn random_pair<F: Field, R: Rng + ?Sized>(
    k: &F,
    adim: usize,
    vdim: usize,
    density: f64,
    rng: &mut R,
) -> MorphismPair<F> {
    MorphismPair {
        r: random_matrix(k, adim, vdim, density, rng),
        v: random_invertible(k, vdim, rng),
    }
}

/// Changes one random entry of one of the four maps, keeping `f` and
/// `{-,-}` symmetric.
pub fn perturb_datum<F: Field, R: Rng + ?Sized>(d: &ExtendingDatum<F>, rng: &mut R) -> ExtendingDatum<F> {
    let k = d.field().clone();
    let mut out = d.clone();
    let (n, m) = (d.adim(), d.vdim);
    if m == 0 {
        return out;
    }
    let bump = |v: &[F::Elem], t: usize, rng: &mut R| {
        let mut v = v.to_vec();
        let mut delta = k.random(rng);
        if k.is_zero(&delta) {
            delta = k.one();
        }
        v[t] = k.add(&v[t], &delta);
        v
    };
    loop {
        match rng.gen_range(0..4) {
            0 if n > 0 && m > 0 => {
                let (x, a, t) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..m));
                let v = bump(out.left_act.get(x, a), t, rng);
                out.left_act.set(x, a, &v);
            }
            1 if n > 0 && m > 0 => {
                let (x, a, t) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..n));
                let v = bump(out.right_act.get(x, a), t, rng);
                out.right_act.set(x, a, &v);
            }
            2 if n > 0 && m > 0 => {
                let (x, y, t) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..n));
                let v = bump(out.cocycle.get(x, y), t, rng);
                out.cocycle.set_symmetric(x, y, &v);
            }
            3 if m > 0 => {
                let (x, y, t) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
                let v = bump(out.brace.get(x, y), t, rng);
                out.brace.set_symmetric(x, y, &v);
            }
            _ => continue,
        }
        return out;
    }
}

/// A raw quadruple `(D, λ, a₀, α₀)` with no conditions imposed.
pub fn random_flag_datum<F: Field, R: Rng + ?Sized>(
    k: &F,
    n: usize,
    density: f64,
    rng: &mut R,
) -> FlagDatum<F> {
    FlagDatum {
        d: random_matrix(k, n, n, density, rng),
        lambda: random_vector(k, n, density, rng),
        a0: random_vector(k, n, density, rng),
        alpha0: sparse_element(k, density, rng),
    }
}

/// Picks `count` elements of `items` uniformly with replacement.
pub fn sample<T: Clone, R: Rng + ?Sized>(items: &[T], count: usize, rng: &mut R) -> Vec<T> {
    if items.is_empty() {
        return Vec::new();
    }
    (0..count).map(|_| items[rng.gen_range(0..items.len())].clone()).collect()
}
