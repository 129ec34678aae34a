//! Exhaustive enumeration over finite fields, in lexicographic order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector, VectorOps};

/// Default cap on the number of candidates an exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on the size of an exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    /// Errors when `needed` exceeds the limit.
    pub fn check(&self, stage: &'static str, needed: u128) -> Result<()> {
        if needed > self.limit as u128 {
            Err(Error::BudgetExceeded {
                stage,
                needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// `q^e` without overflow (saturating at `u128::MAX`).
pub fn count_pow(q: u64, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(q as u128);
    }
    acc
}

/// `|GL_n(F_q)| = Π_{i<n} (q^n - q^i)`
pub fn gl_order(q: u64, n: usize) -> u128 {
    let qn = count_pow(q, n);
    (0..n).fold(1u128, |acc, i| acc.saturating_mul(qn - count_pow(q, i)))
}

/// The vector with lexicographic rank `index` (last coordinate varies fastest).
pub fn vector_from_index<F: Field>(k: &F, dim: usize, mut index: u64) -> Vector<F> {
    let q = k.size().expect("finite field");
    let mut v = k.zero_vec(dim);
    for slot in v.iter_mut().rev() {
        *slot = k.element(index % q);
        index /= q;
    }
    v
}

/// Lexicographic rank of a vector over a finite field.
pub fn vector_index<F: Field>(k: &F, v: &[F::Elem]) -> u64 {
    let q = k.size().expect("finite field");
    v.iter().fold(0u64, |acc, x| {
        acc * q + k.element_index(x).expect("finite field")
    })
}

/// All `q^dim` vectors of `F_q^dim`, each once, in lexicographic order.
pub fn enumerate_vectors<'a, F: Field>(
    k: &'a F,
    dim: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = Vector<F>> + 'a> {
    let q = k.require_finite("vector enumeration")?;
    let total = count_pow(q, dim);
    budget.check("vector enumeration", total)?;
    Ok((0..total as u64).map(move |i| vector_from_index(k, dim, i)))
}

/// All `rows x cols` matrices, lexicographic in row-major order.
pub fn enumerate_matrices<'a, F: Field>(
    k: &'a F,
    rows: usize,
    cols: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = Matrix<F>> + 'a> {
    let q = k.require_finite("matrix enumeration")?;
    let total = count_pow(q, rows * cols);
    budget.check("matrix enumeration", total)?;
    Ok((0..total as u64).map(move |i| {
        Matrix::from_row_major(rows, cols, vector_from_index(k, rows * cols, i))
            .expect("shape is consistent")
    }))
}

/// All invertible `dim x dim` matrices over a finite field.
///
/// Columns are chosen left to right, each ranging over the vectors outside
/// the span of the previous columns, so every element of `GL_dim` is
/// produced exactly once and no singular matrix is visited.
pub fn enumerate_invertible<F: Field>(
    k: &F,
    dim: usize,
    budget: &Budget,
) -> Result<InvertibleMaps<F>> {
    let q = k.require_finite("GL enumeration")?;
    budget.check("GL enumeration", count_pow(q, dim * dim))?;
    Ok(InvertibleMaps::new(k.clone(), dim, q))
}

/// Iterator over `GL_n(F_q)`; see [`enumerate_invertible`].
pub struct InvertibleMaps<F: Field> {
    k: F,
    dim: usize,
    per_column: u64,
    index: Vec<u64>,
    columns: Vec<Vector<F>>,
    // echelon[l] reduces against the first l columns: (pivot, normalized row)
    echelon: Vec<Vec<(usize, Vector<F>)>>,
    level: usize,
    started: bool,
    done: bool,
}

impl<F: Field> InvertibleMaps<F> {
    fn new(k: F, dim: usize, q: u64) -> Self {
        let per_column = count_pow(q, dim) as u64;
        InvertibleMaps {
            columns: (0..dim).map(|_| k.zero_vec(dim)).collect(),
            echelon: (0..=dim).map(|_| Vec::new()).collect(),
            index: alloc::vec![0; dim],
            k,
            dim,
            per_column,
            level: 0,
            started: false,
            done: false,
        }
    }

    /// Reduces `v` against the echelon basis of level `l`; returns the
    /// normalized remainder and its pivot when `v` is independent.
    fn reduce_against(&self, l: usize, v: &[F::Elem]) -> Option<(usize, Vector<F>)> {
        let k = &self.k;
        let mut w = v.to_vec();
        for (pivot, row) in &self.echelon[l] {
            let c = w[*pivot].clone();
            if !k.is_zero(&c) {
                k.axpy(&mut w, &k.neg(&c), row);
            }
        }
        let pivot = w.iter().position(|x| !k.is_zero(x))?;
        let inv = k.inv(&w[pivot]).expect("nonzero");
        let w = k.vscale(&inv, &w);
        Some((pivot, w))
    }

    fn emit(&self) -> Matrix<F> {
        Matrix::from_columns(&self.k, self.dim, &self.columns).expect("square")
    }
}

impl<F: Field> Iterator for InvertibleMaps<F> {
    type Item = Matrix<F>;

    fn next(&mut self) -> Option<Matrix<F>> {
        if self.done {
            return None;
        }
        if self.dim == 0 {
            self.done = true;
            return Some(Matrix::zeros(&self.k, 0, 0));
        }
        if !self.started {
            self.started = true;
            self.level = 0;
            self.index[0] = 0;
        } else {
            self.level = self.dim - 1;
            self.index[self.level] += 1;
        }
        loop {
            let l = self.level;
            if self.index[l] == self.per_column {
                if l == 0 {
                    self.done = true;
                    return None;
                }
                self.level -= 1;
                self.index[self.level] += 1;
                continue;
            }
            let v = vector_from_index(&self.k, self.dim, self.index[l]);
            match self.reduce_against(l, &v) {
                Some(reduced) => {
                    let mut next_echelon = self.echelon[l].clone();
                    // keep rows fully reduced so later reductions are one pass
                    let (p, ref row) = reduced;
                    for (_, r) in next_echelon.iter_mut() {
                        let c = r[p].clone();
                        if !self.k.is_zero(&c) {
                            self.k.axpy(r, &self.k.neg(&c), row);
                        }
                    }
                    next_echelon.push(reduced);
                    self.echelon[l + 1] = next_echelon;
                    self.columns[l] = v;
                    if l + 1 == self.dim {
                        return Some(self.emit());
                    }
                    self.level += 1;
                    self.index[self.level] = 0;
                }
                None => self.index[l] += 1,
            }
        }
    }
}

/// `f(x, y, z) + f(y, z, x) + f(z, x, y)`
pub fn circular_sum<F, T, G>(k: &F, f: G, x: &T, y: &T, z: &T) -> Vector<F>
where
    F: Field,
    T: ?Sized,
    G: Fn(&T, &T, &T) -> Vector<F>,
{
    let a = f(x, y, z);
    let b = f(y, z, x);
    let c = f(z, x, y);
    let s = k.vadd(&a, &b);
    k.vadd(&s, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use alloc::vec;

    #[test]
    fn vector_counts() {
        let f2 = PrimeField::new(2).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let b = Budget::default();
        let v: Vec<_> = enumerate_vectors(&f2, 1, &b).unwrap().collect();
        assert_eq!(v, vec![vec![0], vec![1]]);
        assert_eq!(enumerate_vectors(&f5, 2, &b).unwrap().count(), 25);
        assert_eq!(enumerate_vectors(&f5, 3, &b).unwrap().count(), 125);
        assert!(enumerate_vectors(&Rationals, 2, &b).is_err());
    }

    #[test]
    fn vector_index_roundtrip() {
        let f7 = PrimeField::new(7).unwrap();
        for i in 0..343 {
            assert_eq!(vector_index(&f7, &vector_from_index(&f7, 3, i)), i);
        }
    }

    #[test]
    fn invertible_counts_match_filtered_enumeration() {
        let b = Budget::default();
        for (p, n) in [(2u64, 1usize), (2, 2), (3, 2), (5, 1), (5, 2), (2, 3)] {
            let k = PrimeField::new(p).unwrap();
            let direct = enumerate_invertible(&k, n, &b).unwrap().count() as u128;
            let filtered = enumerate_matrices(&k, n, n, &b)
                .unwrap()
                .filter(|m| m.is_invertible(&k))
                .count() as u128;
            assert_eq!(direct, filtered, "p={p} n={n}");
            assert_eq!(direct, gl_order(p, n), "p={p} n={n}");
        }
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(enumerate_invertible(&f5, 2, &b).unwrap().count(), 480);
        assert_eq!(enumerate_invertible(&f5, 1, &b).unwrap().count(), 4);
    }

    #[test]
    fn invertible_enumeration_is_duplicate_free() {
        let k = PrimeField::new(3).unwrap();
        let mut all: Vec<Vec<u64>> = enumerate_invertible(&k, 2, &Budget::default())
            .unwrap()
            .map(|m| m.data().to_vec())
            .collect();
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
    }

    #[test]
    fn budget_is_enforced() {
        let k = PrimeField::new(5).unwrap();
        let tiny = Budget::new(100);
        assert!(matches!(
            enumerate_invertible(&k, 3, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn circular_sum_of_constant() {
        let k = PrimeField::new(7).unwrap();
        let s = circular_sum(&k, |_: &u8, _: &u8, _: &u8| vec![2, 5], &0, &1, &2);
        assert_eq!(s, vec![6, 1]);
    }
}
