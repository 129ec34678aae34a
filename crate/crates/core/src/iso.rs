//! Isomorphism search between small algebras over finite fields.
//!
//! Columns of the candidate map are chosen one at a time. A partial map is
//! abandoned as soon as some bracket `[e_i, e_j]` whose support lies in the
//! assigned columns is not sent to `[φ e_i, φ e_j]`.

use alloc::vec::Vec;

use crate::algebra::JJAlgebra;
use crate::enumerate::{count_pow, vector_from_index, Budget};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector, VectorOps};

/// Largest dimension searched unless the caller raises it.
pub const DEFAULT_ISO_DIM_CAP: usize = 3;

/// Result of [`is_isomorphic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome<F: Field> {
    /// An invertible bracket-preserving map `A -> B`.
    Found(Matrix<F>),
    /// A numerical invariant that differs between the two algebras.
    Distinguished(Invariant),
    /// The pruned search visited `candidates` partial maps and found none.
    Exhausted { candidates: u64 },
}

impl<F: Field> IsoOutcome<F> {
    pub fn witness(&self) -> Option<&Matrix<F>> {
        match self {
            IsoOutcome::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Found(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Dimension { left: usize, right: usize },
    DerivedDimension { left: usize, right: usize },
    AnnihilatorDimension { left: usize, right: usize },
    SquareZeroCount { left: u64, right: u64 },
}

/// Cheap isomorphism invariants, compared before any search.
pub fn invariants<F: Field>(a: &JJAlgebra<F>) -> (usize, usize, usize) {
    (a.dim(), a.derived_subspace().cols(), a.annihilator().cols())
}

/// Number of vectors `v` with `[v, v] = 0`; only computed for tiny spaces.
fn square_zero_count<F: Field>(a: &JJAlgebra<F>, q: u64) -> Option<u64> {
    let total = count_pow(q, a.dim());
    if total > 4096 {
        return None;
    }
    let k = a.field();
    Some(
        (0..total as u64)
            .filter(|&i| {
                let v = vector_from_index(k, a.dim(), i);
                k.vis_zero(&a.bracket(&v, &v))
            })
            .count() as u64,
    )
}

/// Decides whether `A ≅ B`, with a witness map `A -> B` when they are.
pub fn is_isomorphic<F: Field>(
    a: &JJAlgebra<F>,
    b: &JJAlgebra<F>,
    dim_cap: usize,
    budget: &Budget,
) -> Result<IsoOutcome<F>> {
    a.same_field(b)?;
    let q = a.field().require_finite("isomorphism search")?;
    let (da, ga, za) = invariants(a);
    let (db, gb, zb) = invariants(b);
    if da != db {
        return Ok(IsoOutcome::Distinguished(Invariant::Dimension {
            left: da,
            right: db,
        }));
    }
    if da > dim_cap {
        return Err(Error::Invalid(alloc::format!(
            "isomorphism search is capped at dimension {dim_cap}, got {da}"
        )));
    }
    if ga != gb {
        return Ok(IsoOutcome::Distinguished(Invariant::DerivedDimension {
            left: ga,
            right: gb,
        }));
    }
    if za != zb {
        return Ok(IsoOutcome::Distinguished(Invariant::AnnihilatorDimension {
            left: za,
            right: zb,
        }));
    }
    if let (Some(sa), Some(sb)) = (square_zero_count(a, q), square_zero_count(b, q)) {
        if sa != sb {
            return Ok(IsoOutcome::Distinguished(Invariant::SquareZeroCount {
                left: sa,
                right: sb,
            }));
        }
    }
    search_isomorphism(a, b, dim_cap, budget)
}

/// The backtracking search over `GL` alone, without comparing invariants;
/// a `None` outcome is reported as [`IsoOutcome::Exhausted`].
pub fn search_isomorphism<F: Field>(
    a: &JJAlgebra<F>,
    b: &JJAlgebra<F>,
    dim_cap: usize,
    budget: &Budget,
) -> Result<IsoOutcome<F>> {
    a.same_field(b)?;
    let q = a.field().require_finite("isomorphism search")?;
    let da = a.dim();
    if da != b.dim() {
        return Ok(IsoOutcome::Distinguished(Invariant::Dimension {
            left: da,
            right: b.dim(),
        }));
    }
    if da > dim_cap {
        return Err(Error::Invalid(alloc::format!(
            "isomorphism search is capped at dimension {dim_cap}, got {da}"
        )));
    }
    let mut search = Search::new(a, b, q, *budget);
    match search.run(0)? {
        Some(cols) => Ok(IsoOutcome::Found(
            Matrix::from_columns(a.field(), da, &cols).expect("square"),
        )),
        None => Ok(IsoOutcome::Exhausted {
            candidates: search.visited,
        }),
    }
}

struct Search<'a, F: Field> {
    a: &'a JJAlgebra<F>,
    b: &'a JJAlgebra<F>,
    per_column: u64,
    budget: Budget,
    visited: u64,
    cols: Vec<Vector<F>>,
    // highest basis index in the support of [e_i, e_j]
    support: Vec<Vec<Option<usize>>>,
}

impl<'a, F: Field> Search<'a, F> {
    fn new(a: &'a JJAlgebra<F>, b: &'a JJAlgebra<F>, q: u64, budget: Budget) -> Self {
        let k = a.field();
        let n = a.dim();
        let support = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| a.basis_bracket(i, j).iter().rposition(|c| !k.is_zero(c)))
                    .collect()
            })
            .collect();
        Search {
            a,
            b,
            per_column: count_pow(q, n) as u64,
            budget,
            visited: 0,
            cols: Vec::new(),
            support,
        }
    }

    fn consistent(&self, l: usize) -> bool {
        let k = self.a.field();
        let n = self.a.dim();
        // pairs (i, j) that become checkable once columns 0..=l are set
        for i in 0..n {
            for j in i..n {
                let last = j.max(self.support[i][j].unwrap_or(0));
                let newly = last == l;
                if !newly {
                    continue;
                }
                let mut image = k.zero_vec(n);
                for (t, c) in self.a.basis_bracket(i, j).iter().enumerate() {
                    if !k.is_zero(c) {
                        k.axpy(&mut image, c, &self.cols[t]);
                    }
                }
                if image != self.b.bracket(&self.cols[i], &self.cols[j]) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, l: usize) -> Result<Option<Vec<Vector<F>>>> {
        let n = self.a.dim();
        if l == n {
            return Ok(Some(self.cols.clone()));
        }
        let k = self.a.field().clone();
        for idx in 1..self.per_column {
            self.visited += 1;
            self.budget.check("isomorphism search", self.visited as u128)?;
            let v = vector_from_index(&k, n, idx);
            self.cols.push(v);
            let independent = Matrix::from_columns(&k, n, &self.cols)
                .expect("shape")
                .rank(&k)
                == l + 1;
            if independent && self.consistent(l) {
                if let Some(found) = self.run(l + 1)? {
                    return Ok(Some(found));
                }
            }
            self.cols.pop();
        }
        Ok(None)
    }
}
