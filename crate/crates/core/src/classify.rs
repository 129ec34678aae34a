//! Codimension-one extensions: flag data, their equivalence, exhaustive
//! enumeration over prime fields, orbit computation, and the recursive
//! classification driver.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::JJAlgebra;
use crate::enumerate::{count_pow, vector_from_index, Budget};
use crate::error::{check_dim, Error, Result};
use crate::extend::{unified_product, ExtendingDatum, MorphismPair};
use crate::field::Field;
use crate::iso::{is_isomorphic, Invariant, IsoOutcome};
use crate::linalg::{solve_linear, BilinearMap, LinearFunctional, Matrix, Vector, VectorOps};
use crate::report::{Condition, Report};

/// `(D, λ, a₀, α₀)` for an algebra `A` supplied alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagDatum<F: Field> {
    pub d: Matrix<F>,
    pub lambda: LinearFunctional<F>,
    pub a0: Vector<F>,
    pub alpha0: F::Elem,
}

impl<F: Field> FlagDatum<F> {
    pub fn zero(k: &F, n: usize) -> Self {
        FlagDatum {
            d: Matrix::zeros(k, n, n),
            lambda: k.zero_vec(n),
            a0: k.zero_vec(n),
            alpha0: k.zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.a0.len()
    }

    fn check_shape(&self, a: &JJAlgebra<F>) -> Result<()> {
        let n = a.dim();
        check_dim("D rows", n, self.d.rows())?;
        check_dim("D cols", n, self.d.cols())?;
        check_dim("lambda length", n, self.lambda.len())?;
        check_dim("a0 length", n, self.a0.len())
    }

    /// Ordering key over a finite field: `D` column by column, then `λ`,
    /// `a₀`, `α₀`, each as element indices.
    pub fn key(&self, k: &F) -> Vec<u64> {
        let n = self.dim();
        let idx = |x: &F::Elem| k.element_index(x).expect("finite field");
        let mut out = Vec::with_capacity(n * n + 2 * n + 1);
        for c in 0..n {
            for s in 0..n {
                out.push(idx(self.d.get(s, c)));
            }
        }
        out.extend(self.lambda.iter().map(idx));
        out.extend(self.a0.iter().map(idx));
        out.push(idx(&self.alpha0));
        out
    }

    /// Inverse of [`FlagDatum::key`].
    pub fn from_key(k: &F, n: usize, key: &[u64]) -> Self {
        let el = |i: usize| k.element(key[i]);
        let d = Matrix::from_fn(n, n, |s, c| el(c * n + s));
        let base = n * n;
        FlagDatum {
            d,
            lambda: (0..n).map(|i| el(base + i)).collect(),
            a0: (0..n).map(|i| el(base + n + i)).collect(),
            alpha0: el(base + 2 * n),
        }
    }
}

fn three<F: Field>(k: &F) -> F::Elem {
    k.from_i64(3)
}

fn two<F: Field>(k: &F) -> F::Elem {
    k.from_i64(2)
}

/// (F1)-(F6). Witnesses: F1/F2 `(i, j)`, F3/F4 `(i)`, F5/F6 `()`.
pub fn check_flag_datum<F: Field>(a: &JJAlgebra<F>, fd: &FlagDatum<F>) -> Result<Report> {
    fd.check_shape(a)?;
    let mut conds: [Condition; 6] = [
        Condition::new("F1"),
        Condition::new("F2"),
        Condition::new("F3"),
        Condition::new("F4"),
        Condition::new("F5"),
        Condition::new("F6"),
    ];
    flag_conditions(a, fd, |c, tuple| {
        conds[c].fail(tuple);
        true
    });
    Ok(Report {
        conditions: conds.into(),
    })
}

/// Whether (F1)-(F6) all hold; stops at the first failure.
pub fn is_flag_datum<F: Field>(a: &JJAlgebra<F>, fd: &FlagDatum<F>) -> bool {
    let mut ok = true;
    flag_conditions(a, fd, |_, _| {
        ok = false;
        false
    });
    ok
}

/// Evaluates every condition instance, calling `fail(condition, tuple)` on
/// failures; evaluation stops when `fail` returns false.
fn flag_conditions<F: Field>(
    a: &JJAlgebra<F>,
    fd: &FlagDatum<F>,
    mut fail: impl FnMut(usize, &[usize]) -> bool,
) {
    let k = a.field();
    let n = a.dim();
    let lam = &fd.lambda;
    let dcols = fd.d.columns();
    for i in 0..n {
        for j in i..n {
            let b = a.basis_bracket(i, j);
            let f1 = k.add(&k.dot(lam, b), &k.mul(&two(k), &k.mul(&lam[i], &lam[j])));
            if !k.is_zero(&f1) && !fail(0, &[i, j]) {
                return;
            }
            let mut s = fd.d.apply(k, b);
            k.axpy(&mut s, &k.one(), &a.structure().apply_right_basis(k, &dcols[i], j));
            k.axpy(&mut s, &k.one(), &a.structure().apply_left_basis(k, i, &dcols[j]));
            k.axpy(&mut s, &lam[i], &dcols[j]);
            k.axpy(&mut s, &lam[j], &dcols[i]);
            if !k.vis_zero(&s) && !fail(1, &[i, j]) {
                return;
            }
        }
    }
    for i in 0..n {
        let mut s = a.structure().apply_left_basis(k, i, &fd.a0);
        k.axpy(&mut s, &fd.alpha0, &dcols[i]);
        k.axpy(&mut s, &two(k), &fd.d.apply(k, &dcols[i]));
        k.axpy(&mut s, &k.mul(&two(k), &lam[i]), &fd.a0);
        if !k.vis_zero(&s) && !fail(2, &[i]) {
            return;
        }
        let f4 = k.add(
            &k.mul(&three(k), &k.mul(&lam[i], &fd.alpha0)),
            &k.mul(&two(k), &k.dot(lam, &dcols[i])),
        );
        if !k.is_zero(&f4) && !fail(3, &[i]) {
            return;
        }
    }
    let mut f5 = fd.d.apply(k, &fd.a0);
    k.axpy(&mut f5, &fd.alpha0, &fd.a0);
    if !k.vis_zero(&k.vscale(&three(k), &f5)) && !fail(4, &[]) {
        return;
    }
    let f6 = k.mul(
        &three(k),
        &k.add(&k.dot(lam, &fd.a0), &k.mul(&fd.alpha0, &fd.alpha0)),
    );
    if !k.is_zero(&f6) {
        fail(5, &[]);
    }
}

/// The vdim-1 datum `x◁a = λ(a)x`, `x▷a = D(a)`, `f(x,x) = a₀`, `{x,x} = α₀x`.
pub fn flag_datum_to_extending<F: Field>(
    a: &JJAlgebra<F>,
    fd: &FlagDatum<F>,
) -> Result<ExtendingDatum<F>> {
    fd.check_shape(a)?;
    let n = a.dim();
    let mut d = ExtendingDatum::zero(a.clone(), 1);
    for i in 0..n {
        d.left_act.set(0, i, &[fd.lambda[i].clone()]);
        d.right_act.set(0, i, &fd.d.column(i));
    }
    d.cocycle.set(0, 0, &fd.a0);
    d.brace.set(0, 0, core::slice::from_ref(&fd.alpha0));
    Ok(d)
}

/// The algebra on `A ⊕ kx` with `[e_i, x] = D(e_i) + λ(e_i)x` and
/// `[x, x] = a₀ + α₀x`; it is a JJ algebra exactly when (F1)-(F6) hold.
pub fn flag_extension<F: Field>(a: &JJAlgebra<F>, fd: &FlagDatum<F>) -> Result<JJAlgebra<F>> {
    Ok(unified_product(&flag_datum_to_extending(a, fd)?))
}

/// The variant bracket `[e_i, x] = D(e_i) + a₀ + λ(e_i)x`, kept only to
/// compare against [`flag_extension`].
pub fn flag_extension_with_a0_in_mixed_bracket<F: Field>(
    a: &JJAlgebra<F>,
    fd: &FlagDatum<F>,
) -> Result<JJAlgebra<F>> {
    let e = flag_extension(a, fd)?;
    let k = a.field();
    let n = a.dim();
    let mut b = e.structure().clone();
    for i in 0..n {
        let mut v = b.get(i, n).to_vec();
        for (t, c) in fd.a0.iter().enumerate() {
            v[t] = k.add(&v[t], c);
        }
        b.set_symmetric(i, n, &v);
    }
    JJAlgebra::with_labels(k.clone(), e.basis_labels().to_vec(), b)
}

/// `(r, u) ∈ A x k*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagWitness<F: Field> {
    pub r: Vector<F>,
    pub u: F::Elem,
}

impl<F: Field> FlagWitness<F> {
    pub fn identity(k: &F, n: usize) -> Self {
        FlagWitness {
            r: k.zero_vec(n),
            u: k.one(),
        }
    }

    /// If `self` relates `fd` to `fd'` and `next` relates `fd'` to `fd''`,
    /// the result relates `fd` to `fd''`: `(r + u r', u u')`.
    pub fn then(&self, k: &F, next: &Self) -> Self {
        let mut r = self.r.clone();
        k.axpy(&mut r, &self.u, &next.r);
        FlagWitness {
            r,
            u: k.mul(&self.u, &next.u),
        }
    }

    /// `(-r/u, 1/u)`
    pub fn inverse(&self, k: &F) -> Result<Self> {
        let ui = k.inv(&self.u).ok_or(Error::DivisionByZero)?;
        Ok(FlagWitness {
            r: k.vscale(&k.neg(&ui), &self.r),
            u: ui,
        })
    }

    /// The morphism pair `(x ↦ r, x ↦ u x)` of the two extensions.
    pub fn morphism_pair(&self, k: &F) -> MorphismPair<F> {
        let n = self.r.len();
        MorphismPair {
            r: Matrix::from_columns(k, n, core::slice::from_ref(&self.r)).expect("shape"),
            v: Matrix::from_row_major(1, 1, alloc::vec![self.u.clone()]).expect("shape"),
        }
    }
}

/// The datum `fd` equivalent to `fd'` through `(r, u)`:
/// `λ = λ'`, `D(a) = uD'(a) + [a, r] − λ'(a) r`, `α₀ = uα₀' + 2λ'(r)`,
/// `a₀ = u²a₀' + [r, r] + 2uD'(r) − uα₀' r − 2λ'(r) r`.
pub fn apply_flag_witness<F: Field>(
    a: &JJAlgebra<F>,
    fdp: &FlagDatum<F>,
    w: &FlagWitness<F>,
) -> Result<FlagDatum<F>> {
    fdp.check_shape(a)?;
    check_dim("witness length", a.dim(), w.r.len())?;
    let k = a.field();
    if k.is_zero(&w.u) {
        return Err(Error::DivisionByZero);
    }
    let n = a.dim();
    let (r, u) = (&w.r, &w.u);
    let ad_r = a.ad(r);
    let neg_r = k.vneg(r);
    let d = Matrix::from_columns(
        k,
        n,
        &(0..n)
            .map(|i| {
                let mut c = k.vscale(u, &fdp.d.column(i));
                // [e_i, r] = [r, e_i]
                k.axpy(&mut c, &k.one(), &ad_r.column(i));
                k.axpy(&mut c, &fdp.lambda[i], &neg_r);
                c
            })
            .collect::<Vec<_>>(),
    )?;
    let lr = k.dot(&fdp.lambda, r);
    let alpha0 = k.add(&k.mul(u, &fdp.alpha0), &k.mul(&two(k), &lr));
    let mut a0 = k.vscale(&k.mul(u, u), &fdp.a0);
    k.axpy(&mut a0, &k.one(), &a.bracket(r, r));
    k.axpy(&mut a0, &k.mul(&two(k), u), &fdp.d.apply(k, r));
    k.axpy(&mut a0, &k.neg(&k.mul(u, &fdp.alpha0)), r);
    k.axpy(&mut a0, &k.neg(&k.mul(&two(k), &lr)), r);
    Ok(FlagDatum {
        d,
        lambda: fdp.lambda.clone(),
        a0,
        alpha0,
    })
}

/// Whether `(r, u)` carries `fd'` to `fd`.
pub fn check_flag_equivalence<F: Field>(
    a: &JJAlgebra<F>,
    fd: &FlagDatum<F>,
    fdp: &FlagDatum<F>,
    w: &FlagWitness<F>,
) -> Result<bool> {
    fd.check_shape(a)?;
    Ok(apply_flag_witness(a, fdp, w)? == *fd)
}

/// All `(r, u)` over a finite field, `r` slowest.
pub fn all_flag_witnesses<F: Field>(k: &F, n: usize) -> Result<Vec<FlagWitness<F>>> {
    let q = k.require_finite("witness enumeration")?;
    let mut out = Vec::new();
    for ri in 0..count_pow(q, n) as u64 {
        let r = vector_from_index(k, n, ri);
        for ui in 1..q {
            out.push(FlagWitness {
                r: r.clone(),
                u: k.element(ui),
            });
        }
    }
    Ok(out)
}

/// Searches all witnesses for one carrying `fd'` to `fd`.
pub fn find_flag_witness<F: Field>(
    a: &JJAlgebra<F>,
    fd: &FlagDatum<F>,
    fdp: &FlagDatum<F>,
) -> Result<(Option<FlagWitness<F>>, u64)> {
    let mut tried = 0u64;
    for w in all_flag_witnesses(a.field(), a.dim())? {
        tried += 1;
        if apply_flag_witness(a, fdp, &w)? == *fd {
            return Ok((Some(w), tried));
        }
    }
    Ok((None, tried))
}

struct Tally<'a> {
    budget: &'a Budget,
    used: u128,
}

impl Tally<'_> {
    fn spend(&mut self, stage: &'static str, n: u128) -> Result<()> {
        self.used = self.used.saturating_add(n);
        self.budget.check(stage, self.used)
    }
}

/// The rows of (F2) as a homogeneous system in the entries of `D`, unknown
/// `c * n + s` being coordinate `s` of `D(e_c)`.
fn antiderivation_system<F: Field>(a: &JJAlgebra<F>, lambda: &[F::Elem]) -> Matrix<F> {
    let k = a.field();
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut m = Matrix::zeros(k, pairs.len() * n, n * n);
    let bump = |m: &mut Matrix<F>, row: usize, col: usize, c: &F::Elem| {
        let v = k.add(m.get(row, col), c);
        m.set(row, col, v);
    };
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let b = a.basis_bracket(i, j);
        for t in 0..n {
            let row = p * n + t;
            for c in 0..n {
                bump(&mut m, row, c * n + t, &b[c]);
            }
            for s in 0..n {
                bump(&mut m, row, i * n + s, &a.basis_bracket(s, j)[t]);
                bump(&mut m, row, j * n + s, &a.basis_bracket(i, s)[t]);
            }
            bump(&mut m, row, j * n + t, &lambda[i]);
            bump(&mut m, row, i * n + t, &lambda[j]);
        }
    }
    m
}

/// Enumerates `ℱ(A)` in stages: `λ` filtered by (F1); `D` from the solution
/// space of (F2); for each `α₀`, `a₀` from the solution set of (F3); then
/// (F4)-(F6).
pub fn enumerate_flag_data<F: Field>(
    a: &JJAlgebra<F>,
    budget: &Budget,
) -> Result<Vec<FlagDatum<F>>> {
    let k = a.field();
    let q = k.require_finite("flag datum enumeration")?;
    let n = a.dim();
    let mut tally = Tally { budget, used: 0 };
    tally.spend("λ candidates", count_pow(q, n))?;
    let mut out = Vec::new();
    for li in 0..count_pow(q, n) as u64 {
        let lambda = vector_from_index(k, n, li);
        let f1 = (0..n).all(|i| {
            (i..n).all(|j| {
                let v = k.add(
                    &k.dot(&lambda, a.basis_bracket(i, j)),
                    &k.mul(&two(k), &k.mul(&lambda[i], &lambda[j])),
                );
                k.is_zero(&v)
            })
        });
        if !f1 {
            continue;
        }
        let dspace = antiderivation_system(a, &lambda).kernel(k);
        let dcount = count_pow(q, dspace.cols());
        tally.spend("D solution space", dcount)?;
        for di in 0..dcount as u64 {
            let coeffs = vector_from_index(k, dspace.cols(), di);
            let flat = dspace.apply(k, &coeffs);
            let d = Matrix::from_fn(n, n, |s, c| flat[c * n + s].clone());
            let dcols = d.columns();
            let d2cols: Vec<Vector<F>> = dcols.iter().map(|c| d.apply(k, c)).collect();
            // rows (i, t): [e_i, a₀]_t + 2λ_i a₀_t
            let mut sys = Matrix::zeros(k, n * n, n);
            for i in 0..n {
                for t in 0..n {
                    for s in 0..n {
                        let mut v = a.basis_bracket(i, s)[t].clone();
                        if s == t {
                            v = k.add(&v, &k.mul(&two(k), &lambda[i]));
                        }
                        sys.set(i * n + t, s, v);
                    }
                }
            }
            tally.spend("α₀ candidates", q as u128)?;
            for ai in 0..q {
                let alpha0 = k.element(ai);
                let mut rhs = Vec::with_capacity(n * n);
                for i in 0..n {
                    for t in 0..n {
                        let v = k.add(
                            &k.mul(&alpha0, &dcols[i][t]),
                            &k.mul(&two(k), &d2cols[i][t]),
                        );
                        rhs.push(k.neg(&v));
                    }
                }
                let Some(sol) = solve_linear(k, &sys, &rhs)? else {
                    continue;
                };
                let acount = count_pow(q, sol.dimension());
                tally.spend("a₀ solution set", acount)?;
                for idx in 0..acount as u64 {
                    let c = vector_from_index(k, sol.dimension(), idx);
                    let fd = FlagDatum {
                        d: d.clone(),
                        lambda: lambda.clone(),
                        a0: sol.point(k, &c),
                        alpha0: alpha0.clone(),
                    };
                    if tail_conditions_hold(a, &fd) {
                        out.push(fd);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// (F4)-(F6).
fn tail_conditions_hold<F: Field>(a: &JJAlgebra<F>, fd: &FlagDatum<F>) -> bool {
    let k = a.field();
    let n = a.dim();
    let f4 = (0..n).all(|i| {
        let v = k.add(
            &k.mul(&three(k), &k.mul(&fd.lambda[i], &fd.alpha0)),
            &k.mul(&two(k), &k.dot(&fd.lambda, &fd.d.column(i))),
        );
        k.is_zero(&v)
    });
    let mut f5 = fd.d.apply(k, &fd.a0);
    k.axpy(&mut f5, &fd.alpha0, &fd.a0);
    let f6 = k.add(&k.dot(&fd.lambda, &fd.a0), &k.mul(&fd.alpha0, &fd.alpha0));
    f4 && k.vis_zero(&k.vscale(&three(k), &f5)) && k.is_zero(&k.mul(&three(k), &f6))
}

/// `ℱ(A)` by testing every raw quadruple, in key order.
pub fn enumerate_flag_data_naive<F: Field>(
    a: &JJAlgebra<F>,
    budget: &Budget,
) -> Result<Vec<FlagDatum<F>>> {
    let k = a.field();
    let q = k.require_finite("naive flag enumeration")?;
    let n = a.dim();
    let len = n * n + 2 * n + 1;
    let total = count_pow(q, len);
    budget.check("naive flag enumeration", total)?;
    let mut out = Vec::new();
    for idx in 0..total as u64 {
        let key: Vec<u64> = vector_from_index(k, len, idx)
            .iter()
            .map(|x| k.element_index(x).expect("finite"))
            .collect();
        let fd = FlagDatum::from_key(k, n, &key);
        if is_flag_datum(a, &fd) {
            out.push(fd);
        }
    }
    Ok(out)
}

/// Position of each datum, by key.
pub fn flag_index<F: Field>(k: &F, data: &[FlagDatum<F>]) -> BTreeMap<Vec<u64>, usize> {
    data.iter().enumerate().map(|(i, fd)| (fd.key(k), i)).collect()
}

/// Images of `data[i]` under every witness: pairs `(j, w)` with
/// `data[j] = apply_flag_witness(data[i], w)`, first witness per `j`.
pub fn orbit_edges<F: Field>(
    a: &JJAlgebra<F>,
    data: &[FlagDatum<F>],
    index: &BTreeMap<Vec<u64>, usize>,
    witnesses: &[FlagWitness<F>],
    i: usize,
) -> Result<Vec<(usize, FlagWitness<F>)>> {
    let k = a.field();
    let mut seen = BTreeMap::new();
    for w in witnesses {
        let image = apply_flag_witness(a, &data[i], w)?;
        let key = image.key(k);
        let j = *index.get(&key).ok_or_else(|| {
            Error::Invalid(format!(
                "datum {i} is carried outside the enumerated set; the input is not all of ℱ(A)"
            ))
        })?;
        seen.entry(j).or_insert_with(|| w.clone());
    }
    Ok(seen.into_iter().collect())
}

/// `data[datum] = apply_flag_witness(data[source], witness)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge<F: Field> {
    pub datum: usize,
    pub source: usize,
    pub witness: FlagWitness<F>,
}

/// No witness carries `data[source]` to `data[target]`; `candidates`
/// witnesses were tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inequivalence {
    pub target: usize,
    pub source: usize,
    pub candidates: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Index of the member with the least key.
    pub representative: usize,
    pub members: Vec<usize>,
}

/// The orbit decomposition of `ℱ(A)`.
#[derive(Clone, Debug)]
pub struct H2Result<F: Field> {
    pub a: JJAlgebra<F>,
    pub data: Vec<FlagDatum<F>>,
    /// Sorted by representative key.
    pub orbits: Vec<Orbit>,
    /// The union operations that built the partition.
    pub merges: Vec<Merge<F>>,
    /// One exhausted search per ordered pair of distinct representatives.
    pub certificates: Vec<Inequivalence>,
}

impl<F: Field> H2Result<F> {
    pub fn class_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    pub fn representatives(&self) -> Vec<&FlagDatum<F>> {
        self.orbits.iter().map(|o| &self.data[o.representative]).collect()
    }

    /// Orbit sizes sum to `|ℱ(A)|` and every datum lies in exactly one orbit.
    pub fn is_partition(&self) -> bool {
        let mut hit = alloc::vec![0usize; self.data.len()];
        for o in &self.orbits {
            for &m in &o.members {
                hit[m] += 1;
            }
        }
        self.orbit_sizes().iter().sum::<usize>() == self.data.len() && hit.iter().all(|&h| h == 1)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Builds the partition from precomputed [`orbit_edges`] (one list per datum)
/// and certifies every pair of representatives as inequivalent.
pub fn assemble_h2<F: Field>(
    a: &JJAlgebra<F>,
    data: Vec<FlagDatum<F>>,
    edges: Vec<Vec<(usize, FlagWitness<F>)>>,
) -> Result<H2Result<F>> {
    let k = a.field();
    check_dim("edge lists", data.len(), edges.len())?;
    let mut uf = UnionFind::new(data.len());
    let mut merges = Vec::new();
    for (i, list) in edges.into_iter().enumerate() {
        for (j, w) in list {
            if uf.union(i, j) {
                merges.push(Merge {
                    datum: j,
                    source: i,
                    witness: w,
                });
            }
        }
    }
    let keys: Vec<Vec<u64>> = data.iter().map(|fd| fd.key(k)).collect();
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..data.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut orbits: Vec<Orbit> = groups
        .into_values()
        .map(|members| {
            let representative = *members
                .iter()
                .min_by(|x, y| keys[**x].cmp(&keys[**y]))
                .expect("nonempty");
            Orbit {
                representative,
                members,
            }
        })
        .collect();
    orbits.sort_by(|x, y| keys[x.representative].cmp(&keys[y.representative]));
    let mut certificates = Vec::new();
    for x in &orbits {
        for y in &orbits {
            if x.representative == y.representative {
                continue;
            }
            let (found, tried) = find_flag_witness(a, &data[x.representative], &data[y.representative])?;
            if found.is_some() {
                return Err(Error::Invalid(
                    "two orbit representatives are equivalent; edge lists were incomplete".into(),
                ));
            }
            certificates.push(Inequivalence {
                target: x.representative,
                source: y.representative,
                candidates: tried,
            });
        }
    }
    Ok(H2Result {
        a: a.clone(),
        data,
        orbits,
        merges,
        certificates,
    })
}

/// `ℱ(A)` with the witness list and key index, ready for [`orbit_edges`].
#[derive(Clone, Debug)]
pub struct OrbitProblem<F: Field> {
    pub data: Vec<FlagDatum<F>>,
    pub witnesses: Vec<FlagWitness<F>>,
    pub index: BTreeMap<Vec<u64>, usize>,
}

impl<F: Field> OrbitProblem<F> {
    /// Enumerates `ℱ(A)` and checks the orbit computation against the budget.
    pub fn new(a: &JJAlgebra<F>, budget: &Budget) -> Result<Self> {
        let k = a.field();
        let q = k.require_finite("codimension-one classification")?;
        let data = enumerate_flag_data(a, budget)?;
        let work = (data.len() as u128)
            .saturating_mul(count_pow(q, a.dim()))
            .saturating_mul(q as u128 - 1);
        budget.check("orbit computation", work)?;
        let witnesses = all_flag_witnesses(k, a.dim())?;
        let index = flag_index(k, &data);
        Ok(OrbitProblem {
            data,
            witnesses,
            index,
        })
    }

    pub fn edges(&self, a: &JJAlgebra<F>, i: usize) -> Result<Vec<(usize, FlagWitness<F>)>> {
        orbit_edges(a, &self.data, &self.index, &self.witnesses, i)
    }
}

/// Orbits of `ℱ(A)` under all witnesses `(r, u)`.
pub fn classify_h2_codim1<F: Field>(a: &JJAlgebra<F>, budget: &Budget) -> Result<H2Result<F>> {
    let problem = OrbitProblem::new(a, budget)?;
    let edges = (0..problem.data.len())
        .map(|i| problem.edges(a, i))
        .collect::<Result<Vec<_>>>()?;
    assemble_h2(a, problem.data, edges)
}

fn require_char_not_2_3<F: Field>(k: &F, operation: &'static str) -> Result<()> {
    let c = k.characteristic();
    if c == 2 || c == 3 {
        return Err(Error::Characteristic {
            operation,
            requirement: "≠ 2, 3",
            found: c,
        });
    }
    Ok(())
}

/// The Heisenberg flag datum exactly as the classical parametrization reads:
/// `λ = 0`, `α₀ = 0`, `a₀ = αe₂`, `D(e₁) = βe₃`, `D(e₂) = γe₃`, `D(e₃) = 0`,
/// for triples with `αγ = 0`.
///
/// For `α ≠ 0` this datum fails (F3) at `e₁`, since `[e₁, a₀] = αe₃`; see
/// [`heisenberg_flag_datum`] for the family that does satisfy (F1)-(F6).
pub fn heisenberg_oracle<F: Field>(
    k: &F,
    alpha: &F::Elem,
    beta: &F::Elem,
    gamma: &F::Elem,
) -> Result<FlagDatum<F>> {
    require_char_not_2_3(k, "Heisenberg parametrization")?;
    if !k.is_zero(&k.mul(alpha, gamma)) {
        return Err(Error::Invalid("the parametrization requires αγ = 0".into()));
    }
    let mut fd = heisenberg_flag_datum(k, &k.zero(), beta, gamma);
    fd.a0 = alloc::vec![k.zero(), alpha.clone(), k.zero()];
    Ok(fd)
}

/// `λ = 0`, `α₀ = 0`, `a₀ = αe₃`, `D(e₁) = βe₃`, `D(e₂) = γe₃`, `D(e₃) = 0`.
/// Over a field of characteristic ≠ 2, 3 these are all the flag data of
/// `h(3)`, one for each triple.
pub fn heisenberg_flag_datum<F: Field>(
    k: &F,
    alpha: &F::Elem,
    beta: &F::Elem,
    gamma: &F::Elem,
) -> FlagDatum<F> {
    let mut fd = FlagDatum::zero(k, 3);
    fd.d.set(2, 0, beta.clone());
    fd.d.set(2, 1, gamma.clone());
    fd.a0[2] = alpha.clone();
    fd
}

/// `α − 2βγ`, which `(r, u)` scales by `u²`, for a datum of the form
/// produced by [`heisenberg_flag_datum`].
pub fn heisenberg_invariant<F: Field>(k: &F, fd: &FlagDatum<F>) -> F::Elem {
    let bg = k.mul(fd.d.get(2, 0), fd.d.get(2, 1));
    k.sub(&fd.a0[2], &k.mul(&two(k), &bg))
}

/// The flag datum `(D, 0, a₀, 0)` of an abelian algebra, for `D² = 0` and
/// `D(a₀) = 0`.
pub fn abelian_oracle<F: Field>(
    k: &F,
    d: &Matrix<F>,
    a0: &[F::Elem],
) -> Result<FlagDatum<F>> {
    require_char_not_2_3(k, "abelian parametrization")?;
    let n = a0.len();
    check_dim("D rows", n, d.rows())?;
    check_dim("D cols", n, d.cols())?;
    if !d.compose(k, d).is_zero(k) {
        return Err(Error::Invalid("D² must vanish".into()));
    }
    if !k.vis_zero(&d.apply(k, a0)) {
        return Err(Error::Invalid("D(a₀) must vanish".into()));
    }
    Ok(FlagDatum {
        d: d.clone(),
        lambda: k.zero_vec(n),
        a0: a0.to_vec(),
        alpha0: k.zero(),
    })
}

/// How two emitted algebras were shown to be non-isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distinction {
    Invariant(Invariant),
    Exhausted { candidates: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub left: usize,
    pub right: usize,
    pub distinction: Distinction,
}

/// Isomorphism-class representatives by dimension.
#[derive(Clone, Debug)]
pub struct RecursiveClassification<F: Field> {
    /// `levels[d]` lists representatives of dimension `d`.
    pub levels: Vec<Vec<JJAlgebra<F>>>,
    /// Non-isomorphism certificates for every pair within each level.
    pub certificates: Vec<Vec<PairCertificate>>,
    /// Whether the lists are claimed to be complete (characteristic ∉ {2, 3, 5}).
    pub complete: bool,
}

/// Starting from the zero algebra, extends every representative of
/// dimension `d` by each class of `ℱ(A)` and removes isomorphic duplicates.
pub fn recursive_classify<F: Field>(
    k: &F,
    target_dim: usize,
    iso_cap: usize,
    budget: &Budget,
) -> Result<RecursiveClassification<F>> {
    k.require_finite("recursive classification")?;
    let zero = JJAlgebra::new(k.clone(), BilinearMap::zero(k, 0, 0, 0))?;
    let mut levels = alloc::vec![alloc::vec![zero]];
    let mut certificates = alloc::vec![Vec::new()];
    for _ in 0..target_dim {
        let prev = levels.last().expect("nonempty");
        let mut candidates = Vec::new();
        for a in prev {
            let h2 = classify_h2_codim1(a, budget)?;
            for fd in h2.representatives() {
                candidates.push(flag_extension(a, fd)?);
            }
        }
        let (kept, certs) = dedup_isomorphic(candidates, iso_cap, budget)?;
        levels.push(kept);
        certificates.push(certs);
    }
    let c = k.characteristic();
    Ok(RecursiveClassification {
        levels,
        certificates,
        complete: !matches!(c, 2 | 3 | 5),
    })
}

/// Keeps the first algebra of each isomorphism class.
pub fn dedup_isomorphic<F: Field>(
    candidates: Vec<JJAlgebra<F>>,
    iso_cap: usize,
    budget: &Budget,
) -> Result<(Vec<JJAlgebra<F>>, Vec<PairCertificate>)> {
    let mut kept: Vec<JJAlgebra<F>> = Vec::new();
    let mut certs = Vec::new();
    for c in candidates {
        let mut pending = Vec::new();
        let mut duplicate = false;
        for (i, rep) in kept.iter().enumerate() {
            match is_isomorphic(rep, &c, iso_cap, budget)? {
                IsoOutcome::Found(_) => {
                    duplicate = true;
                    break;
                }
                IsoOutcome::Distinguished(inv) => pending.push(PairCertificate {
                    left: i,
                    right: kept.len(),
                    distinction: Distinction::Invariant(inv),
                }),
                IsoOutcome::Exhausted { candidates } => pending.push(PairCertificate {
                    left: i,
                    right: kept.len(),
                    distinction: Distinction::Exhausted { candidates },
                }),
            }
        }
        if !duplicate {
            certs.extend(pending);
            kept.push(c);
        }
    }
    Ok((kept, certs))
}
