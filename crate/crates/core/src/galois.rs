//! Galois groups of bicrossed extensions and reconstruction of an algebra
//! from the invariants of a finite group of automorphisms.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::algebra::{is_morphism, JJAlgebra};
use crate::enumerate::{count_pow, enumerate_invertible, enumerate_matrices, gl_order, Budget};
use crate::error::{check_dim, Error, Result};
use crate::extend::{
    canonical_datum_with_complement, morphism_pair_report, unified_product, MorphismPair,
};
use crate::field::Field;
use crate::linalg::{same_span, LinearMap, Matrix, VectorOps};
use crate::products::{skew_crossed_product, MatchedPair, SkewCrossedSystem};
use crate::report::{Condition, Report};

/// `(σ, r)` with `σ: V -> V` invertible and `r: V -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisPair<F: Field> {
    pub sigma: LinearMap<F>,
    pub r: LinearMap<F>,
}

impl<F: Field> GaloisPair<F> {
    pub fn identity(k: &F, adim: usize, vdim: usize) -> Self {
        GaloisPair {
            sigma: Matrix::identity(k, vdim),
            r: Matrix::zeros(k, adim, vdim),
        }
    }

    /// `(σ, r)·(σ', r') = (σσ', rσ' + r')`
    pub fn compose(&self, k: &F, other: &Self) -> Self {
        GaloisPair {
            sigma: self.sigma.compose(k, &other.sigma),
            r: self.r.compose(k, &other.sigma).add(k, &other.r),
        }
    }

    /// `Ω(σ, r)(a, x) = (a + r(x), σ(x))`
    pub fn omega(&self, k: &F) -> Matrix<F> {
        self.as_morphism_pair().psi(k)
    }

    fn as_morphism_pair(&self) -> MorphismPair<F> {
        MorphismPair {
            r: self.r.clone(),
            v: self.sigma.clone(),
        }
    }

    fn key(&self) -> (Vec<F::Elem>, Vec<F::Elem>) {
        (self.sigma.data().to_vec(), self.r.data().to_vec())
    }
}

/// (G1)-(G4) for the matched pair. Witnesses: G1/G2 `(x, a)`, G3/G4 `(x, y)`.
pub fn check_galois_pair<F: Field>(mp: &MatchedPair<F>, pair: &GaloisPair<F>) -> Result<Report> {
    let k = mp.a.field();
    let (n, m) = (mp.a.dim(), mp.v.dim());
    check_dim("sigma rows", m, pair.sigma.rows())?;
    check_dim("sigma cols", m, pair.sigma.cols())?;
    check_dim("r rows", n, pair.r.rows())?;
    check_dim("r cols", m, pair.r.cols())?;
    if !pair.sigma.is_invertible(k) {
        return Err(Error::Singular("sigma"));
    }
    let d = mp.datum()?;
    Ok(morphism_pair_report(
        &d,
        &d,
        &pair.as_morphism_pair(),
        ["G1", "G2", "G3", "G4"],
    ))
}

/// The group of Galois pairs with its multiplication table and validation.
#[derive(Clone, Debug)]
pub struct GaloisGroup<F: Field> {
    pub matched_pair: MatchedPair<F>,
    pub elements: Vec<GaloisPair<F>>,
    /// `table[i][j]` is the index of `elements[i]·elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// closure, identity, inverses, associativity, automorphism, homomorphism
    pub validation: Report,
}

impl<F: Field> GaloisGroup<F> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// All Galois pairs, by filtering `GL(V) x Hom(V, A)`, with the group laws
/// and the isomorphism onto automorphisms of `A ⋈ V` fixing `A` verified.
pub fn enumerate_galois_group<F: Field>(
    mp: &MatchedPair<F>,
    budget: &Budget,
) -> Result<GaloisGroup<F>> {
    let k = mp.a.field();
    let q = k.require_finite("Galois group enumeration")?;
    let (n, m) = (mp.a.dim(), mp.v.dim());
    let total = gl_order(q, m).saturating_mul(count_pow(q, n * m));
    budget.check("Galois group enumeration", total)?;
    let unlimited = Budget::new(u64::MAX);
    let mut elements = Vec::new();
    for sigma in enumerate_invertible(k, m, &unlimited)? {
        for r in enumerate_matrices(k, n, m, &unlimited)? {
            let pair = GaloisPair {
                sigma: sigma.clone(),
                r,
            };
            if check_galois_pair(mp, &pair)?.passed() {
                elements.push(pair);
            }
        }
    }
    Ok(build_group(mp, elements))
}

fn build_group<F: Field>(mp: &MatchedPair<F>, elements: Vec<GaloisPair<F>>) -> GaloisGroup<F> {
    let k = mp.a.field();
    let (n, m) = (mp.a.dim(), mp.v.dim());
    let index: BTreeMap<_, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.key(), i))
        .collect();
    let size = elements.len();
    let mut closure = Condition::new("closure");
    let mut table = alloc::vec![alloc::vec![usize::MAX; size]; size];
    for i in 0..size {
        for j in 0..size {
            match index.get(&elements[i].compose(k, &elements[j]).key()) {
                Some(&t) => table[i][j] = t,
                None => closure.fail(&[i, j]),
            }
        }
    }
    let mut identity_cond = Condition::new("identity");
    let identity = index
        .get(&GaloisPair::identity(k, n, m).key())
        .copied()
        .unwrap_or(usize::MAX);
    if identity == usize::MAX {
        identity_cond.fail(&[]);
    } else {
        for i in 0..size {
            if table[identity][i] != i || table[i][identity] != i {
                identity_cond.fail(&[i]);
            }
        }
    }
    let mut inverses = Condition::new("inverses");
    for i in 0..size {
        if !(0..size).any(|j| table[i][j] == identity && table[j][i] == identity) {
            inverses.fail(&[i]);
        }
    }
    let mut assoc = Condition::new("associativity");
    if closure.passed() {
        for i in 0..size {
            for j in 0..size {
                for l in 0..size {
                    if table[table[i][j]][l] != table[i][table[j][l]] {
                        assoc.fail(&[i, j, l]);
                    }
                }
            }
        }
    } else {
        assoc.fail(&[]);
    }
    let mut auto = Condition::new("automorphism");
    let mut homo = Condition::new("homomorphism");
    let product = mp.datum().map(|d| unified_product(&d));
    let omegas: Vec<Matrix<F>> = elements.iter().map(|g| g.omega(k)).collect();
    match &product {
        Ok(e) => {
            let fixes_a = Matrix::identity(k, n).vconcat(&Matrix::zeros(k, m, n));
            for (i, w) in omegas.iter().enumerate() {
                let ok = w.is_invertible(k)
                    && w.column_block(0, n) == fixes_a
                    && is_morphism(e, e, w).map(|c| c.passed()).unwrap_or(false);
                if !ok {
                    auto.fail(&[i]);
                }
            }
        }
        Err(_) => auto.fail(&[]),
    }
    if closure.passed() {
        for i in 0..size {
            for j in 0..size {
                if omegas[i].compose(k, &omegas[j]) != omegas[table[i][j]] {
                    homo.fail(&[i, j]);
                }
            }
        }
    } else {
        homo.fail(&[]);
    }
    GaloisGroup {
        matched_pair: mp.clone(),
        elements,
        table,
        identity,
        validation: Report {
            conditions: alloc::vec![closure, identity_cond, inverses, assoc, auto, homo],
        },
    }
}

/// Automorphisms of `E = A ⋈ V` fixing the first `adim` coordinates, found by
/// filtering all of `GL(E)`.
pub fn brute_force_fixing_automorphisms<F: Field>(
    e: &JJAlgebra<F>,
    adim: usize,
    budget: &Budget,
) -> Result<Vec<Matrix<F>>> {
    let k = e.field();
    let dim = e.dim();
    let mut out = Vec::new();
    for g in enumerate_invertible(k, dim, budget)? {
        let fixes = (0..adim).all(|i| g.column(i) == k.unit_vec(dim, i));
        if fixes && is_morphism(e, e, &g)?.passed() {
            out.push(g);
        }
    }
    Ok(out)
}

/// A finite group of automorphisms of `A`, given by its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction<F: Field> {
    pub a: JJAlgebra<F>,
    pub elements: Vec<Matrix<F>>,
    /// `table[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl<F: Field> GroupAction<F> {
    /// Validates each element as an automorphism and the set as a group.
    pub fn new(a: JJAlgebra<F>, elements: Vec<Matrix<F>>) -> Result<Self> {
        let k = a.field().clone();
        let n = a.dim();
        for (i, g) in elements.iter().enumerate() {
            check_dim("group element rows", n, g.rows())?;
            check_dim("group element cols", n, g.cols())?;
            if !g.is_invertible(&k) {
                return Err(Error::Invalid(alloc::format!("element {i} is not invertible")));
            }
            let c = is_morphism(&a, &a, g)?;
            if !c.passed() {
                return Err(Error::Invalid(alloc::format!(
                    "element {i} does not preserve the bracket on basis pair {:?}",
                    c.witnesses[0]
                )));
            }
        }
        let index: BTreeMap<Vec<F::Elem>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.data().to_vec(), i))
            .collect();
        if index.len() != elements.len() {
            return Err(Error::Invalid("group elements repeat".into()));
        }
        let identity = *index
            .get(Matrix::identity(&k, n).data())
            .ok_or_else(|| Error::Invalid("identity is missing".into()))?;
        let mut table = Vec::with_capacity(elements.len());
        for g in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for h in &elements {
                let gh = g.compose(&k, h);
                let t = *index
                    .get(gh.data())
                    .ok_or_else(|| Error::Invalid("elements are not closed under composition".into()))?;
                row.push(t);
            }
            table.push(row);
        }
        Ok(GroupAction {
            a,
            elements,
            table,
            identity,
        })
    }

    /// The group generated by `generators` (closure under composition).
    pub fn generated(a: JJAlgebra<F>, generators: &[Matrix<F>], budget: &Budget) -> Result<Self> {
        let k = a.field().clone();
        let n = a.dim();
        let mut elements = alloc::vec![Matrix::identity(&k, n)];
        let mut seen = BTreeSet::new();
        seen.insert(elements[0].data().to_vec());
        let mut frontier = 0;
        while frontier < elements.len() {
            let g = elements[frontier].clone();
            frontier += 1;
            for s in generators {
                let h = g.compose(&k, s);
                if seen.insert(h.data().to_vec()) {
                    elements.push(h);
                    budget.check("group closure", elements.len() as u128)?;
                }
            }
        }
        GroupAction::new(a, elements)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The invariant subalgebra, the trace map and its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants<F: Field> {
    /// Basis of `A^G`.
    pub fixed: Matrix<F>,
    /// `t = |G|⁻¹ Σ g` as a map `A -> A`.
    pub trace: Matrix<F>,
    /// Basis of `ker t`.
    pub kernel: Matrix<F>,
}

/// Computes `A^G`, the trace and its kernel, and checks that `t` is a
/// retraction onto `A^G` with `t([x, a]) = [t(x), a]` for `a ∈ A^G`.
pub fn invariants_and_trace<F: Field>(action: &GroupAction<F>) -> Result<Invariants<F>> {
    let a = &action.a;
    let k = a.field();
    let n = a.dim();
    let order = action.order() as i64;
    if !k.int_is_unit(order) {
        return Err(Error::Characteristic {
            operation: "trace map",
            requirement: "not dividing the group order",
            found: k.characteristic(),
        });
    }
    let id = Matrix::identity(k, n);
    let mut stacked = Matrix::zeros(k, 0, n);
    for g in &action.elements {
        stacked = stacked.vconcat(&g.sub(k, &id));
    }
    let fixed = stacked.kernel(k);
    let mut sum = Matrix::zeros(k, n, n);
    for g in &action.elements {
        sum = sum.add(k, g);
    }
    let inv = k.inv(&k.from_i64(order)).expect("unit");
    let trace = sum.scale(k, &inv);
    let kernel = trace.kernel(k);
    for c in fixed.columns() {
        if trace.apply(k, &c) != c {
            return Err(Error::Invalid("trace does not fix the invariants".into()));
        }
    }
    if !same_span(k, &trace, &fixed) {
        return Err(Error::Invalid("trace image differs from the invariants".into()));
    }
    for i in 0..n {
        let x = a.unit(i);
        for c in fixed.columns() {
            if trace.apply(k, &a.bracket(&x, &c)) != a.bracket(&trace.apply(k, &x), &c) {
                return Err(Error::Invalid("trace is not A^G-linear".into()));
            }
        }
    }
    Ok(Invariants {
        fixed,
        trace,
        kernel,
    })
}

/// The skew crossed system on `A^G` through `ker t`, with `θ(a, x) = a + x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinReconstruction<F: Field> {
    pub invariants: Invariants<F>,
    pub system: SkewCrossedSystem<F>,
    pub theta: Matrix<F>,
}

/// Rebuilds `A` as a skew crossed product of `A^G` and `ker t`; `θ` is
/// verified to be an isomorphism stabilizing `A^G`.
pub fn artin_reconstruct<F: Field>(action: &GroupAction<F>) -> Result<ArtinReconstruction<F>> {
    let inv = invariants_and_trace(action)?;
    let a = &action.a;
    let k = a.field();
    let c = canonical_datum_with_complement(a, &inv.fixed, &inv.kernel)?;
    if !c.datum.right_act.is_zero(k) {
        return Err(Error::Invalid("the trace datum has a nonzero ▷".into()));
    }
    let system = SkewCrossedSystem {
        a: c.datum.a.clone(),
        vdim: c.datum.vdim,
        left_act: c.datum.left_act.clone(),
        cocycle: c.datum.cocycle.clone(),
        brace: c.datum.brace.clone(),
    };
    let product = skew_crossed_product(&system)?;
    let theta = c.phi;
    if !theta.is_invertible(k) || !is_morphism(&product, a, &theta)?.passed() {
        return Err(Error::Invalid("θ is not an isomorphism".into()));
    }
    Ok(ArtinReconstruction {
        invariants: inv,
        system,
        theta,
    })
}

/// For a group generated by `elements[generator]`, compares `ker t` with the
/// image of `I - g`.
pub fn cyclic_kernel_check<F: Field>(action: &GroupAction<F>, generator: usize) -> Result<bool> {
    let k = action.a.field();
    let n = action.a.dim();
    let g = action
        .elements
        .get(generator)
        .ok_or_else(|| Error::Invalid("generator index out of range".into()))?;
    let mut power = action.identity;
    let mut seen = alloc::vec![false; action.order()];
    loop {
        if seen[power] {
            break;
        }
        seen[power] = true;
        power = action.table[power][generator];
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Invalid("the group is not generated by this element".into()));
    }
    let inv = invariants_and_trace(action)?;
    let image = Matrix::identity(k, n).sub(k, g).column_space(k);
    Ok(same_span(k, &inv.kernel, &image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, heisenberg3, verify_jj};
    use crate::field::PrimeField;
    use alloc::vec;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn z2_on_heisenberg() -> GroupAction<PrimeField> {
        let k = f5();
        let g = Matrix::from_row_major(3, 3, vec![4, 0, 0, 0, 4, 0, 0, 0, 1]).unwrap();
        GroupAction::generated(heisenberg3(k), &[g], &Budget::default()).unwrap()
    }

    #[test]
    fn identity_pair_always_passes() {
        let k = f5();
        let mp = MatchedPair::trivial(heisenberg3(k), abelian(k, 1));
        let id = GaloisPair::identity(&k, 3, 1);
        assert!(check_galois_pair(&mp, &id).unwrap().passed());
        let singular = GaloisPair {
            sigma: Matrix::zeros(&k, 1, 1),
            r: Matrix::zeros(&k, 3, 1),
        };
        assert!(check_galois_pair(&mp, &singular).is_err());
    }

    #[test]
    fn heisenberg_pairs_need_central_r() {
        let k = f5();
        let mp = MatchedPair::trivial(heisenberg3(k), abelian(k, 1));
        let central = GaloisPair {
            sigma: Matrix::from_row_major(1, 1, vec![3]).unwrap(),
            r: Matrix::from_row_major(3, 1, vec![0, 0, 2]).unwrap(),
        };
        assert!(check_galois_pair(&mp, &central).unwrap().passed());
        let off = GaloisPair {
            sigma: Matrix::identity(&k, 1),
            r: Matrix::from_row_major(3, 1, vec![1, 0, 0]).unwrap(),
        };
        let rep = check_galois_pair(&mp, &off).unwrap();
        assert!(!rep.holds("G2"));
    }

    #[test]
    fn galois_group_orders() {
        let k = f5();
        let b = Budget::default();
        let ab = enumerate_galois_group(&MatchedPair::trivial(abelian(k, 2), abelian(k, 1)), &b)
            .unwrap();
        assert_eq!(ab.order(), 100);
        assert!(ab.validation.passed());
        let h = enumerate_galois_group(&MatchedPair::trivial(heisenberg3(k), abelian(k, 1)), &b)
            .unwrap();
        assert_eq!(h.order(), 20);
        assert!(h.validation.passed());
    }

    #[test]
    fn galois_group_matches_brute_force_over_f3() {
        let k = PrimeField::new(3).unwrap();
        let b = Budget::default();
        let mp = MatchedPair::trivial(abelian(k, 2), abelian(k, 1));
        let g = enumerate_galois_group(&mp, &b).unwrap();
        let e = unified_product(&mp.datum().unwrap());
        let mut brute: Vec<_> = brute_force_fixing_automorphisms(&e, 2, &b)
            .unwrap()
            .into_iter()
            .map(|m| m.data().to_vec())
            .collect();
        let mut ours: Vec<_> = g.elements.iter().map(|p| p.omega(&k).data().to_vec()).collect();
        brute.sort();
        ours.sort();
        assert_eq!(ours, brute);
        assert_eq!(ours.len(), 2 * 9);
    }

    #[test]
    fn trivial_group_invariants() {
        let k = f5();
        let act = GroupAction::new(heisenberg3(k), vec![Matrix::identity(&k, 3)]).unwrap();
        let inv = invariants_and_trace(&act).unwrap();
        assert_eq!(inv.fixed.cols(), 3);
        assert_eq!(inv.trace, Matrix::identity(&k, 3));
        assert_eq!(inv.kernel.cols(), 0);
        let art = artin_reconstruct(&act).unwrap();
        assert_eq!(art.system.vdim, 0);
        assert_eq!(art.theta, Matrix::identity(&k, 3));
    }

    #[test]
    fn z2_on_heisenberg_reconstruction() {
        let k = f5();
        let act = z2_on_heisenberg();
        assert_eq!(act.order(), 2);
        let inv = invariants_and_trace(&act).unwrap();
        assert_eq!(inv.fixed.columns(), vec![vec![0, 0, 1]]);
        let expect_t = Matrix::from_row_major(3, 3, vec![0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(inv.trace, expect_t);
        assert!(same_span(
            &k,
            &inv.kernel,
            &Matrix::from_columns(&k, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
        ));
        let art = artin_reconstruct(&act).unwrap();
        assert!(art.system.brace.is_zero(&k));
        assert!(art.system.left_act.is_zero(&k));
        assert_eq!(art.system.cocycle.get(0, 1), &[1]);
        assert!(cyclic_kernel_check(&act, 1).unwrap());
    }

    #[test]
    fn swap_on_abelian_plane() {
        let k = f5();
        let swap = Matrix::from_row_major(2, 2, vec![0, 1, 1, 0]).unwrap();
        let act = GroupAction::generated(abelian(k, 2), &[swap], &Budget::default()).unwrap();
        let art = artin_reconstruct(&act).unwrap();
        assert!(same_span(
            &k,
            &art.invariants.fixed,
            &Matrix::from_columns(&k, 2, &[vec![1, 1]]).unwrap()
        ));
        assert!(same_span(
            &k,
            &art.invariants.kernel,
            &Matrix::from_columns(&k, 2, &[vec![1, 4]]).unwrap()
        ));
        assert!(art.system.cocycle.is_zero(&k) && art.system.brace.is_zero(&k));
        assert!(verify_jj(&skew_crossed_product(&art.system).unwrap()).passed());
    }

    #[test]
    fn group_action_rejects_non_automorphisms() {
        let k = f5();
        let g = Matrix::from_row_major(3, 3, vec![2, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap();
        assert!(GroupAction::generated(heisenberg3(k), &[g], &Budget::default()).is_err());
        let f2 = PrimeField::new(2).unwrap();
        let swap = Matrix::from_row_major(2, 2, vec![0, 1, 1, 0]).unwrap();
        let act = GroupAction::generated(abelian(f2, 2), &[swap], &Budget::default()).unwrap();
        assert!(matches!(invariants_and_trace(&act), Err(Error::Characteristic { .. })));
    }
}
