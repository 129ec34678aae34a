//! Special cases of the unified product: bicrossed (matched pairs),
//! semidirect, crossed, supersolvable and skew crossed products, together
//! with factorization and the search for supersolvable chains.
//!
//! Every product is built by inducing an [`ExtendingDatum`] and calling
//! [`unified_product`], and every checker evaluates the matching
//! extending-structure conditions on the induced datum.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{
    abelian, antiderivation_failures, is_ideal, is_subalgebra, restrict_to_subalgebra, verify_jj,
    JJAlgebra,
};
use crate::enumerate::{count_pow, vector_from_index, Budget};
use crate::error::{check_dim, Error, Result};
use crate::extend::{
    canonical_datum_with_complement, cond_e1, cond_e2, cond_e3, cond_e4, cond_e5, cond_e6,
    cond_e7, unified_product, ExtendingDatum,
};
use crate::field::Field;
use crate::linalg::{in_span, BilinearMap, LinearMap, Matrix, Vector, VectorOps};
use crate::report::{Condition, Report};

fn jacobi_condition<F: Field>(v: &JJAlgebra<F>, name: &'static str) -> Condition {
    let r = verify_jj(v);
    let mut c = Condition::new(name);
    c.witnesses = r.commutative.witnesses;
    c.witnesses.extend(r.jacobi.witnesses);
    c
}

/// Two algebras with actions `◁: V x A -> V` and `▷: V x A -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair<F: Field> {
    pub a: JJAlgebra<F>,
    pub v: JJAlgebra<F>,
    pub left_act: BilinearMap<F>,
    pub right_act: BilinearMap<F>,
}

impl<F: Field> MatchedPair<F> {
    pub fn new(
        a: JJAlgebra<F>,
        v: JJAlgebra<F>,
        left_act: BilinearMap<F>,
        right_act: BilinearMap<F>,
    ) -> Result<Self> {
        a.same_field(&v)?;
        let mp = MatchedPair {
            a,
            v,
            left_act,
            right_act,
        };
        mp.datum()?;
        Ok(mp)
    }

    /// Both actions zero.
    pub fn trivial(a: JJAlgebra<F>, v: JJAlgebra<F>) -> Self {
        let k = a.field().clone();
        let (n, m) = (a.dim(), v.dim());
        MatchedPair {
            left_act: BilinearMap::zero(&k, m, n, m),
            right_act: BilinearMap::zero(&k, m, n, n),
            a,
            v,
        }
    }

    /// The extending datum with `f = 0` and brace the bracket of `V`.
    pub fn datum(&self) -> Result<ExtendingDatum<F>> {
        let k = self.a.field();
        let m = self.v.dim();
        ExtendingDatum::new(
            self.a.clone(),
            m,
            self.left_act.clone(),
            self.right_act.clone(),
            BilinearMap::zero(k, m, m, self.a.dim()),
            self.v.structure().clone(),
        )
    }
}

/// V right module, A left module, (MP1), (MP2), and the JJ axioms of `V`.
pub fn check_matched_pair<F: Field>(mp: &MatchedPair<F>) -> Result<Report> {
    let d = mp.datum()?;
    Ok(Report {
        conditions: alloc::vec![
            cond_e2(&d, "V right module"),
            cond_e5(&d, "A left module"),
            cond_e3(&d, "MP1"),
            cond_e4(&d, "MP2"),
            jacobi_condition(&mp.v, "V jacobi"),
        ],
    })
}

/// `A ⋈ V`; rejects pairs that fail [`check_matched_pair`].
pub fn bicrossed_product<F: Field>(mp: &MatchedPair<F>) -> Result<JJAlgebra<F>> {
    check_matched_pair(mp)?.into_result("matched pair")?;
    Ok(unified_product(&mp.datum()?))
}

/// The bicrossed product with `◁ = 0`, after checking that `▷` makes `A` a
/// left `V`-module by antiderivations.
pub fn semidirect_product<F: Field>(
    v: &JJAlgebra<F>,
    a: &JJAlgebra<F>,
    act: &BilinearMap<F>,
) -> Result<JJAlgebra<F>> {
    let (n, m) = (a.dim(), v.dim());
    let mut mp = MatchedPair::trivial(a.clone(), v.clone());
    let (l, r, t) = act.shape();
    check_dim("action module slot", m, l)?;
    check_dim("action algebra slot", n, r)?;
    check_dim("action target", n, t)?;
    mp.right_act = act.clone();
    let d = mp.datum()?;
    let report = Report {
        conditions: alloc::vec![
            cond_e5(&d, "A left module"),
            cond_e3(&d, "antiderivation"),
            jacobi_condition(v, "V jacobi"),
        ],
    };
    report.into_result("semidirect action")?;
    Ok(unified_product(&d))
}

/// Splits `E = A ⊕ V` along two complementary subalgebras into a matched
/// pair; also returns `φ(a, x) = a + x`.
pub fn factorize<F: Field>(
    e: &JJAlgebra<F>,
    a_basis: &Matrix<F>,
    v_basis: &Matrix<F>,
) -> Result<(MatchedPair<F>, Matrix<F>)> {
    let sub = is_subalgebra(e, v_basis)?;
    if !sub.passed() {
        return Err(Error::Unsatisfied {
            structure: "subalgebra V",
            failed: sub
                .witnesses
                .iter()
                .map(|w| format!("[v{}, v{}]", w[0] + 1, w[1] + 1))
                .collect(),
        });
    }
    let c = canonical_datum_with_complement(e, a_basis, v_basis)?;
    let k = e.field();
    if !c.datum.cocycle.is_zero(k) {
        return Err(Error::Invalid("cocycle of a factorization must vanish".into()));
    }
    let v = restrict_to_subalgebra(e, v_basis)?;
    debug_assert_eq!(v.structure(), &c.datum.brace);
    let mp = MatchedPair {
        a: c.datum.a,
        v,
        left_act: c.datum.left_act,
        right_act: c.datum.right_act,
    };
    Ok((mp, c.phi))
}

/// An action `▷: V x A -> A` and cocycle `f: V x V -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSystem<F: Field> {
    pub a: JJAlgebra<F>,
    pub v: JJAlgebra<F>,
    pub right_act: BilinearMap<F>,
    pub cocycle: BilinearMap<F>,
}

impl<F: Field> CrossedSystem<F> {
    pub fn zero(a: JJAlgebra<F>, v: JJAlgebra<F>) -> Self {
        let k = a.field().clone();
        let (n, m) = (a.dim(), v.dim());
        CrossedSystem {
            right_act: BilinearMap::zero(&k, m, n, n),
            cocycle: BilinearMap::zero(&k, m, m, n),
            a,
            v,
        }
    }

    pub fn datum(&self) -> Result<ExtendingDatum<F>> {
        self.a.same_field(&self.v)?;
        let k = self.a.field();
        let (n, m) = (self.a.dim(), self.v.dim());
        ExtendingDatum::new(
            self.a.clone(),
            m,
            BilinearMap::zero(k, m, n, m),
            self.right_act.clone(),
            self.cocycle.clone(),
            self.v.structure().clone(),
        )
    }
}

/// (CP1)-(CP4) plus the JJ axioms of `V`.
pub fn check_crossed_system<F: Field>(cs: &CrossedSystem<F>) -> Result<Report> {
    let d = cs.datum()?;
    let mut cp1 = Condition::new("CP1");
    for (x, y) in d.cocycle.asymmetric_pairs() {
        cp1.fail(&[x, y]);
    }
    Ok(Report {
        conditions: alloc::vec![
            cp1,
            cond_e3(&d, "CP2"),
            cond_e5(&d, "CP3"),
            cond_e6(&d, "CP4"),
            jacobi_condition(&cs.v, "V jacobi"),
        ],
    })
}

/// `A #_▷^f V`, in which `A` is an ideal.
pub fn crossed_product<F: Field>(cs: &CrossedSystem<F>) -> Result<JJAlgebra<F>> {
    check_crossed_system(cs)?.into_result("crossed system")?;
    Ok(unified_product(&cs.datum()?))
}

/// `(S1a)` antiderivation, `(S1b)` `3D(a₀) = 0`, `(S2)` `2D²(a) = −[a, a₀]`.
pub fn check_supersolvable_datum<F: Field>(
    a: &JJAlgebra<F>,
    d: &LinearMap<F>,
    a0: &[F::Elem],
) -> Result<Report> {
    let k = a.field();
    let n = a.dim();
    check_dim("D rows", n, d.rows())?;
    check_dim("D cols", n, d.cols())?;
    check_dim("a0 length", n, a0.len())?;
    let mut s1a = antiderivation_failures(a, d);
    s1a.name = "S1a";
    let mut s1b = Condition::new("S1b");
    if !k.vis_zero(&k.vscale(&k.from_i64(3), &d.apply(k, a0))) {
        s1b.fail(&[]);
    }
    let mut s2 = Condition::new("S2");
    let d2 = d.compose(k, d);
    for i in 0..n {
        let lhs = k.vscale(&k.from_i64(2), &d2.column(i));
        let rhs = k.vneg(&a.bracket(&a.unit(i), a0));
        if lhs != rhs {
            s2.fail(&[i]);
        }
    }
    Ok(Report {
        conditions: alloc::vec![s1a, s1b, s2],
    })
}

/// The crossed system on `V = kx` with `x ▷ a = D(a)`, `f(x, x) = a₀`.
pub fn supersolvable_system<F: Field>(
    a: &JJAlgebra<F>,
    d: &LinearMap<F>,
    a0: &[F::Elem],
) -> Result<CrossedSystem<F>> {
    let k = a.field();
    let n = a.dim();
    check_dim("D rows", n, d.rows())?;
    check_dim("D cols", n, d.cols())?;
    check_dim("a0 length", n, a0.len())?;
    let mut cs = CrossedSystem::zero(a.clone(), abelian(k.clone(), 1));
    for i in 0..n {
        cs.right_act.set(0, i, &d.column(i));
    }
    cs.cocycle.set(0, 0, a0);
    Ok(cs)
}

/// `[(a, x), (b, x)] = ([a, b] + D(a) + D(b) + a₀, 0)`; requires char ≠ 3.
pub fn supersolvable_extension<F: Field>(
    a: &JJAlgebra<F>,
    d: &LinearMap<F>,
    a0: &[F::Elem],
) -> Result<JJAlgebra<F>> {
    let k = a.field();
    if k.characteristic() == 3 {
        return Err(Error::Characteristic {
            operation: "supersolvable extension",
            requirement: "≠ 3",
            found: 3,
        });
    }
    check_supersolvable_datum(a, d, a0)?.into_result("supersolvable datum")?;
    crossed_product(&supersolvable_system(a, d, a0)?)
}

/// Which terms of a chain each `I_j` must be an ideal of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainReading {
    /// Every `I_j` is an ideal of `E`.
    IdealsOfWhole,
    /// Every `I_j` is an ideal of `I_{j+1}`.
    IdealsOfSuccessor,
}

/// A chain `0 = I_0 ⊂ I_1 ⊂ ... ⊂ I_n = E` of subspaces with codimension-one
/// steps, each given by a basis matrix, or `None` when none exists.
pub fn is_supersolvable<F: Field>(
    e: &JJAlgebra<F>,
    reading: ChainReading,
    budget: &Budget,
) -> Result<Option<Vec<Matrix<F>>>> {
    let k = e.field();
    let q = k.require_finite("supersolvable chain search")?;
    let r = verify_jj(e);
    if !r.passed() {
        return Err(Error::Unsatisfied {
            structure: "JJ algebra",
            failed: alloc::vec!["commutative or jacobi".into()],
        });
    }
    let mut visited = 0u64;
    let top = Matrix::identity(k, e.dim());
    let mut chain = alloc::vec![top.clone()];
    if chain_search(e, reading, q, &top, &mut chain, &mut visited, budget)? {
        chain.reverse();
        Ok(Some(chain))
    } else {
        Ok(None)
    }
}

/// Codimension-one subspaces of the column span of `w`, as kernels of
/// normalized functionals (first nonzero coefficient 1) on its coordinates.
fn hyperplanes<F: Field>(k: &F, w: &Matrix<F>, q: u64) -> Vec<Matrix<F>> {
    let d = w.cols();
    let mut out = Vec::new();
    for idx in 1..count_pow(q, d) as u64 {
        let phi: Vector<F> = vector_from_index(k, d, idx);
        let lead = phi.iter().position(|c| !k.is_zero(c)).expect("nonzero");
        if !k.is_one(&phi[lead]) {
            continue;
        }
        let row = Matrix::from_row_major(1, d, phi).expect("shape");
        let ker = row.kernel(k);
        out.push(w.compose(k, &ker));
    }
    out
}

fn chain_search<F: Field>(
    e: &JJAlgebra<F>,
    reading: ChainReading,
    q: u64,
    current: &Matrix<F>,
    chain: &mut Vec<Matrix<F>>,
    visited: &mut u64,
    budget: &Budget,
) -> Result<bool> {
    let k = e.field();
    if current.cols() == 0 {
        return Ok(true);
    }
    for h in hyperplanes(k, current, q) {
        *visited += 1;
        budget.check("supersolvable chain search", *visited as u128)?;
        let ok = match reading {
            ChainReading::IdealsOfWhole => is_ideal(e, &h)?.passed(),
            ChainReading::IdealsOfSuccessor => {
                let mut ok = true;
                'outer: for u in current.columns() {
                    for w in h.columns() {
                        if !in_span(k, &h, &e.bracket(&u, &w)) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                ok
            }
        };
        if !ok {
            continue;
        }
        chain.push(h.clone());
        if chain_search(e, reading, q, &h, chain, visited, budget)? {
            return Ok(true);
        }
        chain.pop();
    }
    Ok(false)
}

/// Checks that `chain` (from `0` up to `E`) has codimension-one steps and
/// consists of ideals under the given reading.
pub fn is_valid_chain<F: Field>(
    e: &JJAlgebra<F>,
    chain: &[Matrix<F>],
    reading: ChainReading,
) -> Result<bool> {
    let k = e.field();
    if chain.len() != e.dim() + 1 {
        return Ok(false);
    }
    for (j, w) in chain.iter().enumerate() {
        if w.rows() != e.dim() || w.rank(k) != j || w.cols() != j {
            return Ok(false);
        }
        if j > 0 {
            let prev = &chain[j - 1];
            if !prev.columns().iter().all(|c| in_span(k, w, c)) {
                return Ok(false);
            }
            let ideal = match reading {
                ChainReading::IdealsOfWhole => is_ideal(e, prev)?.passed(),
                ChainReading::IdealsOfSuccessor => w.columns().iter().all(|u| {
                    prev.columns()
                        .iter()
                        .all(|v| in_span(k, prev, &e.bracket(u, v)))
                }),
            };
            if !ideal {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `◁: V x A -> V`, cocycle and brace, with `▷ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCrossedSystem<F: Field> {
    pub a: JJAlgebra<F>,
    pub vdim: usize,
    pub left_act: BilinearMap<F>,
    pub cocycle: BilinearMap<F>,
    pub brace: BilinearMap<F>,
}

impl<F: Field> SkewCrossedSystem<F> {
    pub fn zero(a: JJAlgebra<F>, vdim: usize) -> Self {
        let d = ExtendingDatum::zero(a, vdim);
        SkewCrossedSystem {
            a: d.a,
            vdim,
            left_act: d.left_act,
            cocycle: d.cocycle,
            brace: d.brace,
        }
    }

    pub fn datum(&self) -> Result<ExtendingDatum<F>> {
        let k = self.a.field();
        let (n, m) = (self.a.dim(), self.vdim);
        ExtendingDatum::new(
            self.a.clone(),
            m,
            self.left_act.clone(),
            BilinearMap::zero(k, m, n, n),
            self.cocycle.clone(),
            self.brace.clone(),
        )
    }
}

/// (SC1)-(SC6).
pub fn check_skew_crossed<F: Field>(s: &SkewCrossedSystem<F>) -> Result<Report> {
    let d = s.datum()?;
    Ok(Report {
        conditions: alloc::vec![
            cond_e1(&d, "SC1"),
            cond_e2(&d, "SC2"),
            cond_e4(&d, "SC3"),
            cond_e5(&d, "SC4"),
            cond_e6(&d, "SC5"),
            cond_e7(&d, "SC6"),
        ],
    })
}

/// `A #• V`.
pub fn skew_crossed_product<F: Field>(s: &SkewCrossedSystem<F>) -> Result<JJAlgebra<F>> {
    check_skew_crossed(s)?.into_result("skew crossed system")?;
    Ok(unified_product(&s.datum()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, heisenberg3, is_ideal};
    use crate::extend::check_extending;
    use crate::field::PrimeField;
    use alloc::vec;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn span(k: &PrimeField, cols: &[Vec<u64>]) -> Matrix<PrimeField> {
        Matrix::from_columns(k, cols[0].len(), cols).unwrap()
    }

    #[test]
    fn trivial_matched_pair_is_direct_product() {
        let k = f5();
        let mp = MatchedPair::trivial(heisenberg3(k), abelian(k, 1));
        assert!(check_matched_pair(&mp).unwrap().passed());
        let e = bicrossed_product(&mp).unwrap();
        let direct = direct_product(&heisenberg3(k), &abelian(k, 1)).unwrap();
        assert_eq!(e.structure(), direct.structure());
        let mp2 = MatchedPair::trivial(abelian(k, 2), abelian(k, 1));
        assert!(bicrossed_product(&mp2).unwrap().is_abelian());
    }

    #[test]
    fn non_antiderivation_action_violates_mp1() {
        let k = f5();
        let h = heisenberg3(k);
        let mut mp = MatchedPair::trivial(h.clone(), abelian(k, 1));
        // x ▷ e1 = e1: x▷[e1,e2] = 0 while −[x▷e1,e2] − [e1,x▷e2] = −e3
        mp.right_act.set(0, 0, &[1, 0, 0]);
        let rep = check_matched_pair(&mp).unwrap();
        let mp1 = rep.get("MP1").unwrap();
        assert!(mp1.witnesses.contains(&vec![0, 0, 1]));
        assert!(bicrossed_product(&mp).is_err());
        // the adjoint map [e1, -] is an antiderivation, so it passes MP1
        let mut ad = MatchedPair::trivial(h.clone(), abelian(k, 1));
        for i in 0..3 {
            ad.right_act.set(0, i, h.basis_bracket(0, i));
        }
        assert!(check_matched_pair(&ad).unwrap().holds("MP1"));
    }

    #[test]
    fn semidirect_examples() {
        let k = f5();
        let v = abelian(k, 1);
        let mut bad = BilinearMap::zero(&k, 1, 1, 1);
        bad.set(0, 0, &[1]);
        let err = semidirect_product(&v, &abelian(k, 1), &bad).unwrap_err();
        assert!(matches!(err, Error::Unsatisfied { .. }));
        // x ▷ (a1, a2) = (a2, 0)
        let mut nil = BilinearMap::zero(&k, 1, 2, 2);
        nil.set(0, 1, &[1, 0]);
        let e = semidirect_product(&v, &abelian(k, 2), &nil).unwrap();
        assert!(verify_jj(&e).passed());
        let mut mp = MatchedPair::trivial(abelian(k, 2), v.clone());
        mp.right_act = nil.clone();
        assert_eq!(bicrossed_product(&mp).unwrap(), e);
        let zero = BilinearMap::zero(&k, 1, 2, 2);
        assert!(semidirect_product(&v, &abelian(k, 2), &zero).unwrap().is_abelian());
    }

    #[test]
    fn factorize_heisenberg() {
        let k = f5();
        let h = heisenberg3(k);
        let a = span(&k, &[vec![1, 0, 0], vec![0, 0, 1]]);
        let v = span(&k, &[vec![0, 1, 0]]);
        let (mp, phi) = factorize(&h, &a, &v).unwrap();
        assert!(mp.left_act.is_zero(&k));
        // e2 ▷ e1 = e3, in A-coordinates (e1, e3)
        assert_eq!(mp.right_act.get(0, 0), &[0, 1]);
        assert_eq!(mp.right_act.get(0, 1), &[0, 0]);
        let e = bicrossed_product(&mp).unwrap();
        assert!(crate::algebra::is_morphism(&e, &h, &phi).unwrap().passed());
        let a1 = span(&k, &[vec![1, 0, 0]]);
        assert!(factorize(&h, &a1, &v).is_err());
    }

    #[test]
    fn crossed_examples() {
        let k = f5();
        let cs = CrossedSystem::zero(heisenberg3(k), abelian(k, 2));
        assert!(check_crossed_system(&cs).unwrap().passed());
        let mut line = CrossedSystem::zero(abelian(k, 1), abelian(k, 1));
        line.cocycle.set(0, 0, &[1]);
        let e = crossed_product(&line).unwrap();
        assert!(verify_jj(&e).passed());
        assert_eq!(e.basis_bracket(1, 1), &[1, 0]);
        let ideal = span(&k, &[vec![1, 0]]);
        assert!(is_ideal(&e, &ideal).unwrap().passed());
    }

    #[test]
    fn crossed_from_heisenberg_ideal() {
        let k = f5();
        let h = heisenberg3(k);
        let a = span(&k, &[vec![0, 0, 1]]);
        let comp = span(&k, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let c = canonical_datum_with_complement(&h, &a, &comp).unwrap();
        assert!(c.datum.left_act.is_zero(&k));
        let cs = CrossedSystem {
            a: c.datum.a.clone(),
            v: JJAlgebra::new(k, c.datum.brace.clone()).unwrap(),
            right_act: c.datum.right_act.clone(),
            cocycle: c.datum.cocycle.clone(),
        };
        let e = crossed_product(&cs).unwrap();
        assert!(crate::algebra::is_morphism(&e, &h, &c.phi).unwrap().passed());
    }

    #[test]
    fn perturbed_supersolvable_fails_cp3() {
        let k = PrimeField::new(7).unwrap();
        let h = heisenberg3(k);
        let d = Matrix::zeros(&k, 3, 3);
        // a0 = e1 is not central: [e2, e1] = e3 ≠ −2D²(e2) = 0
        let cs = supersolvable_system(&h, &d, &[1, 0, 0]).unwrap();
        let rep = check_crossed_system(&cs).unwrap();
        assert!(!rep.holds("CP3"));
        assert!(rep.get("CP3").unwrap().witnesses.contains(&vec![0, 0, 1]));
    }

    #[test]
    fn supersolvable_examples() {
        let k = f5();
        let h = heisenberg3(k);
        let zero = Matrix::zeros(&k, 3, 3);
        assert!(check_supersolvable_datum(&h, &zero, &[0, 0, 1]).unwrap().passed());
        let e = supersolvable_extension(&h, &zero, &[0, 0, 1]).unwrap();
        assert_eq!(e.basis_bracket(3, 3), &[0, 0, 1, 0]);
        let ideal = span(&k, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        assert!(is_ideal(&e, &ideal).unwrap().passed());
        let ab = abelian(k, 2);
        let nil = Matrix::from_row_major(2, 2, vec![0, 1, 0, 0]).unwrap();
        assert!(check_supersolvable_datum(&ab, &nil, &[1, 0]).unwrap().passed());
        assert!(!check_supersolvable_datum(&ab, &nil, &[0, 1]).unwrap().passed());
        let f3 = PrimeField::new(3).unwrap();
        assert!(matches!(
            supersolvable_extension(&abelian(f3, 1), &Matrix::zeros(&f3, 1, 1), &[0]),
            Err(Error::Characteristic { .. })
        ));
    }

    #[test]
    fn supersolvable_chains() {
        let k = f5();
        let b = Budget::default();
        for reading in [ChainReading::IdealsOfWhole, ChainReading::IdealsOfSuccessor] {
            for e in [abelian(k, 3), heisenberg3(k)] {
                let chain = is_supersolvable(&e, reading, &b).unwrap().unwrap();
                assert!(is_valid_chain(&e, &chain, reading).unwrap());
            }
        }
        let h = heisenberg3(k);
        let center_chain = vec![
            Matrix::zeros(&k, 3, 0),
            span(&k, &[vec![0, 0, 1]]),
            span(&k, &[vec![0, 1, 0], vec![0, 0, 1]]),
            Matrix::identity(&k, 3),
        ];
        assert!(is_valid_chain(&h, &center_chain, ChainReading::IdealsOfWhole).unwrap());
        let mut bad = BilinearMap::zero(&k, 1, 1, 1);
        bad.set(0, 0, &[1]);
        let e = JJAlgebra::new(k, bad).unwrap();
        assert!(is_supersolvable(&e, ChainReading::IdealsOfWhole, &b).is_err());
    }

    #[test]
    fn skew_examples() {
        let k = f5();
        let s = SkewCrossedSystem::zero(heisenberg3(k), 2);
        assert!(check_skew_crossed(&s).unwrap().passed());
        let mut bad = SkewCrossedSystem::zero(abelian(k, 1), 2);
        bad.cocycle.set(0, 1, &[1]);
        let rep = check_skew_crossed(&bad).unwrap();
        assert!(!rep.holds("SC1"));
        assert!(skew_crossed_product(&bad).is_err());
    }

    #[test]
    fn specialized_checkers_agree_with_datum_checker() {
        let k = f5();
        let mut line = CrossedSystem::zero(abelian(k, 1), abelian(k, 1));
        line.cocycle.set(0, 0, &[2]);
        let d = line.datum().unwrap();
        assert_eq!(
            check_crossed_system(&line).unwrap().passed(),
            check_extending(&d).passed()
        );
    }
}
