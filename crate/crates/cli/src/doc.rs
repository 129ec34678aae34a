//! JSON interchange documents. Coefficients are strings (`"3"`, `"-1/2"`),
//! indices are 0-based, and symmetric maps store only entries with `i <= j`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use jjalg::algebra::verify_jj;
use jjalg::classify::FlagDatum;
use jjalg::extend::ExtendingDatum;
use jjalg::galois::{GaloisPair, GroupAction};
use jjalg::products::{CrossedSystem, MatchedPair, SkewCrossedSystem};
use jjalg::{BilinearMap, Budget, Field, FieldKind, JJAlgebra, Matrix, Vector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// `m(e_i, e_j) = Σ coeffs[t] e_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

pub type Rows = Vec<Vec<String>>;

/// A document given inline or as a path relative to the enclosing file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub format_version: u32,
    pub field: String,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub bracket: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDoc {
    pub format_version: u32,
    pub field: String,
    pub algebra: Ref<AlgebraDoc>,
    pub vdim: usize,
    /// `x ◁ a`, entries `(x, a)` with coefficients in `V`.
    #[serde(default)]
    pub left_act: Vec<Entry>,
    /// `x ▷ a`, entries `(x, a)` with coefficients in `A`.
    #[serde(default)]
    pub right_act: Vec<Entry>,
    #[serde(default)]
    pub cocycle: Vec<Entry>,
    #[serde(default)]
    pub brace: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub format_version: u32,
    pub field: String,
    pub a: Ref<AlgebraDoc>,
    pub v: Ref<AlgebraDoc>,
    #[serde(default)]
    pub left_act: Vec<Entry>,
    #[serde(default)]
    pub right_act: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedDoc {
    pub format_version: u32,
    pub field: String,
    pub a: Ref<AlgebraDoc>,
    pub v: Ref<AlgebraDoc>,
    #[serde(default)]
    pub right_act: Vec<Entry>,
    #[serde(default)]
    pub cocycle: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewDoc {
    pub format_version: u32,
    pub field: String,
    pub a: Ref<AlgebraDoc>,
    pub vdim: usize,
    #[serde(default)]
    pub left_act: Vec<Entry>,
    #[serde(default)]
    pub cocycle: Vec<Entry>,
    #[serde(default)]
    pub brace: Vec<Entry>,
}

/// `(D, λ, a₀, α₀)`; `λ` and `α₀` default to zero, so the same document
/// describes a supersolvable datum `(D, a₀)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagDoc {
    pub format_version: u32,
    pub field: String,
    pub algebra: Ref<AlgebraDoc>,
    pub d: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    pub a0: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha0: Option<String>,
}

/// Generators of a finite group of automorphisms of an algebra supplied
/// alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub format_version: u32,
    pub field: String,
    pub generators: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisPairDoc {
    pub format_version: u32,
    pub field: String,
    pub pair: Ref<PairDoc>,
    pub sigma: Rows,
    pub r: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub format_version: u32,
    pub field: String,
    pub rows: Rows,
}

/// How documents are turned into domain objects.
#[derive(Clone, Debug)]
pub struct Loader<F: Field> {
    pub k: F,
    /// Coefficients are read in `k` whatever field the documents declare.
    pub override_field: bool,
    /// Run `verify_jj` on every algebra read.
    pub checked: bool,
}

/// Reads any document type.
pub fn read_doc<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Deterministic rendering: sorted keys, two-space indentation.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let value = serde_json::to_value(doc)?;
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

pub fn write_doc<T: Serialize>(doc: &T, path: &Path) -> Result<()> {
    fs::write(path, to_json(doc)?).with_context(|| format!("writing {}", path.display()))
}

/// The `field` declared at the top of a document.
pub fn peek_field(path: &Path) -> Result<FieldKind> {
    #[derive(Deserialize)]
    struct Head {
        field: String,
    }
    let head: Head = read_doc(path)?;
    Ok(FieldKind::parse(&head.field)?)
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn resolve<T: DeserializeOwned + Clone>(r: &Ref<T>, base: &Path) -> Result<(T, PathBuf)> {
    match r {
        Ref::Inline(doc) => Ok(((**doc).clone(), base.to_path_buf())),
        Ref::Path(p) => {
            let path = base.join(p);
            Ok((read_doc(&path)?, base_dir(&path)))
        }
    }
}

impl<F: Field> Loader<F> {
    pub fn new(k: F) -> Self {
        Loader {
            k,
            override_field: false,
            checked: true,
        }
    }

    fn check_header(&self, version: u32, field: &str, what: &str) -> Result<()> {
        if version != FORMAT_VERSION {
            bail!("{what}: unsupported format_version {version}, expected {FORMAT_VERSION}");
        }
        let declared = FieldKind::parse(field).with_context(|| format!("{what}: field"))?;
        if !self.override_field && declared != self.k.kind() {
            bail!("{what}: field {declared} does not match {}", self.k.kind());
        }
        Ok(())
    }

    pub fn elem(&self, s: &str, what: &str) -> Result<F::Elem> {
        self.k.parse(s).with_context(|| format!("{what}: coefficient `{s}`"))
    }

    pub fn vector(&self, v: &[String], len: usize, what: &str) -> Result<Vector<F>> {
        if v.len() != len {
            bail!("{what}: expected {len} coefficients, found {}", v.len());
        }
        v.iter().map(|s| self.elem(s, what)).collect()
    }

    pub fn matrix(&self, rows: &Rows, shape: Option<(usize, usize)>, what: &str) -> Result<Matrix<F>> {
        let r = rows.len();
        let c = rows.first().map_or(shape.map_or(0, |s| s.1), Vec::len);
        if let Some((er, ec)) = shape {
            if (r, c) != (er, ec) {
                bail!("{what}: expected a {er} x {ec} matrix, found {r} x {c}");
            }
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            data.extend(self.vector(row, c, &format!("{what} row {i}"))?);
        }
        Ok(Matrix::from_row_major(r, c, data)?)
    }

    /// A bilinear map from entries; with `symmetric`, only `i <= j` is
    /// accepted and the transpose is filled in.
    pub fn tensor(
        &self,
        entries: &[Entry],
        shape: (usize, usize, usize),
        symmetric: bool,
        what: &str,
    ) -> Result<BilinearMap<F>> {
        let (l, r, t) = shape;
        let mut m = BilinearMap::zero(&self.k, l, r, t);
        let mut seen = BTreeSet::new();
        for (n, e) in entries.iter().enumerate() {
            let label = format!("{what} entry {n} (i = {}, j = {})", e.i, e.j);
            if e.i >= l || e.j >= r {
                bail!("{label}: index out of range for a {l} x {r} map");
            }
            if symmetric && e.i > e.j {
                bail!("{label}: only entries with i <= j are stored");
            }
            if !seen.insert((e.i, e.j)) {
                bail!("{label}: repeated entry");
            }
            let v = self.vector(&e.coeffs, t, &label)?;
            if symmetric {
                m.set_symmetric(e.i, e.j, &v);
            } else {
                m.set(e.i, e.j, &v);
            }
        }
        Ok(m)
    }

    pub fn algebra(&self, doc: &AlgebraDoc) -> Result<JJAlgebra<F>> {
        self.check_header(doc.format_version, &doc.field, "algebra")?;
        let n = doc.dim;
        let labels = if doc.basis.is_empty() {
            (1..=n).map(|i| format!("e{i}")).collect()
        } else if doc.basis.len() == n {
            doc.basis.clone()
        } else {
            bail!("algebra: {} basis names for dimension {n}", doc.basis.len());
        };
        let bracket = self.tensor(&doc.bracket, (n, n, n), true, "bracket")?;
        let a = JJAlgebra::with_labels(self.k.clone(), labels, bracket)?;
        if self.checked {
            let report = verify_jj(&a);
            if !report.passed() {
                let w = report
                    .jacobi
                    .witnesses
                    .first()
                    .or(report.commutative.witnesses.first())
                    .cloned()
                    .unwrap_or_default();
                bail!("algebra is not Jacobi-Jordan: the identity fails on basis indices {w:?}");
            }
        }
        Ok(a)
    }

    fn algebra_ref(&self, r: &Ref<AlgebraDoc>, base: &Path) -> Result<JJAlgebra<F>> {
        let (doc, _) = resolve(r, base)?;
        self.algebra(&doc)
    }

    pub fn load_algebra(&self, path: &Path) -> Result<JJAlgebra<F>> {
        self.algebra(&read_doc(path)?)
            .with_context(|| format!("in {}", path.display()))
    }

    pub fn datum(&self, doc: &DatumDoc, base: &Path) -> Result<ExtendingDatum<F>> {
        self.check_header(doc.format_version, &doc.field, "datum")?;
        let a = self.algebra_ref(&doc.algebra, base)?;
        let (n, m) = (a.dim(), doc.vdim);
        let left_act = self.tensor(&doc.left_act, (m, n, m), false, "left_act")?;
        let right_act = self.tensor(&doc.right_act, (m, n, n), false, "right_act")?;
        let cocycle = self.tensor(&doc.cocycle, (m, m, n), true, "cocycle")?;
        let brace = self.tensor(&doc.brace, (m, m, m), true, "brace")?;
        Ok(ExtendingDatum::new(a, m, left_act, right_act, cocycle, brace)?)
    }

    pub fn load_datum(&self, path: &Path) -> Result<ExtendingDatum<F>> {
        self.datum(&read_doc(path)?, &base_dir(path))
            .with_context(|| format!("in {}", path.display()))
    }

    pub fn pair(&self, doc: &PairDoc, base: &Path) -> Result<MatchedPair<F>> {
        self.check_header(doc.format_version, &doc.field, "matched pair")?;
        let a = self.algebra_ref(&doc.a, base)?;
        let v = self.algebra_ref(&doc.v, base)?;
        let (n, m) = (a.dim(), v.dim());
        let left_act = self.tensor(&doc.left_act, (m, n, m), false, "left_act")?;
        let right_act = self.tensor(&doc.right_act, (m, n, n), false, "right_act")?;
        Ok(MatchedPair::new(a, v, left_act, right_act)?)
    }

    pub fn load_pair(&self, path: &Path) -> Result<MatchedPair<F>> {
        self.pair(&read_doc(path)?, &base_dir(path))
            .with_context(|| format!("in {}", path.display()))
    }

    pub fn load_crossed(&self, path: &Path) -> Result<CrossedSystem<F>> {
        let doc: CrossedDoc = read_doc(path)?;
        let base = base_dir(path);
        let inner = || -> Result<CrossedSystem<F>> {
            self.check_header(doc.format_version, &doc.field, "crossed system")?;
            let a = self.algebra_ref(&doc.a, &base)?;
            let v = self.algebra_ref(&doc.v, &base)?;
            let (n, m) = (a.dim(), v.dim());
            let right_act = self.tensor(&doc.right_act, (m, n, n), false, "right_act")?;
            let cocycle = self.tensor(&doc.cocycle, (m, m, n), true, "cocycle")?;
            Ok(CrossedSystem {
                a,
                v,
                right_act,
                cocycle,
            })
        };
        inner().with_context(|| format!("in {}", path.display()))
    }

    pub fn load_skew(&self, path: &Path) -> Result<SkewCrossedSystem<F>> {
        let doc: SkewDoc = read_doc(path)?;
        let base = base_dir(path);
        let inner = || -> Result<SkewCrossedSystem<F>> {
            self.check_header(doc.format_version, &doc.field, "skew crossed system")?;
            let a = self.algebra_ref(&doc.a, &base)?;
            let (n, m) = (a.dim(), doc.vdim);
            let left_act = self.tensor(&doc.left_act, (m, n, m), false, "left_act")?;
            let cocycle = self.tensor(&doc.cocycle, (m, m, n), true, "cocycle")?;
            let brace = self.tensor(&doc.brace, (m, m, m), true, "brace")?;
            Ok(SkewCrossedSystem {
                a,
                vdim: m,
                left_act,
                cocycle,
                brace,
            })
        };
        inner().with_context(|| format!("in {}", path.display()))
    }

    pub fn load_flag(&self, path: &Path) -> Result<(JJAlgebra<F>, FlagDatum<F>)> {
        let doc: FlagDoc = read_doc(path)?;
        let base = base_dir(path);
        let inner = || -> Result<(JJAlgebra<F>, FlagDatum<F>)> {
            self.check_header(doc.format_version, &doc.field, "flag datum")?;
            let a = self.algebra_ref(&doc.algebra, &base)?;
            let n = a.dim();
            let d = self.matrix(&doc.d, Some((n, n)), "d")?;
            let lambda = match &doc.lambda {
                Some(l) => self.vector(l, n, "lambda")?,
                None => vec![self.k.zero(); n],
            };
            let a0 = self.vector(&doc.a0, n, "a0")?;
            let alpha0 = match &doc.alpha0 {
                Some(s) => self.elem(s, "alpha0")?,
                None => self.k.zero(),
            };
            Ok((
                a,
                FlagDatum {
                    d,
                    lambda,
                    a0,
                    alpha0,
                },
            ))
        };
        inner().with_context(|| format!("in {}", path.display()))
    }

    /// The group generated by the document's matrices, acting on `a`.
    pub fn load_action(
        &self,
        path: &Path,
        a: &JJAlgebra<F>,
        budget: &Budget,
    ) -> Result<(GroupAction<F>, Vec<Matrix<F>>)> {
        let doc: ActionDoc = read_doc(path)?;
        let inner = || -> Result<(GroupAction<F>, Vec<Matrix<F>>)> {
            self.check_header(doc.format_version, &doc.field, "action")?;
            let n = a.dim();
            let gens = doc
                .generators
                .iter()
                .enumerate()
                .map(|(i, g)| self.matrix(g, Some((n, n)), &format!("generator {i}")))
                .collect::<Result<Vec<_>>>()?;
            let action = GroupAction::generated(a.clone(), &gens, budget)?;
            Ok((action, gens))
        };
        inner().with_context(|| format!("in {}", path.display()))
    }

    pub fn load_galois_pair(&self, path: &Path) -> Result<(MatchedPair<F>, GaloisPair<F>)> {
        let doc: GaloisPairDoc = read_doc(path)?;
        let base = base_dir(path);
        let inner = || -> Result<(MatchedPair<F>, GaloisPair<F>)> {
            self.check_header(doc.format_version, &doc.field, "Galois pair")?;
            let (pd, pbase) = resolve(&doc.pair, &base)?;
            let mp = self.pair(&pd, &pbase)?;
            let (n, m) = (mp.a.dim(), mp.v.dim());
            let sigma = self.matrix(&doc.sigma, Some((m, m)), "sigma")?;
            let r = self.matrix(&doc.r, Some((n, m)), "r")?;
            Ok((mp, GaloisPair { sigma, r }))
        };
        inner().with_context(|| format!("in {}", path.display()))
    }

    pub fn load_matrix(&self, path: &Path, shape: Option<(usize, usize)>) -> Result<Matrix<F>> {
        let doc: MatrixDoc = read_doc(path)?;
        let inner = || -> Result<Matrix<F>> {
            self.check_header(doc.format_version, &doc.field, "matrix")?;
            self.matrix(&doc.rows, shape, "rows")
        };
        inner().with_context(|| format!("in {}", path.display()))
    }
}

pub fn elem_str<F: Field>(k: &F, x: &F::Elem) -> String {
    k.format(x)
}

pub fn vector_strs<F: Field>(k: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|x| k.format(x)).collect()
}

pub fn matrix_rows<F: Field>(k: &F, m: &Matrix<F>) -> Rows {
    (0..m.rows()).map(|i| vector_strs(k, m.row(i))).collect()
}

/// Nonzero entries in `(i, j)` order; `i <= j` only when `symmetric`.
pub fn tensor_entries<F: Field>(k: &F, m: &BilinearMap<F>, symmetric: bool) -> Vec<Entry> {
    let (l, r, _) = m.shape();
    let mut out = Vec::new();
    for i in 0..l {
        for j in 0..r {
            if symmetric && i > j {
                continue;
            }
            let v = m.get(i, j);
            if v.iter().all(|x| k.is_zero(x)) {
                continue;
            }
            out.push(Entry {
                i,
                j,
                coeffs: vector_strs(k, v),
            });
        }
    }
    out
}

fn field_name<F: Field>(k: &F) -> String {
    k.kind().to_string()
}

pub fn algebra_doc<F: Field>(a: &JJAlgebra<F>) -> AlgebraDoc {
    let k = a.field();
    AlgebraDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        dim: a.dim(),
        basis: a.basis_labels().to_vec(),
        bracket: tensor_entries(k, a.structure(), true),
    }
}

/// Asymmetric brackets cannot be stored; the lower triangle is dropped.
pub fn datum_doc<F: Field>(d: &ExtendingDatum<F>) -> Result<DatumDoc> {
    let k = d.field();
    if !d.cocycle.is_symmetric() || !d.brace.is_symmetric() {
        return Err(anyhow!("the cocycle and brace of a stored datum must be symmetric"));
    }
    Ok(DatumDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        algebra: Ref::Inline(Box::new(algebra_doc(&d.a))),
        vdim: d.vdim,
        left_act: tensor_entries(k, &d.left_act, false),
        right_act: tensor_entries(k, &d.right_act, false),
        cocycle: tensor_entries(k, &d.cocycle, true),
        brace: tensor_entries(k, &d.brace, true),
    })
}

pub fn pair_doc<F: Field>(mp: &MatchedPair<F>) -> PairDoc {
    let k = mp.a.field();
    PairDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        a: Ref::Inline(Box::new(algebra_doc(&mp.a))),
        v: Ref::Inline(Box::new(algebra_doc(&mp.v))),
        left_act: tensor_entries(k, &mp.left_act, false),
        right_act: tensor_entries(k, &mp.right_act, false),
    }
}

pub fn skew_doc<F: Field>(s: &SkewCrossedSystem<F>) -> SkewDoc {
    let k = s.a.field();
    SkewDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        a: Ref::Inline(Box::new(algebra_doc(&s.a))),
        vdim: s.vdim,
        left_act: tensor_entries(k, &s.left_act, false),
        cocycle: tensor_entries(k, &s.cocycle, true),
        brace: tensor_entries(k, &s.brace, true),
    }
}

pub fn flag_doc<F: Field>(a: &JJAlgebra<F>, fd: &FlagDatum<F>) -> FlagDoc {
    let k = a.field();
    FlagDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        algebra: Ref::Inline(Box::new(algebra_doc(a))),
        d: matrix_rows(k, &fd.d),
        lambda: Some(vector_strs(k, &fd.lambda)),
        a0: vector_strs(k, &fd.a0),
        alpha0: Some(k.format(&fd.alpha0)),
    }
}

pub fn matrix_doc<F: Field>(k: &F, m: &Matrix<F>) -> MatrixDoc {
    MatrixDoc {
        format_version: FORMAT_VERSION,
        field: field_name(k),
        rows: matrix_rows(k, m),
    }
}
