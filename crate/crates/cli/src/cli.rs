//! Command-line surface: argument parsing, field dispatch and exit codes.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use jjalg::algebra::{abelian, heisenberg3, is_morphism, square_zero_line, verify_jj};
use jjalg::classify::{
    assemble_h2, check_flag_datum, enumerate_flag_data, flag_extension, recursive_classify,
    Distinction, OrbitProblem,
};
use jjalg::enumerate::DEFAULT_BUDGET;
use jjalg::extend::{canonical_datum, check_extending, unified_product};
use jjalg::galois::{
    artin_reconstruct, check_galois_pair, cyclic_kernel_check, enumerate_galois_group,
};
use jjalg::linalg::{in_span, projection_along};
use jjalg::products::{
    bicrossed_product, check_crossed_system, check_matched_pair, check_skew_crossed,
    check_supersolvable_datum, crossed_product, semidirect_product, skew_crossed_product,
};
use jjalg::random::random_datum;
use jjalg::{Budget, Field, FieldKind, JJAlgebra, Matrix, PrimeField, Rationals, Report, VectorOps};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::doc::{
    algebra_doc, datum_doc, matrix_rows, peek_field, skew_doc, to_json,
    vector_strs, write_doc, Loader,
};
use crate::render::{flag_json, flag_text, report_json, report_text, rows_text, verdict, Output};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "jjalg", version, about = "Jacobi-Jordan algebras: extensions, products and classification")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub output: Format,
    /// Largest search space an exhaustive command may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads for enumeration-backed commands.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled modes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Skip the Jacobi-Jordan check on algebras read from documents.
    #[arg(long, global = true)]
    pub unchecked: bool,
    /// Read every coefficient in this field (`Q` or `F<p>`).
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check commutativity and the Jacobi identity.
    Verify { algebra: PathBuf },
    /// Build a product algebra and verify it.
    Product {
        #[command(subcommand)]
        kind: ProductKind,
        /// Also write the algebra document here.
        #[arg(long, global = true)]
        save: Option<PathBuf>,
    },
    /// Report the defining conditions one by one, with witnesses.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// The datum of an extension `A ⊆ E` for a retraction `E -> A`.
    CanonicalDatum {
        algebra: PathBuf,
        /// Matrix whose columns span `A`.
        a_basis: PathBuf,
        /// Matrix of the retraction `p: E -> A` in the coordinates of `a_basis`.
        #[arg(long, conflicts_with = "complement")]
        projection: Option<PathBuf>,
        /// Matrix whose columns span the complement `V = ker p`.
        #[arg(long)]
        complement: Option<PathBuf>,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
    Classify {
        #[command(subcommand)]
        kind: ClassifyKind,
    },
    /// The Galois group of a matched pair.
    Galois {
        pair: PathBuf,
        /// Include the multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// Invariants, trace and the skew crossed reconstruction of an algebra.
    Artin { algebra: PathBuf, action: PathBuf },
    /// Write a stock algebra document.
    Stock {
        #[arg(value_enum)]
        name: StockName,
        /// Dimension of the abelian algebra.
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Sampled property checks.
    Sample {
        #[command(subcommand)]
        kind: SampleKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProductKind {
    Unified { datum: PathBuf },
    Bicrossed { pair: PathBuf },
    Crossed { system: PathBuf },
    Skew { system: PathBuf },
    /// A matched-pair document whose `left_act` is empty.
    Semidirect { pair: PathBuf },
    Flag { datum: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CheckKind {
    Datum { datum: PathBuf },
    Matched { pair: PathBuf },
    Crossed { system: PathBuf },
    Skew { system: PathBuf },
    /// A flag document read as `(D, a₀)`.
    Supersolvable { datum: PathBuf },
    Flag { datum: PathBuf },
    GaloisPair { pair: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum EnumerateKind {
    Flag { algebra: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ClassifyKind {
    /// Orbits of the flag data of an algebra.
    H2 { algebra: PathBuf },
    /// All algebras up to a dimension, by repeated codimension-one extension.
    All {
        #[arg(long)]
        dim: usize,
        /// Largest dimension for isomorphism search.
        #[arg(long, default_value_t = 3)]
        iso_cap: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SampleKind {
    /// Compare the extending conditions with the Jacobi-Jordan check of the
    /// unified product on random data.
    Extending {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_adim: usize,
        #[arg(long, default_value_t = 2)]
        max_vdim: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StockName {
    Abelian,
    Heisenberg,
    SquareZero,
}

/// Runs the command and prints its output; returns the exit code.
pub fn main_with(cli: Cli) -> i32 {
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    }
    match dispatch(&cli) {
        Ok(out) => {
            match cli.output {
                Format::Json => match serde_json::to_string_pretty(&out.json) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_INPUT;
                    }
                },
                Format::Text => print!("{}", out.text),
            }
            if out.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_budget(&e) {
                EXIT_BUDGET
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn is_budget(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| c.downcast_ref::<jjalg::Error>().is_some_and(jjalg::Error::is_budget))
}

/// The document that fixes the field when `--field` is absent.
fn primary_document(cmd: &Command) -> Option<&Path> {
    Some(match cmd {
        Command::Verify { algebra } => algebra,
        Command::Product { kind, .. } => match kind {
            ProductKind::Unified { datum } | ProductKind::Flag { datum } => datum,
            ProductKind::Bicrossed { pair } | ProductKind::Semidirect { pair } => pair,
            ProductKind::Crossed { system } | ProductKind::Skew { system } => system,
        },
        Command::Check { kind } => match kind {
            CheckKind::Datum { datum } | CheckKind::Supersolvable { datum } | CheckKind::Flag { datum } => datum,
            CheckKind::Matched { pair } | CheckKind::GaloisPair { pair } => pair,
            CheckKind::Crossed { system } | CheckKind::Skew { system } => system,
        },
        Command::CanonicalDatum { algebra, .. } => algebra,
        Command::Enumerate { kind: EnumerateKind::Flag { algebra } } => algebra,
        Command::Classify { kind: ClassifyKind::H2 { algebra } } => algebra,
        Command::Galois { pair, .. } => pair,
        Command::Artin { algebra, .. } => algebra,
        Command::Classify { kind: ClassifyKind::All { .. } }
        | Command::Stock { .. }
        | Command::Sample { .. } => return None,
    })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let (kind, overridden) = match &cli.field {
        Some(f) => (FieldKind::parse(f)?, true),
        None => match primary_document(&cli.command) {
            Some(p) => (peek_field(p)?, false),
            None => bail!("this command needs --field (Q or F<p>)"),
        },
    };
    match kind {
        FieldKind::Rationals => exec(cli, Rationals, overridden),
        FieldKind::Prime(p) => exec(cli, PrimeField::new(p)?, overridden),
    }
}

fn exec<F: Field>(cli: &Cli, k: F, overridden: bool) -> Result<Output> {
    let budget = Budget::new(cli.budget);
    let mut loader = Loader::new(k.clone());
    loader.override_field = overridden;
    loader.checked = !cli.unchecked;
    match &cli.command {
        Command::Verify { algebra } => {
            loader.checked = false;
            let a = loader.load_algebra(algebra)?;
            let r = verify_jj(&a).into_report();
            Ok(Output {
                json: json!({ "dim": a.dim(), "field": k.kind().to_string(), "report": report_json(&r) }),
                text: report_text(&format!("JJ algebra of dimension {} over {}", a.dim(), k.kind()), &r),
                passed: r.passed(),
            })
        }
        Command::Product { kind, save } => product(&loader, kind, save.as_deref()),
        Command::Check { kind } => check(&loader, kind),
        Command::CanonicalDatum {
            algebra,
            a_basis,
            projection,
            complement,
            save,
        } => {
            let e = loader.load_algebra(algebra)?;
            let basis = loader.load_matrix(a_basis, None)?;
            if basis.rows() != e.dim() {
                bail!("the A-basis has {} rows, the algebra has dimension {}", basis.rows(), e.dim());
            }
            let p = match (projection, complement) {
                (Some(p), _) => loader.load_matrix(p, Some((basis.cols(), e.dim())))?,
                (None, Some(c)) => {
                    let c = loader.load_matrix(c, Some((e.dim(), e.dim() - basis.cols())))?;
                    projection_along(&k, &basis, &c)?
                }
                (None, None) => projection_along(&k, &basis, &coordinate_complement(&k, &basis))?,
            };
            let cd = canonical_datum(&e, &basis, &p)?;
            let r = check_extending(&cd.datum);
            let doc = datum_doc(&cd.datum)?;
            if let Some(path) = save {
                write_doc(&doc, path)?;
            }
            Ok(Output {
                json: json!({
                    "datum": serde_json::to_value(&doc)?,
                    "phi": matrix_rows(&k, &cd.phi),
                    "complement": matrix_rows(&k, &cd.complement),
                    "report": report_json(&r),
                }),
                text: format!(
                    "{}{}φ(a, x) = a + x: {}\n",
                    to_json(&doc)?,
                    report_text("extending conditions", &r),
                    rows_text(&matrix_rows(&k, &cd.phi))
                ),
                passed: r.passed(),
            })
        }
        Command::Enumerate {
            kind: EnumerateKind::Flag { algebra },
        } => {
            let a = loader.load_algebra(algebra)?;
            let data = enumerate_flag_data(&a, &budget)?;
            let mut text = format!("{} flag data\n", data.len());
            for fd in &data {
                text.push_str(&flag_text(&k, fd));
                text.push('\n');
            }
            Ok(Output {
                json: json!({
                    "count": data.len(),
                    "data": data.iter().map(|fd| flag_json(&k, fd)).collect::<Vec<_>>(),
                }),
                text,
                passed: true,
            })
        }
        Command::Classify { kind } => classify(&loader, kind, &budget),
        Command::Galois { pair, table } => {
            let mp = loader.load_pair(pair)?;
            let g = enumerate_galois_group(&mp, &budget)?;
            let elements: Vec<Value> = g
                .elements
                .iter()
                .map(|x| json!({ "sigma": matrix_rows(&k, &x.sigma), "r": matrix_rows(&k, &x.r) }))
                .collect();
            let mut json = json!({
                "order": g.order(),
                "identity": g.identity,
                "elements": elements,
                "validation": report_json(&g.validation),
            });
            if *table {
                json["table"] = json!(g.table);
            }
            let mut text = format!("Galois group of order {}\n", g.order());
            text.push_str(&report_text("group laws and Ω", &g.validation));
            Ok(Output {
                json,
                text,
                passed: g.validation.passed(),
            })
        }
        Command::Artin { algebra, action } => {
            let a = loader.load_algebra(algebra)?;
            let (action, gens) = loader.load_action(action, &a, &budget)?;
            let r = artin_reconstruct(&action)?;
            let cyclic = match gens.as_slice() {
                [g] => {
                    let idx = action.elements.iter().position(|x| x == g).expect("generator");
                    Some(cyclic_kernel_check(&action, idx)?)
                }
                _ => None,
            };
            let inv = &r.invariants;
            let cols = |m: &Matrix<F>| m.columns().iter().map(|c| vector_strs(&k, c)).collect::<Vec<_>>();
            let system = skew_doc(&r.system);
            let product = skew_crossed_product(&r.system)?;
            let theta_ok = r.theta.is_invertible(&k) && is_morphism(&product, &a, &r.theta)?.passed();
            let passed = theta_ok && cyclic.unwrap_or(true);
            Ok(Output {
                json: json!({
                    "order": action.order(),
                    "fixed_basis": cols(&inv.fixed),
                    "trace": matrix_rows(&k, &inv.trace),
                    "kernel_basis": cols(&inv.kernel),
                    "system": serde_json::to_value(&system)?,
                    "theta": matrix_rows(&k, &r.theta),
                    "theta_isomorphism": theta_ok,
                    "kernel_is_image_of_one_minus_g": cyclic,
                }),
                text: format!(
                    "|G| = {}\nA^G basis: {:?}\ntrace: {}\nker t basis: {:?}\nθ = {}, isomorphism: {}\n{}",
                    action.order(),
                    cols(&inv.fixed),
                    rows_text(&matrix_rows(&k, &inv.trace)),
                    cols(&inv.kernel),
                    rows_text(&matrix_rows(&k, &r.theta)),
                    verdict(theta_ok),
                    match cyclic {
                        Some(c) => format!("ker t = im(1 - g): {}\n", verdict(c)),
                        None => String::new(),
                    }
                ),
                passed,
            })
        }
        Command::Stock { name, dim, save } => {
            let a = match name {
                StockName::Abelian => abelian(k.clone(), *dim),
                StockName::Heisenberg => heisenberg3(k.clone()),
                StockName::SquareZero => square_zero_line(k.clone()),
            };
            algebra_output(&a, None, save.as_deref())
        }
        Command::Sample {
            kind: SampleKind::Extending {
                count,
                max_adim,
                max_vdim,
            },
        } => sample_extending(&k, cli.seed, *count, *max_adim, *max_vdim),
    }
}

/// Unit vectors completing the columns of `basis` to a basis.
fn coordinate_complement<F: Field>(k: &F, basis: &Matrix<F>) -> Matrix<F> {
    let n = basis.rows();
    let mut span = basis.clone();
    let mut picked = Vec::new();
    for i in 0..n {
        let e = k.unit_vec(n, i);
        if !in_span(k, &span, &e) {
            span = span.hconcat(k, &Matrix::from_columns(k, n, std::slice::from_ref(&e)).expect("shape"));
            picked.push(e);
        }
    }
    Matrix::from_columns(k, n, &picked).expect("shape")
}

fn algebra_output<F: Field>(a: &JJAlgebra<F>, checks: Option<Report>, save: Option<&Path>) -> Result<Output> {
    let doc = algebra_doc(a);
    if let Some(path) = save {
        write_doc(&doc, path)?;
    }
    let jj = verify_jj(a).into_report();
    let mut report = checks.unwrap_or_default();
    report.extend(jj);
    Ok(Output {
        json: json!({ "algebra": serde_json::to_value(&doc)?, "report": report_json(&report) }),
        text: format!("{}{}", to_json(&doc)?, report_text("verification", &report)),
        passed: report.passed(),
    })
}

/// Prints the failing report instead of building a product from bad input.
fn rejected(title: &str, r: &Report) -> Output {
    Output {
        json: json!({ "algebra": Value::Null, "report": report_json(r) }),
        text: report_text(title, r),
        passed: false,
    }
}

fn product<F: Field>(loader: &Loader<F>, kind: &ProductKind, save: Option<&Path>) -> Result<Output> {
    match kind {
        ProductKind::Unified { datum } => {
            let d = loader.load_datum(datum)?;
            algebra_output(&unified_product(&d), Some(check_extending(&d)), save)
        }
        ProductKind::Bicrossed { pair } => {
            let mp = loader.load_pair(pair)?;
            let r = check_matched_pair(&mp)?;
            if !r.passed() {
                return Ok(rejected("matched pair", &r));
            }
            algebra_output(&bicrossed_product(&mp)?, Some(r), save)
        }
        ProductKind::Crossed { system } => {
            let cs = loader.load_crossed(system)?;
            let r = check_crossed_system(&cs)?;
            if !r.passed() {
                return Ok(rejected("crossed system", &r));
            }
            algebra_output(&crossed_product(&cs)?, Some(r), save)
        }
        ProductKind::Skew { system } => {
            let s = loader.load_skew(system)?;
            let r = check_skew_crossed(&s)?;
            if !r.passed() {
                return Ok(rejected("skew crossed system", &r));
            }
            algebra_output(&skew_crossed_product(&s)?, Some(r), save)
        }
        ProductKind::Semidirect { pair } => {
            let mp = loader.load_pair(pair)?;
            if !mp.left_act.is_zero(&loader.k) {
                bail!("a semidirect product takes a pair with empty left_act");
            }
            let r = check_matched_pair(&mp)?;
            if !r.passed() {
                return Ok(rejected("semidirect action", &r));
            }
            algebra_output(&semidirect_product(&mp.v, &mp.a, &mp.right_act)?, Some(r), save)
        }
        ProductKind::Flag { datum } => {
            let (a, fd) = loader.load_flag(datum)?;
            let r = check_flag_datum(&a, &fd)?;
            if !r.passed() {
                return Ok(rejected("flag datum", &r));
            }
            algebra_output(&flag_extension(&a, &fd)?, Some(r), save)
        }
    }
}

fn check<F: Field>(loader: &Loader<F>, kind: &CheckKind) -> Result<Output> {
    let (title, r) = match kind {
        CheckKind::Datum { datum } => ("extending datum", check_extending(&loader.load_datum(datum)?)),
        CheckKind::Matched { pair } => ("matched pair", check_matched_pair(&loader.load_pair(pair)?)?),
        CheckKind::Crossed { system } => ("crossed system", check_crossed_system(&loader.load_crossed(system)?)?),
        CheckKind::Skew { system } => ("skew crossed system", check_skew_crossed(&loader.load_skew(system)?)?),
        CheckKind::Supersolvable { datum } => {
            let (a, fd) = loader.load_flag(datum)?;
            ("supersolvable datum", check_supersolvable_datum(&a, &fd.d, &fd.a0)?)
        }
        CheckKind::Flag { datum } => {
            let (a, fd) = loader.load_flag(datum)?;
            ("flag datum", check_flag_datum(&a, &fd)?)
        }
        CheckKind::GaloisPair { pair } => {
            let (mp, g) = loader.load_galois_pair(pair)?;
            ("Galois pair", check_galois_pair(&mp, &g)?)
        }
    };
    Ok(Output {
        json: report_json(&r),
        text: report_text(title, &r),
        passed: r.passed(),
    })
}

fn classify<F: Field>(loader: &Loader<F>, kind: &ClassifyKind, budget: &Budget) -> Result<Output> {
    let k = &loader.k;
    match kind {
        ClassifyKind::H2 { algebra } => {
            let a = loader.load_algebra(algebra)?;
            let problem = OrbitProblem::new(&a, budget)?;
            let edges = (0..problem.data.len())
                .into_par_iter()
                .map(|i| problem.edges(&a, i))
                .collect::<jjalg::Result<Vec<_>>>()?;
            let h2 = assemble_h2(&a, problem.data, edges)?;
            let classes: Vec<Value> = h2
                .orbits
                .iter()
                .map(|o| {
                    json!({
                        "representative": flag_json(k, &h2.data[o.representative]),
                        "size": o.members.len(),
                        "members": o.members,
                    })
                })
                .collect();
            let certificates: Vec<Value> = h2
                .certificates
                .iter()
                .map(|c| json!({ "target": c.target, "source": c.source, "candidates": c.candidates }))
                .collect();
            let mut text = format!(
                "{} flag data in {} classes (sizes {:?})\n",
                h2.data.len(),
                h2.class_count(),
                h2.orbit_sizes()
            );
            for o in &h2.orbits {
                text.push_str(&format!("  [{}] {}\n", o.members.len(), flag_text(k, &h2.data[o.representative])));
            }
            text.push_str(&format!(
                "{} inequivalence certificates, {} merges\n",
                h2.certificates.len(),
                h2.merges.len()
            ));
            Ok(Output {
                json: json!({
                    "data_count": h2.data.len(),
                    "class_count": h2.class_count(),
                    "orbit_sizes": h2.orbit_sizes(),
                    "classes": classes,
                    "certificates": certificates,
                    "merges": h2.merges.len(),
                    "partition": h2.is_partition(),
                }),
                text,
                passed: h2.is_partition(),
            })
        }
        ClassifyKind::All { dim, iso_cap } => {
            let rc = recursive_classify(k, *dim, *iso_cap, budget)?;
            let c = k.characteristic();
            let banner = if rc.complete {
                format!("characteristic {c}: lists are complete up to isomorphism")
            } else {
                format!(
                    "characteristic {c} is 2, 3 or 5: lists hold pairwise non-isomorphic algebras but are not claimed complete"
                )
            };
            let mut text = format!("{banner}\n");
            let mut levels = Vec::new();
            for (d, level) in rc.levels.iter().enumerate() {
                text.push_str(&format!("dimension {d}: {} algebras\n", level.len()));
                let certs: Vec<Value> = rc.certificates[d]
                    .iter()
                    .map(|p| {
                        let how = match p.distinction {
                            Distinction::Invariant(inv) => json!({ "invariant": format!("{inv:?}") }),
                            Distinction::Exhausted { candidates } => json!({ "exhausted": candidates }),
                        };
                        json!({ "left": p.left, "right": p.right, "distinction": how })
                    })
                    .collect();
                let docs = level
                    .iter()
                    .map(|a| serde_json::to_value(algebra_doc(a)))
                    .collect::<serde_json::Result<Vec<_>>>()?;
                levels.push(json!({ "dim": d, "algebras": docs, "certificates": certs }));
            }
            Ok(Output {
                json: json!({ "banner": banner, "complete": rc.complete, "levels": levels }),
                text,
                passed: true,
            })
        }
    }
}

fn sample_extending<F: Field>(k: &F, seed: u64, count: usize, max_adim: usize, max_vdim: usize) -> Result<Output> {
    if max_vdim == 0 {
        return Err(anyhow!("--max-vdim must be at least 1"));
    }
    let mut pool = vec![abelian(k.clone(), 1), square_zero_line(k.clone())];
    for n in 2..=max_adim {
        pool.push(abelian(k.clone(), n));
    }
    if max_adim >= 3 {
        pool.push(heisenberg3(k.clone()));
    }
    pool.retain(|a| a.dim() <= max_adim);
    let results: Vec<(bool, bool)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let a = &pool[rng.gen_range(0..pool.len())];
            let vdim = rng.gen_range(1..=max_vdim);
            let density = [0.1, 0.25, 0.5, 1.0][rng.gen_range(0..4)];
            let d = random_datum(a, vdim, density, true, &mut rng);
            (check_extending(&d).passed(), verify_jj(&unified_product(&d)).passed())
        })
        .collect();
    let extending = results.iter().filter(|r| r.0).count();
    let mismatched: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, r)| r.0 != r.1)
        .map(|(i, _)| i)
        .collect();
    Ok(Output {
        json: json!({
            "count": count,
            "extending": extending,
            "discrepancies": mismatched,
            "seed": seed,
        }),
        text: format!(
            "{count} sampled data, {extending} extending, {} discrepancies\n",
            mismatched.len()
        ),
        passed: mismatched.is_empty(),
    })
}
