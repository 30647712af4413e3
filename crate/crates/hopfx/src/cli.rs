//! The `hopfx` command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopfx_core::braided_dual::{
    build_braided_dual_with, canonical_x, check_k_reflection, factorization_map, is_factorizable, ASSOC_SEED,
};
use hopfx_core::doubles::{
    build_elliptic_unchecked, build_heisenberg, build_phi, build_t, check_t_hexagons, universal_preconditions,
    EllipticDouble,
};
use hopfx_core::exactfield::Scalar;
use hopfx_core::hopf::{
    cyclic_table, dual_hopf, example_drinfeld_double, example_drinfeld_double_of, example_group_algebra,
    example_sweedler, symmetric_table, validate_hopf, GroupTable, ModuleData,
};
use hopfx_core::quasitriangular::{build_h2coop, he_action_on_dual, validate_qt, QT};
use hopfx_core::report::Report;
use hopfx_core::reps_mcg::{
    build_braid_rep, build_mcg_action, check_automorphisms, check_fourier, check_mcg_relations, check_presentation,
    fourier_transform, BraidRep, MCGAction, SigmaVariant,
};
use hopfx_core::tensorcore::{
    check_associativity_exhaustive, check_associativity_sampled, Algebra, ASSOC_SAMPLES, EXHAUSTIVE_ASSOC_DIM,
};
use hopfx_core::Error;
use serde_json::Value;

use crate::output::{Collector, ReportJson};
use crate::schema::{AlgebraFile, Loaded, MatrixBundle, SchemaError};

/// Above this dim(H), constructions living on H*⊗H* or larger need --deep.
pub const DEEP_DIM: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "hopfx", version, about = "Exact braided duals, elliptic doubles and their symmetries")]
pub struct Cli {
    /// Allow constructions whose size grows past desk scale
    #[arg(long, global = true)]
    pub deep: bool,
    /// Seed for sampled associativity checks
    #[arg(long, global = true, default_value_t = ASSOC_SEED)]
    pub seed: u64,
    /// Add elapsed milliseconds to each check (output is no longer reproducible)
    #[arg(long, global = true)]
    pub timings: bool,
    /// Continue past a failed validation of the input file
    #[arg(long, global = true)]
    pub force_report: bool,
    /// Write the produced algebra or matrices here; the report then goes to stdout
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra file (algebra, Hopf or quasitriangular axioms)
    Validate { file: PathBuf },
    /// Emit a built-in example
    #[command(subcommand)]
    Example(ExampleKind),
    /// Build a derived algebra
    #[command(subcommand)]
    Build(BuildKind),
    /// Check an identity
    #[command(subcommand)]
    Check(CheckKind),
    /// Representations
    #[command(subcommand)]
    Rep(RepKind),
    /// The modular group action on E^(1)
    #[command(subcommand)]
    Mcg(McgKind),
    /// The Fourier automorphism of the Heisenberg double
    Fourier { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ExampleKind {
    /// Group algebra with R = 1⊗1
    Group {
        /// Z<m> (cyclic) or S<k> (symmetric)
        #[arg(long)]
        group: GroupSpec,
        #[arg(long, default_value_t = 1)]
        conductor: u32,
    },
    /// Sweedler's four-dimensional algebra with R_λ
    Sweedler {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 1)]
        conductor: u32,
    },
    /// Drinfeld double of a group, or of the Hopf algebra in a file
    Double {
        #[arg(long, conflicts_with = "of", required_unless_present = "of")]
        group: Option<GroupSpec>,
        #[arg(long)]
        of: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        conductor: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildKind {
    /// The dual Hopf algebra H*
    Dual { file: PathBuf },
    /// The k-twisted braided dual ~H_k
    BraidedDual {
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        file: PathBuf,
    },
    /// The elliptic double E^(k)
    Elliptic {
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        file: PathBuf,
    },
    /// The Heisenberg double D_H with the map Φ: E^(0) → D_H
    Heisenberg { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CheckKind {
    /// k-reflection identity of the canonical element in ~H_k ⊗ H
    Reflection {
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        file: PathBuf,
    },
    /// Associativity of E^(k), the reflection identities and the elliptic relation
    Elliptic {
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        file: PathBuf,
    },
    /// Both hexagon identities of T
    Hexagons { file: PathBuf },
    /// Relations of the torus braid group on E^(k) ⊗ H^⊗n
    Presentation {
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModuleKind {
    Regular,
}

#[derive(Debug, Subcommand)]
pub enum RepKind {
    /// Matrices of X_j, Y_j, σ_i on E^(k) ⊗ H^⊗n
    Braid {
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(short = 'k', default_value_t = 0, allow_negative_numbers = true)]
        k: i32,
        #[arg(long, value_enum, default_value_t = ModuleKind::Regular)]
        module: ModuleKind,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    A,
    B,
}

#[derive(Debug, Subcommand)]
pub enum McgKind {
    /// The automorphism A or B of E^(1)
    Apply {
        #[arg(value_enum, ignore_case = true)]
        generator: Generator,
        file: PathBuf,
        /// Also report the image of this basis vector
        #[arg(long)]
        basis: Option<usize>,
    },
    /// Automorphism property and group relations of A, B, Z
    Verify { file: PathBuf },
}

/// A finite group by name: `Z<m>` or `S<k>`.
#[derive(Debug, Clone)]
pub struct GroupSpec(pub GroupTable);

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected Z<m> or S<k>, got {s:?}");
        let (kind, num) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let m: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "Z" | "z" if m >= 1 => Ok(GroupSpec(cyclic_table(m))),
            "S" | "s" if (1..=6).contains(&m) => Ok(GroupSpec(symmetric_table(m))),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Schema { path: PathBuf, source: SchemaError },
    #[error("{0}")]
    Usage(String),
}

/// A finished command: the report plus the artifact it produced, if any.
/// A primary artifact (examples, builds) replaces the report on stdout when
/// no `-o` is given; a secondary one is only ever written to `-o`.
pub struct Outcome {
    pub report: ReportJson,
    pub artifact: Option<Value>,
    pub primary: bool,
}

struct Session<'a> {
    cli: &'a Cli,
    col: Collector,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("schema types serialize")
}

fn read_file(path: &Path) -> Result<AlgebraFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn schema_err(path: &Path) -> impl FnOnce(SchemaError) -> CliError + '_ {
    move |source| CliError::Schema { path: path.into(), source }
}

/// Witness carried by a construction error, if any.
fn error_witness(e: &Error) -> Vec<usize> {
    match e {
        Error::PreconditionFailed { witness, .. } => witness.clone().unwrap_or_default(),
        Error::HomomorphismCheckFailed { witness }
        | Error::CoidealCheckFailed { witness }
        | Error::ModuleAxiomFailed { witness } => witness.clone(),
        _ => Vec::new(),
    }
}

fn algebra_report(a: &dyn Algebra, seed: u64) -> Report {
    let mut rep = Report::new();
    let n = a.conductor();
    let u = a.unit();
    let unit = (0..a.dim()).find(|&i| {
        let e = hopfx_core::tensorcore::SVec::basis(i, n);
        a.mul(&u, &e) != e || a.mul(&e, &u) != e
    });
    rep.record("unit", unit.map(|i| vec![i]));
    let assoc = if a.dim() <= EXHAUSTIVE_ASSOC_DIM {
        check_associativity_exhaustive(a)
    } else {
        check_associativity_sampled(a, seed, ASSOC_SAMPLES)
    };
    rep.record("associativity", assoc.map(|w| w.to_vec()));
    rep
}

impl<'a> Session<'a> {
    fn new(cli: &'a Cli, name: &str) -> Self {
        Session { cli, col: Collector::new(name, cli.timings) }
    }

    fn done(self, artifact: Option<Value>) -> Outcome {
        Outcome { report: self.col.finish(), artifact, primary: false }
    }

    fn produced(self, artifact: Value) -> Outcome {
        Outcome { report: self.col.finish(), artifact: Some(artifact), primary: true }
    }

    fn require_deep(&self, d: usize, what: &str) -> Result<(), CliError> {
        if d > DEEP_DIM && !self.cli.deep {
            return Err(CliError::Usage(format!("{what} for dim H = {d} > {DEEP_DIM} requires --deep")));
        }
        Ok(())
    }

    /// Record a construction error as a failed check.
    fn failed(mut self, name: &str, e: Error) -> Outcome {
        self.col.fail(name, error_witness(&e), e.to_string());
        self.done(None)
    }

    /// Load a quasitriangular file, validating it. `None` means the file was
    /// refused and the report already explains why.
    fn load_qt(&mut self, path: &Path) -> Result<Option<QT>, CliError> {
        let f = read_file(path)?;
        let q = f.to_qt().map_err(schema_err(path))?;
        let t0 = Instant::now();
        let mut rep = validate_hopf(&q.h);
        rep.extend(validate_qt(&q));
        let ok = rep.all_pass();
        self.col.add(rep, t0);
        Ok((ok || self.cli.force_report).then_some(q))
    }

    fn hopf_checks(&mut self, q: &QT) {
        self.col.info("dim", q.dim());
        self.col.info("factorizable", is_factorizable(q));
    }

    fn elliptic(&mut self, q: &QT, k: i32) -> Result<EllipticDouble, Error> {
        let act = Arc::new(he_action_on_dual(&q.h)?);
        let hk = build_braided_dual_with(q, act, k)?;
        let e = build_elliptic_unchecked(q, &hk, &build_t(q));
        let seed = self.cli.seed;
        self.col.stage(|| ((), e.alg.check(seed)));
        Ok(e)
    }
}

fn run_validate(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let mut s = Session::new(cli, "validate");
    let f = read_file(path)?;
    let t0 = Instant::now();
    match f.load().map_err(schema_err(path))? {
        Loaded::Algebra(a) => {
            s.col.info("kind", "algebra");
            s.col.add(algebra_report(&a, cli.seed), t0);
        }
        Loaded::Hopf(h) => {
            s.col.info("kind", "hopf");
            s.col.add(validate_hopf(&h), t0);
        }
        Loaded::Quasitriangular(q) => {
            s.col.info("kind", "quasitriangular");
            let mut rep = validate_hopf(&q.h);
            rep.extend(validate_qt(&q));
            s.col.add(rep, t0);
            s.hopf_checks(&q);
        }
    }
    Ok(s.done(None))
}

fn run_example(cli: &Cli, kind: &ExampleKind) -> Result<Outcome, CliError> {
    let (name, built) = match kind {
        ExampleKind::Group { group, conductor } => {
            ("example group", example_group_algebra(&group.0, *conductor).map_err(Error::from).and_then(QT::trivial))
        }
        ExampleKind::Sweedler { lambda, conductor } => {
            let l = Scalar::parse(lambda, *conductor).map_err(|e| CliError::Usage(format!("--lambda: {e}")))?;
            let (h, r) = example_sweedler(&l);
            ("example sweedler", QT::new(h, r))
        }
        ExampleKind::Double { group: Some(g), conductor, .. } => (
            "example double",
            example_drinfeld_double(&g.0, *conductor).map_err(Error::from).and_then(|(h, r)| QT::new(h, r)),
        ),
        ExampleKind::Double { of: Some(path), .. } => {
            let h = read_file(path)?.to_hopf().map_err(schema_err(path))?;
            ("example double", example_drinfeld_double_of(&h).map_err(Error::from).and_then(|(h, r)| QT::new(h, r)))
        }
        ExampleKind::Double { .. } => return Err(CliError::Usage("double needs --group or --of".into())),
    };
    let mut s = Session::new(cli, name);
    let q = match built {
        Ok(q) => q,
        Err(e) => return Ok(s.failed("construction", e)),
    };
    s.col.stage(|| {
        let mut rep = validate_hopf(&q.h);
        rep.extend(validate_qt(&q));
        ((), rep)
    });
    s.hopf_checks(&q);
    Ok(s.produced(to_value(&AlgebraFile::from_qt(&q))))
}

fn run_build(cli: &Cli, kind: &BuildKind) -> Result<Outcome, CliError> {
    match kind {
        BuildKind::Dual { file } => {
            let mut s = Session::new(cli, "build dual");
            let f = read_file(file)?;
            let h = f.to_hopf().map_err(schema_err(file))?;
            let dual = dual_hopf(&h);
            s.col.stage(|| ((), validate_hopf(&dual)));
            Ok(s.produced(to_value(&AlgebraFile::from_hopf(&dual))))
        }
        BuildKind::BraidedDual { k, file } => {
            let mut s = Session::new(cli, &format!("build braided-dual -k {k}"));
            let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
            let hk = match he_action_on_dual(&q.h).and_then(|a| build_braided_dual_with(&q, Arc::new(a), *k)) {
                Ok(hk) => hk,
                Err(e) => return Ok(s.failed("braided_dual", e)),
            };
            let seed = cli.seed;
            s.col.stage(|| ((), algebra_report(&hk.alg, seed)));
            s.col.stage(|| ((), check_k_reflection(&q, &hk.alg, &canonical_x(q.dim(), q.conductor()), *k)));
            s.col.info("commutative", hk.alg.is_commutative());
            Ok(s.produced(to_value(&AlgebraFile::from_algebra(&hk.alg))))
        }
        BuildKind::Elliptic { k, file } => {
            let mut s = Session::new(cli, &format!("build elliptic -k {k}"));
            let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
            s.require_deep(q.dim(), "E^(k)")?;
            let e = match s.elliptic(&q, *k) {
                Ok(e) => e,
                Err(err) => return Ok(s.failed("elliptic_double", err)),
            };
            s.col.stage(|| ((), universal_preconditions(&q, *k, &e.alg, &e.x, &e.y)));
            Ok(s.produced(to_value(&AlgebraFile::from_algebra(&e.alg))))
        }
        BuildKind::Heisenberg { file } => {
            let mut s = Session::new(cli, "build heisenberg");
            let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
            s.require_deep(q.dim(), "D_H")?;
            let built = (|| {
                let act = Arc::new(he_action_on_dual(&q.h)?);
                let h0 = build_braided_dual_with(&q, act, 0)?;
                let cop = build_h2coop(&q)?;
                Ok::<_, Error>((h0, cop))
            })();
            let (h0, cop) = match built {
                Ok(x) => x,
                Err(e) => return Ok(s.failed("braided_dual", e)),
            };
            let t0 = Instant::now();
            let dh = match build_heisenberg(&q, &h0, &cop) {
                Ok(dh) => dh,
                Err(e) => return Ok(s.failed("coideal", e)),
            };
            let mut rep = Report::new();
            rep.record("coideal", None);
            s.col.add(rep, t0);
            let seed = cli.seed;
            s.col.stage(|| ((), dh.alg.check(seed)));
            s.col.stage(|| ((), universal_preconditions(&q, 0, &dh.alg, &dh.x, &dh.y)));
            let e0 = match s.elliptic(&q, 0) {
                Ok(e) => e,
                Err(err) => return Ok(s.failed("elliptic_double", err)),
            };
            let t0 = Instant::now();
            match build_phi(&q, &e0, &dh) {
                Ok(phi) => {
                    let mut rep = Report::new();
                    rep.record("Phi_algebra_map", None);
                    rep.pass("Phi_rank", phi.rank == q.dim() * factorization_map(&q).rank());
                    s.col.add(rep, t0);
                    s.col.info("rank_phi", phi.rank);
                    s.col.info("phi_bijective", phi.inverse.is_some());
                }
                Err(e) => return Ok(s.failed("Phi_algebra_map", e)),
            }
            Ok(s.produced(to_value(&AlgebraFile::from_algebra(&dh.alg))))
        }
    }
}

fn braid_rep(s: &mut Session, q: &QT, k: i32, n: usize) -> Result<Option<BraidRep>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("-n must be at least 1".into()));
    }
    s.require_deep(q.dim(), "braid representations")?;
    let dim = q.dim().pow(2).saturating_mul(q.dim().saturating_pow(n as u32));
    if dim > 4096 && !s.cli.deep {
        return Err(CliError::Usage(format!("representation of dimension {dim} requires --deep")));
    }
    let e = match s.elliptic(q, k) {
        Ok(e) => e,
        Err(err) => {
            s.col.fail("elliptic_double", error_witness(&err), err.to_string());
            return Ok(None);
        }
    };
    let m = ModuleData::regular(&e.alg);
    let v = ModuleData::regular(&q.h);
    match build_braid_rep(q, &e.alg, &e.x, &e.y, &m, &v, n, SigmaVariant::Standard) {
        Ok(r) => Ok(Some(r)),
        Err(err) => {
            s.col.fail("module", error_witness(&err), err.to_string());
            Ok(None)
        }
    }
}

fn run_check(cli: &Cli, kind: &CheckKind) -> Result<Outcome, CliError> {
    let (name, file) = match kind {
        CheckKind::Reflection { k, file } => (format!("check reflection -k {k}"), file),
        CheckKind::Elliptic { k, file } => (format!("check elliptic -k {k}"), file),
        CheckKind::Hexagons { file } => ("check hexagons".into(), file),
        CheckKind::Presentation { k, n, file } => (format!("check presentation -k {k} -n {n}"), file),
    };
    let mut s = Session::new(cli, &name);
    let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
    match kind {
        CheckKind::Reflection { k, .. } => {
            match he_action_on_dual(&q.h).and_then(|a| build_braided_dual_with(&q, Arc::new(a), *k)) {
                Ok(hk) => {
                    s.col.stage(|| ((), check_k_reflection(&q, &hk.alg, &canonical_x(q.dim(), q.conductor()), *k)))
                }
                Err(e) => return Ok(s.failed("braided_dual", e)),
            }
        }
        CheckKind::Elliptic { k, .. } => {
            s.require_deep(q.dim(), "E^(k)")?;
            match s.elliptic(&q, *k) {
                Ok(e) => s.col.stage(|| ((), universal_preconditions(&q, *k, &e.alg, &e.x, &e.y))),
                Err(err) => return Ok(s.failed("elliptic_double", err)),
            }
        }
        CheckKind::Hexagons { .. } => match build_h2coop(&q) {
            Ok(cop) => s.col.stage(|| ((), check_t_hexagons(&q, &build_t(&q), &cop))),
            Err(e) => return Ok(s.failed("coproduct", e)),
        },
        CheckKind::Presentation { k, n, .. } => {
            if let Some(r) = braid_rep(&mut s, &q, *k, *n)? {
                s.col.info("rep_dim", r.dim());
                s.col.stage(|| ((), check_presentation(&r)));
            }
        }
    }
    Ok(s.done(None))
}

fn run_rep(cli: &Cli, kind: &RepKind) -> Result<Outcome, CliError> {
    let RepKind::Braid { n, k, module: ModuleKind::Regular, file } = kind;
    let mut s = Session::new(cli, &format!("rep braid -n {n} -k {k}"));
    let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
    let Some(r) = braid_rep(&mut s, &q, *k, *n)? else { return Ok(s.done(None)) };
    s.col.info("rep_dim", r.dim());
    s.col.stage(|| ((), check_presentation(&r)));
    let mut bundle = MatrixBundle::new(q.conductor());
    for (i, m) in r.sigma.iter().enumerate() {
        bundle.insert(format!("sigma_{}", i + 1), m);
    }
    for (j, (x, y)) in r.x.iter().zip(&r.y).enumerate() {
        bundle.insert(format!("X_{}", j + 1), x);
        bundle.insert(format!("Y_{}", j + 1), y);
    }
    Ok(s.done(Some(to_value(&bundle))))
}

fn mcg_action(s: &mut Session, q: &QT) -> Result<Option<(EllipticDouble, MCGAction)>, CliError> {
    s.require_deep(q.dim(), "the modular group action")?;
    let e1 = match s.elliptic(q, 1) {
        Ok(e) => e,
        Err(err) => {
            s.col.fail("elliptic_double", error_witness(&err), err.to_string());
            return Ok(None);
        }
    };
    let t0 = Instant::now();
    match build_mcg_action(q, &e1) {
        Ok(act) => {
            let mut rep = Report::new();
            rep.record("universal_morphisms", None);
            s.col.add(rep, t0);
            Ok(Some((e1, act)))
        }
        Err(err) => {
            s.col.fail("universal_morphisms", error_witness(&err), err.to_string());
            Ok(None)
        }
    }
}

fn run_mcg(cli: &Cli, kind: &McgKind) -> Result<Outcome, CliError> {
    let (name, file) = match kind {
        McgKind::Apply { generator, file, .. } => (format!("mcg apply {generator:?}"), file),
        McgKind::Verify { file } => ("mcg verify".into(), file),
    };
    let mut s = Session::new(cli, &name);
    let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
    let Some((e1, act)) = mcg_action(&mut s, &q)? else { return Ok(s.done(None)) };
    let mut bundle = MatrixBundle::new(q.conductor());
    match kind {
        McgKind::Verify { .. } => {
            s.col.stage(|| ((), check_mcg_relations(&act)));
            s.col.stage(|| ((), check_automorphisms(&act, &e1)));
            bundle.insert("A", &act.a);
            bundle.insert("B", &act.b);
            bundle.insert("Z", &act.z);
        }
        McgKind::Apply { generator, basis, .. } => {
            let (tag, m) = match generator {
                Generator::A => ("A", &act.a),
                Generator::B => ("B", &act.b),
            };
            let keep = |rep: Report| Report {
                checks: rep.checks.into_iter().filter(|c| c.name.starts_with(&format!("{tag}_"))).collect(),
            };
            s.col.stage(|| ((), keep(check_automorphisms(&act, &e1))));
            s.col.stage(|| ((), keep(check_mcg_relations(&act))));
            if let Some(i) = *basis {
                if i >= m.src {
                    return Err(CliError::Usage(format!("--basis {i} out of range (dim {})", m.src)));
                }
                let img: Vec<Value> = m.cols[i]
                    .iter()
                    .map(|(j, c)| Value::from(vec![Value::from(j), Value::from(c.to_string())]))
                    .collect();
                s.col.info("image", img);
            }
            bundle.insert(tag, m);
        }
    }
    Ok(s.done(Some(to_value(&bundle))))
}

fn run_fourier(cli: &Cli, file: &Path) -> Result<Outcome, CliError> {
    let mut s = Session::new(cli, "fourier");
    let Some(q) = s.load_qt(file)? else { return Ok(s.done(None)) };
    s.require_deep(q.dim(), "the Fourier transform")?;
    let t0 = Instant::now();
    let fd = match fourier_transform(&q) {
        Ok(fd) => fd,
        Err(e @ Error::NotFactorizable) => return Ok(s.failed("factorizable", e)),
        Err(e @ Error::NoRibbon) => return Ok(s.failed("ribbon", e)),
        Err(e @ Error::IsoCheckFailed(_)) => return Ok(s.failed("Theta_isomorphism", e)),
        Err(e) => return Ok(s.failed("construction", e)),
    };
    let mut rep = Report::new();
    for name in ["factorizable", "ribbon", "Theta_isomorphism", "Phi_algebra_map"] {
        rep.record(name, None);
    }
    rep.pass("Phi_bijective", fd.phi.inverse.is_some());
    s.col.add(rep, t0);
    s.col.stage(|| ((), check_fourier(&fd)));
    let mut bundle = MatrixBundle::new(q.conductor());
    bundle.insert("F", &fd.f);
    bundle.insert("B_D", &fd.b);
    bundle.insert("Theta", &fd.theta);
    bundle.insert("Phi", &fd.phi.map);
    Ok(s.done(Some(to_value(&bundle))))
}

/// Dispatch a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let t0 = Instant::now();
    let mut out = match &cli.command {
        Command::Validate { file } => run_validate(cli, file),
        Command::Example(kind) => run_example(cli, kind),
        Command::Build(kind) => run_build(cli, kind),
        Command::Check(kind) => run_check(cli, kind),
        Command::Rep(kind) => run_rep(cli, kind),
        Command::Mcg(kind) => run_mcg(cli, kind),
        Command::Fourier { file } => run_fourier(cli, file),
    }?;
    if cli.timings {
        out.report.info.insert("elapsed_ms_total".into(), Value::from(t0.elapsed().as_secs_f64() * 1e3));
    }
    Ok(out)
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Cap the worker pool from `HOPFX_THREADS`.
fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HOPFX_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("HOPFX_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Run the binary: 0 when every check holds, 1 when one fails, 2 on
/// usage, parse or I/O errors.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = init_threads().and_then(|_| execute(&cli));
    let out = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("hopfx: {e}");
            return 2;
        }
    };
    let stdout = io::stdout();
    let mut w = stdout.lock();
    let stdout_text = match (&cli.output, &out.artifact) {
        (Some(path), Some(art)) => {
            if let Err(e) = fs::write(path, pretty(art)) {
                eprintln!("hopfx: {}: {e}", path.display());
                return 2;
            }
            pretty(&out.report)
        }
        (None, Some(art)) if out.primary => pretty(art),
        _ => pretty(&out.report),
    };
    if let Err(e) = w.write_all(stdout_text.as_bytes()) {
        eprintln!("hopfx: <stdout>: {e}");
        return 2;
    }
    eprintln!("{}", out.report.summary());
    out.report.exit_code()
}
