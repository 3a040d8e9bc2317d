use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use olie_core::algebra::{AlmostAbelian, IdealSearch};
use olie_core::catalog::{self, ENTRIES};
use olie_core::derivations::{al_derivation_space, lambda_samples, DerivationSpace};
use olie_core::extensions::{
    differential_matrix, extend_codim1, h2_dimension, infinitesimal_deformations,
};
use olie_core::identities::{self, Holds, Identity, IdentityError};
use olie_core::io::{self, IoError};
use olie_core::scan::{dim3_instance, structure_instance, Dim3Outcome, StructureOutcome};
use olie_core::structure::{classify, Case, ClassificationVerdict, KernelType};
use olie_core::{
    AlphaLambdaDerivation, AnticommAlgebra, Error, Field, LinearForm, Matrix, OmegaAlgebra,
    Subspace, Vector,
};

mod report;

use report::{run_seeds, Out};

#[derive(Parser, Debug)]
#[command(
    name = "olie",
    version,
    about = "Exact computations with omega-Lie algebras"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Config {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for scans; defaults to OLIE_WORKERS or 1.
    #[arg(long, global = true, env = "OLIE_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Reinterpret input over this field (q or gfP); generation field for scans.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the ω-Jacobi identity on basis triples.
    Check { file: PathBuf },
    /// Invariants of an algebra.
    Info { file: PathBuf },
    /// Basis of an (α,λ)-derivation space.
    Derive {
        file: PathBuf,
        #[arg(
            long,
            conflicts_with = "solve_lambda",
            required_unless_present = "solve_lambda"
        )]
        lambda: Option<String>,
        /// Use sample points of the multiplicative λ set.
        #[arg(long)]
        solve_lambda: bool,
    },
    /// Codimension-one extension by an (α,λ)-derivation.
    Extend {
        file: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        derivation: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structure verdict.
    Classify { file: PathBuf },
    /// Test a polynomial identity on basis tuples.
    Identity {
        file: PathBuf,
        /// jacobi-residual, two-basic, degree5, engel, abg[:a,b,c], bin, four,
        /// bin-consequence or four-consequence.
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        name: Option<String>,
        /// An s-expression in x1, x2, ... using b, w, s, + and -.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Dimension of the second cohomology with coefficients λ.
    H2 {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
    },
    /// First-order deformations of a Lie algebra into ω-Lie algebras.
    Deform { file: PathBuf },
    /// Check that consecutive differentials compose to zero.
    CohomologySelftest {
        file: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// α-vanishing run over random dimension-3 algebras.
    ScanDim3 {
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Structure run over random extension chains.
    ScanStructure {
        #[arg(long, value_parser = parse_dims, default_value = "4..6")]
        dims: (usize, usize),
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    let t = s.to_ascii_lowercase();
    if t == "q" {
        return Ok(Field::Q);
    }
    let p = t
        .strip_prefix("gf")
        .and_then(|p| {
            p.trim_start_matches('(')
                .trim_end_matches(')')
                .parse::<u64>()
                .ok()
        })
        .ok_or_else(|| format!("expected q or gfP, got {s:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a < 3 || b < a {
        return Err(bad());
    }
    Ok((a, b))
}

/// A failure that ends the command with a nonzero exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Precondition(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Parse(_) => "parse",
            Failure::Precondition(_) => "precondition",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Io(e) => e.into(),
            Error::Identity(e) => e.into(),
            Error::Field(e) => Failure::Parse(e.to_string()),
            Error::UnknownName(n) => Failure::Usage(format!("unknown name {n:?}")),
            e => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        Failure::Parse(e.to_string())
    }
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Failure {
        match e {
            IdentityError::UnknownIdentity(_) => Failure::Usage(e.to_string()),
            e => Failure::Parse(e.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn load(path: &Path, field: Option<Field>) -> Result<AnticommAlgebra, Failure> {
    let a = io::load(path)?;
    match field {
        Some(f) if f != a.field() => reinterpret(&a, f),
        _ => Ok(a),
    }
}

fn reinterpret(a: &AnticommAlgebra, f: Field) -> Result<AnticommAlgebra, Failure> {
    let mut v = io::algebra_to_value(a);
    v["field"] = match f {
        Field::Rationals => json!("Q"),
        Field::Gf(p) => json!({ "GF": p }),
    };
    Ok(io::algebra_from_value(&v)?)
}

fn validated(a: AnticommAlgebra) -> Result<OmegaAlgebra, Failure> {
    a.into_validated()
        .map_err(|v| Failure::Precondition(format!("not an omega-Lie algebra: {v}")))
}

/// A comma-separated list of scalars.
fn form(a: &AnticommAlgebra, text: &str) -> Result<LinearForm, Failure> {
    let xs: Vec<&str> = text.split(',').map(str::trim).collect();
    if xs.len() != a.dim() {
        return Err(Failure::Usage(format!(
            "lambda needs {} entries, got {}",
            a.dim(),
            xs.len()
        )));
    }
    let f = a.field();
    let s = xs
        .iter()
        .map(|x| f.parse(x).map_err(|e| Failure::Parse(e.to_string())))
        .collect::<Result<_, _>>()?;
    Ok(Vector::from_scalars(f, s))
}

fn one_based(t: &[usize]) -> Vec<usize> {
    t.iter().map(|i| i + 1).collect()
}

fn assignment(t: &[usize]) -> String {
    let parts: Vec<String> = t
        .iter()
        .enumerate()
        .map(|(v, i)| format!("x{} = e{}", v + 1, i + 1))
        .collect();
    parts.join(", ")
}

fn rows_text(m: &Matrix) -> String {
    let rows: Vec<String> = m.row_vectors().iter().map(Vector::to_string).collect();
    format!("[{}]", rows.join(", "))
}

fn almost_abelian_json(a: &AnticommAlgebra) -> Value {
    match a.almost_abelian_decomposition() {
        AlmostAbelian::Abelian => json!({ "type": "abelian" }),
        AlmostAbelian::AlmostAbelian {
            abelian_part,
            x,
            lambda,
        } => json!({
            "type": "almost-abelian",
            "abelian_part": abelian_part.encode(),
            "x": x.encode(),
            "lambda": lambda.encode(),
        }),
        AlmostAbelian::Neither => json!({ "type": "neither" }),
    }
}

fn almost_abelian_text(a: &AnticommAlgebra) -> String {
    match a.almost_abelian_decomposition() {
        AlmostAbelian::Abelian => "abelian".into(),
        AlmostAbelian::AlmostAbelian {
            abelian_part, x, ..
        } => format!("almost abelian, abelian part {abelian_part}, x = {x}"),
        AlmostAbelian::Neither => "no".into(),
    }
}

fn case_json(c: &Case) -> Value {
    match c {
        Case::LieAlgebra => json!({ "type": "LieAlgebra" }),
        Case::DimThree => json!({ "type": "DimThree" }),
        Case::CodimOneLieSubalgebra(s) => {
            json!({ "type": "CodimOneLieSubalgebra", "subalgebra": s.encode() })
        }
        Case::KernelCodimTwo {
            kernel_type,
            nilpotent_action,
        } => json!({
            "type": "KernelCodimTwo",
            "kernel_type": kernel_type_name(*kernel_type),
            "nilpotent_action": nilpotent_action,
        }),
        Case::Inconclusive => json!({ "type": "Inconclusive" }),
    }
}

fn kernel_type_name(k: KernelType) -> &'static str {
    match k {
        KernelType::Abelian => "Abelian",
        KernelType::AlmostAbelian => "AlmostAbelian",
    }
}

fn case_text(c: &Case) -> String {
    match c {
        Case::LieAlgebra => "Lie algebra".into(),
        Case::DimThree => "dimension 3".into(),
        Case::CodimOneLieSubalgebra(s) => format!("codimension-one Lie subalgebra {s}"),
        Case::KernelCodimTwo {
            kernel_type,
            nilpotent_action,
        } => {
            let k = match kernel_type {
                KernelType::Abelian => "abelian",
                KernelType::AlmostAbelian => "almost abelian",
            };
            let act = if *nilpotent_action {
                "nilpotent"
            } else {
                "not nilpotent"
            };
            format!("Ker omega of codimension 2, {k}, action {act}")
        }
        Case::Inconclusive => "inconclusive".into(),
    }
}

fn cmd_check(out: &mut Out, cfg: &Config, file: &Path) -> CmdResult {
    let a = load(file, cfg.field)?;
    match a.first_violation() {
        None => {
            out.text("valid");
            out.json(json!({ "valid": true }));
            Ok(true)
        }
        Some(v) => {
            out.text(format!("violation: {v}"));
            let (i, j, k) = v.triple;
            out.json(json!({ "valid": false, "triple": [i + 1, j + 1, k + 1], "residual": v.residual.encode() }));
            Ok(false)
        }
    }
}

fn cmd_info(out: &mut Out, cfg: &Config, file: &Path) -> CmdResult {
    let a = load(file, cfg.field)?;
    let violation = a.first_violation();
    let lambda = a.multiplicative_lambda().ok();
    out.text(format!("field: {}", a.field()));
    out.text(format!("dim: {}", a.dim()));
    out.text(format!(
        "valid: {}",
        violation
            .as_ref()
            .map_or("yes".to_string(), |v| format!("no, {v}"))
    ));
    out.text(format!("is_lie: {}", a.is_lie()));
    out.text(format!("omega_rank: {}", a.omega_rank()));
    out.text(format!("omega_kernel: {}", a.omega_kernel()));
    out.text(format!("commutant: {}", a.commutant()));
    out.text(format!(
        "multiplicative_lambda: {}",
        lambda.as_ref().map_or("none".into(), |s| format!(
            "{} + {}",
            s.particular, s.kernel
        ))
    ));
    out.text(format!("almost_abelian: {}", almost_abelian_text(&a)));
    out.json(json!({
        "field": a.field().to_string(),
        "dim": a.dim(),
        "valid": violation.is_none(),
        "is_lie": a.is_lie(),
        "omega_rank": a.omega_rank(),
        "omega_kernel": a.omega_kernel().encode(),
        "commutant": a.commutant().encode(),
        "multiplicative_lambda": lambda.map(|s| json!({ "particular": s.particular.encode(), "kernel": s.kernel.encode() })),
        "almost_abelian": almost_abelian_json(&a),
    }));
    Ok(true)
}

fn space_report(out: &mut Out, s: &DerivationSpace) -> Value {
    out.text(format!("lambda {}: dimension {}", s.lambda, s.dim()));
    let basis = s.basis();
    for d in &basis {
        out.text(format!("  D = {}, alpha = {}", rows_text(&d.d), d.alpha));
    }
    json!({
        "lambda": s.lambda.encode(),
        "dim": s.dim(),
        "basis": basis.iter().map(io::derivation_to_value).collect::<Vec<_>>(),
    })
}

fn cmd_derive(
    out: &mut Out,
    cfg: &Config,
    file: &Path,
    lambda: &Option<String>,
    solve: bool,
) -> CmdResult {
    let a = load(file, cfg.field)?;
    let mut spaces = Vec::new();
    let mut set = Value::Null;
    if solve {
        let sol = a.multiplicative_lambda()?;
        out.text(format!(
            "multiplicative lambda: {} + {}",
            sol.particular, sol.kernel
        ));
        set = json!({ "particular": sol.particular.encode(), "kernel": sol.kernel.encode() });
        for l in lambda_samples(&sol) {
            spaces.push(space_report(out, &al_derivation_space(&a, &l)));
        }
    } else {
        let l = form(&a, lambda.as_deref().unwrap_or_default())?;
        spaces.push(space_report(out, &al_derivation_space(&a, &l)));
    }
    out.json(json!({ "lambda_set": set, "spaces": spaces }));
    Ok(true)
}

fn cmd_extend(
    out: &mut Out,
    cfg: &Config,
    file: &Path,
    lambda: &Option<String>,
    derivation: &Path,
    output: &Option<PathBuf>,
) -> CmdResult {
    let a = validated(load(file, cfg.field)?)?;
    let text = std::fs::read_to_string(derivation)
        .map_err(|e| Failure::Parse(format!("{}: {e}", derivation.display())))?;
    let (d, alpha, file_lambda) = io::derivation_from_str(&text, a.field(), a.dim())?;
    let lambda = match (lambda, file_lambda) {
        (Some(l), None) => form(&a, l)?,
        (None, Some(l)) => l,
        (Some(l), Some(fl)) => {
            let l = form(&a, l)?;
            if l != fl {
                return Err(Failure::Precondition(
                    "--lambda disagrees with the derivation file".into(),
                ));
            }
            l
        }
        (None, None) => {
            return Err(Failure::Usage(
                "lambda is required (flag or derivation file)".into(),
            ))
        }
    };
    let e = extend_codim1(&a, &AlphaLambdaDerivation { d, alpha, lambda })?;
    let summary = json!({ "dim": e.dim(), "omega_rank": e.omega_rank(), "is_lie": e.is_lie() });
    match output {
        Some(p) => {
            io::save(&e, p)?;
            out.text(format!(
                "wrote {} (dim {}, omega rank {})",
                p.display(),
                e.dim(),
                e.omega_rank()
            ));
            let mut s = summary;
            s["output"] = json!(p.display().to_string());
            out.json(s);
        }
        None => {
            out.raw(io::algebra_to_string(&e));
            out.json(io::algebra_to_value(&e));
        }
    }
    Ok(true)
}

fn verdict_json(v: &ClassificationVerdict) -> Value {
    json!({
        "case": case_json(&v.case),
        "abelian_small_codim": v.abelian_small_codim.as_ref().map(Subspace::encode),
    })
}

fn cmd_classify(out: &mut Out, cfg: &Config, file: &Path) -> CmdResult {
    let a = validated(load(file, cfg.field)?)?;
    let v = classify(&a);
    out.text(format!("case: {}", case_text(&v.case)));
    out.text(match &v.abelian_small_codim {
        Some(s) => format!("abelian subalgebra: {s} (codimension {})", s.codim()),
        None => "abelian subalgebra: none found".into(),
    });
    out.json(verdict_json(&v));
    Ok(true)
}

fn cmd_identity(
    out: &mut Out,
    cfg: &Config,
    file: &Path,
    name: &Option<String>,
    expr: &Option<String>,
) -> CmdResult {
    let a = load(file, cfg.field)?;
    let id: Identity = match (name, expr) {
        (Some(n), _) => identities::builtin(n)?,
        (None, Some(e)) => identities::parse_identity(e)?,
        (None, None) => return Err(Failure::Usage("--name or --expr is required".into())),
    };
    let holds = id.holds(&a);
    let raw = if holds.is_yes() {
        None
    } else {
        id.raw.as_ref().and(id.raw_counterexample(&a))
    };
    match &holds {
        Holds::Yes => {
            out.text(format!("{} holds", id.name));
            out.json(json!({ "identity": id.name, "holds": true }));
        }
        Holds::Counterexample { tuple, value } => {
            out.text(format!(
                "{} fails at {}: {}",
                id.name,
                assignment(tuple),
                value
            ));
            if let Some((rt, rv)) = &raw {
                out.text(format!(
                    "unlinearized form fails at {}: {}",
                    assignment(rt),
                    rv
                ));
            }
            out.json(json!({
                "identity": id.name,
                "holds": false,
                "tuple": one_based(tuple),
                "value": value.to_string(),
                "raw": raw.map(|(t, v)| json!({ "tuple": one_based(&t), "value": v.to_string() })),
            }));
        }
    }
    Ok(holds.is_yes())
}

fn cmd_h2(out: &mut Out, cfg: &Config, file: &Path, lambda: &str) -> CmdResult {
    let a = load(file, cfg.field)?;
    let l = form(&a, lambda)?;
    let h = h2_dimension(&a, &l)?;
    out.text(format!("h2: {h}"));
    out.json(json!({ "lambda": l.encode(), "h2": h }));
    Ok(true)
}

fn cmd_deform(out: &mut Out, cfg: &Config, file: &Path) -> CmdResult {
    let a = load(file, cfg.field)?;
    let s = infinitesimal_deformations(&a)?;
    out.text(format!("dimension: {}", s.dim()));
    out.text(format!("omega1 projection: {}", s.omega1_projection_dim));
    out.json(json!({
        "dim": s.dim(),
        "omega1_projection_dim": s.omega1_projection_dim,
        "nontrivial_omega1": s.has_nontrivial_omega1(),
    }));
    Ok(true)
}

/// `d^{k+1} ∘ d^k`, or `None` when a degree is out of range.
fn composition_zero(a: &AnticommAlgebra, l: &LinearForm, k: usize) -> Option<bool> {
    if k + 2 > a.dim() {
        return None;
    }
    let m = differential_matrix(a, l, k).mul(&differential_matrix(a, l, k + 1));
    Some(m.is_zero())
}

fn cmd_selftest(out: &mut Out, cfg: &Config, file: &Path, lambda: &Option<String>) -> CmdResult {
    let a = load(file, cfg.field)?;
    let lambdas = match lambda {
        Some(l) => {
            let l = form(&a, l)?;
            if !a.is_multiplicative_for(&l) {
                return Err(Error::NotMultiplicative.into());
            }
            vec![l]
        }
        None => lambda_samples(&a.multiplicative_lambda()?),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for l in &lambdas {
        let d21 = composition_zero(&a, l, 1);
        let d10 = composition_zero(&a, l, 0);
        ok &= d21 != Some(false);
        let show = |r: Option<bool>| r.map_or("n/a", |z| if z { "zero" } else { "NONZERO" });
        out.text(format!(
            "lambda {l}: d2d1 {}, d1d0 {}",
            show(d21),
            show(d10)
        ));
        rows.push(json!({ "lambda": l.encode(), "d2d1_zero": d21, "d1d0_zero": d10 }));
    }
    out.text(if ok { "ok" } else { "FAIL" });
    out.json(json!({ "ok": ok, "checks": rows }));
    Ok(ok)
}

fn cmd_scan_dim3(out: &mut Out, cfg: &Config, count: u64, seed: u64) -> CmdResult {
    let field = cfg.field.unwrap_or(Field::Q);
    let res: Vec<Dim3Outcome> = run_seeds(cfg.workers, seed, count, |s| dim3_instance(field, s))?;
    let non_lie = res.iter().filter(|r| !r.lie).count();
    let derivations: usize = res.iter().map(|r| r.derivations).sum();
    let failures: Vec<&Dim3Outcome> = res.iter().filter(|r| !r.passed()).collect();
    let passed = res.len() - failures.len();
    out.text(format!("field {field}, seeds {seed}..{}", seed + count));
    out.text(format!(
        "non-Lie instances: {non_lie}, basis derivations checked: {derivations}"
    ));
    for r in &failures {
        out.text(format!(
            "seed {}: {} alpha failures, {} nondegenerate extensions",
            r.seed, r.alpha_failures, r.nondegenerate_extensions
        ));
    }
    out.text(format!("{passed}/{count} α-vanishing"));
    out.json(json!({
        "field": field.to_string(),
        "seed": seed,
        "count": count,
        "non_lie": non_lie,
        "derivations": derivations,
        "passed": passed,
        "failures": failures.iter().map(|r| json!({
            "seed": r.seed,
            "alpha_failures": r.alpha_failures,
            "nondegenerate_extensions": r.nondegenerate_extensions,
        })).collect::<Vec<_>>(),
    }));
    Ok(failures.is_empty())
}

#[derive(Default)]
struct DimTally {
    stuck: usize,
    lie: usize,
    non_lie: usize,
    codim_one: usize,
    kernel_two: usize,
    other: usize,
    abelian_verified: usize,
    simple: usize,
    abelian_ideal: usize,
    solvable_ideal: usize,
    main_failures: Vec<u64>,
    simple_failures: Vec<u64>,
    abelian_ideal_failures: Vec<u64>,
}

fn cmd_scan_structure(
    out: &mut Out,
    cfg: &Config,
    dims: (usize, usize),
    count: u64,
    seed: u64,
) -> CmdResult {
    let field = cfg.field.unwrap_or(Field::Gf(5));
    let mut ok = true;
    let mut per_dim = Vec::new();
    out.text(format!("field {field}, seeds {seed}..{}", seed + count));
    for dim in dims.0..=dims.1 {
        let res = run_seeds(cfg.workers, seed, count, |s| {
            structure_instance(field, dim, s)
        })?;
        let mut t = DimTally::default();
        for (s, r) in (seed..).zip(&res) {
            match r {
                StructureOutcome::Stuck { .. } => t.stuck += 1,
                StructureOutcome::Lie => t.lie += 1,
                StructureOutcome::NonLie(o) => {
                    t.non_lie += 1;
                    match o.case {
                        Case::CodimOneLieSubalgebra(_) => t.codim_one += 1,
                        Case::KernelCodimTwo { .. } => t.kernel_two += 1,
                        _ => t.other += 1,
                    }
                    t.abelian_verified += o.abelian_verified as usize;
                    if !o.main_ok() {
                        t.main_failures.push(s);
                    }
                    if o.simple == Some(true) {
                        t.simple += 1;
                        t.simple_failures.push(s);
                    }
                    if matches!(o.abelian_ideal, Some(IdealSearch::Found(_))) {
                        t.abelian_ideal += 1;
                    } else if o.abelian_ideal.is_some() {
                        t.abelian_ideal_failures.push(s);
                    }
                    t.solvable_ideal +=
                        matches!(o.solvable_ideal, Some(IdealSearch::Found(_))) as usize;
                }
            }
        }
        out.text(format!(
            "dim {dim}: {} built, {} stuck, {} Lie, {} non-Lie; codim-one {}, kernel-codim-two {}, other {}; abelian subalgebra verified {}/{}",
            count as usize - t.stuck,
            t.stuck,
            t.lie,
            t.non_lie,
            t.codim_one,
            t.kernel_two,
            t.other,
            t.abelian_verified,
            t.non_lie
        ));
        if dim >= 5 {
            out.text(format!(
                "dim {dim}: simple {}, abelian ideal found {}/{}, solvable ideal found {}/{}",
                t.simple, t.abelian_ideal, t.non_lie, t.solvable_ideal, t.non_lie
            ));
        }
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        if !t.main_failures.is_empty() {
            out.text(format!(
                "dim {dim}: verdict failures at seeds {}",
                list(&t.main_failures)
            ));
        }
        if !t.simple_failures.is_empty() {
            out.text(format!(
                "dim {dim}: simple instances at seeds {}",
                list(&t.simple_failures)
            ));
        }
        if !t.abelian_ideal_failures.is_empty() {
            out.text(format!(
                "dim {dim}: no abelian ideal at seeds {}",
                list(&t.abelian_ideal_failures)
            ));
        }
        ok &= t.main_failures.is_empty()
            && t.simple_failures.is_empty()
            && t.abelian_ideal_failures.is_empty()
            && t.solvable_ideal == if dim >= 5 { t.non_lie } else { 0 };
        per_dim.push(json!({
            "dim": dim,
            "stuck": t.stuck,
            "lie": t.lie,
            "non_lie": t.non_lie,
            "codim_one": t.codim_one,
            "kernel_codim_two": t.kernel_two,
            "other": t.other,
            "abelian_verified": t.abelian_verified,
            "simple": (dim >= 5).then_some(t.simple),
            "abelian_ideal": (dim >= 5).then_some(t.abelian_ideal),
            "solvable_ideal": (dim >= 5).then_some(t.solvable_ideal),
            "verdict_failures": t.main_failures,
            "simple_seeds": t.simple_failures,
            "no_abelian_ideal_seeds": t.abelian_ideal_failures,
        }));
    }
    out.text(if ok { "ok" } else { "FAIL" });
    out.json(json!({ "field": field.to_string(), "seed": seed, "count": count, "ok": ok, "dims": per_dim }));
    Ok(ok)
}

fn cmd_catalog(out: &mut Out, cfg: &Config, action: &CatalogAction) -> CmdResult {
    match action {
        CatalogAction::List => {
            let width = ENTRIES.iter().map(|e| e.name.len()).max().unwrap_or(0);
            for e in ENTRIES {
                let note = if e.valid {
                    ""
                } else {
                    " [raw table, does not validate]"
                };
                out.text(format!("{:width$}  {}{note}", e.name, e.description));
            }
            out.json(Value::Array(
                ENTRIES.iter().map(|e| json!({ "name": e.name, "description": e.description, "valid": e.valid })).collect(),
            ));
        }
        CatalogAction::Show { name, output } => {
            let a = catalog::builtin_table(name, cfg.field.unwrap_or(Field::Q))?;
            match output {
                Some(p) => {
                    io::save(&a, p)?;
                    out.text(format!("wrote {}", p.display()));
                    out.json(json!({ "name": name, "output": p.display().to_string() }));
                }
                None => {
                    out.raw(io::algebra_to_string(&a));
                    out.json(io::algebra_to_value(&a));
                }
            }
        }
    }
    Ok(true)
}

fn run(cli: &Cli, out: &mut Out) -> CmdResult {
    let cfg = &cli.config;
    if cfg.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    match &cli.command {
        Command::Check { file } => cmd_check(out, cfg, file),
        Command::Info { file } => cmd_info(out, cfg, file),
        Command::Derive {
            file,
            lambda,
            solve_lambda,
        } => cmd_derive(out, cfg, file, lambda, *solve_lambda),
        Command::Extend {
            file,
            lambda,
            derivation,
            output,
        } => cmd_extend(out, cfg, file, lambda, derivation, output),
        Command::Classify { file } => cmd_classify(out, cfg, file),
        Command::Identity { file, name, expr } => cmd_identity(out, cfg, file, name, expr),
        Command::H2 { file, lambda } => cmd_h2(out, cfg, file, lambda),
        Command::Deform { file } => cmd_deform(out, cfg, file),
        Command::CohomologySelftest { file, lambda } => cmd_selftest(out, cfg, file, lambda),
        Command::ScanDim3 { count, seed } => cmd_scan_dim3(out, cfg, *count, *seed),
        Command::ScanStructure { dims, count, seed } => {
            cmd_scan_structure(out, cfg, *dims, *count, *seed)
        }
        Command::Catalog { action } => cmd_catalog(out, cfg, action),
    }
}

fn json_requested() -> bool {
    let args: Vec<String> = std::env::args().collect();
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            if json_requested() {
                report::emit_error(true, "usage", &e.kind().to_string(), 2);
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let json = cli.config.format == Format::Json;
    let mut out = Out::new(json);
    match run(&cli, &mut out) {
        Ok(ok) => {
            out.flush();
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(f) => {
            report::emit_error(json, f.kind(), f.message(), f.code());
            ExitCode::from(f.code())
        }
    }
}
