//! Command-line surface: generator matrices, composition factors, tensor
//! squares, irreducibility decisions and theorem checks.

pub mod doc;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use conjrep::irred::{check_theorem, decide_seeded, IrredError, TheoremId, TheoremParams};
use conjrep::linalg::LinalgError;
use conjrep::rep::{
    build_ia_generators, build_rho_b, build_rho_g, phi_b_over, phi_g_over, tensor, RepError,
    Representation,
};
use conjrep::ring::{parse_rational, Context, LaurentPoly, Rational, RingError, Specialization};

use doc::{DecisionDoc, IrredDocument, ParsedRep, RepDocument, ReportDocument, SCHEMA_VERSION};

/// Exit status 2: the request itself is malformed or outside the domain.
/// Exit status 1: a well-formed request failed at run time.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

fn ring_is_input(e: &RingError) -> bool {
    matches!(
        e,
        RingError::Context(..)
            | RingError::Unassigned(_)
            | RingError::ZeroSpecialization(_)
            | RingError::Parse { .. }
    )
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        if ring_is_input(&e) {
            CliError::Usage(e.to_string())
        } else {
            CliError::Runtime(e.to_string())
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::Ring(r) => r.into(),
            LinalgError::Shape(_) => CliError::Usage(e.to_string()),
            LinalgError::Singular => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::Ring(r) => r.into(),
            RepError::Linalg(l) => l.into(),
            RepError::Domain(_) | RepError::LabelMismatch(_) => CliError::Usage(e.to_string()),
            RepError::Invariant(_) => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<IrredError> for CliError {
    fn from(e: IrredError) -> Self {
        match e {
            IrredError::Domain(_) => CliError::Usage(e.to_string()),
            IrredError::Ring(r) => r.into(),
            IrredError::Rep(r) => r.into(),
            IrredError::Linalg(l) => l.into(),
            IrredError::WitnessNotFound { .. } => CliError::Runtime(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "conjrep",
    version,
    about = "Exact matrices and irreducibility checks for the extended Gassner and Burau representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator matrices of an extended representation
    Gen(GenArgs),
    /// Generator matrices of the degree n-1 composition factor
    Factor(FactorArgs),
    /// Generator matrices of a tensor product of two composition factors
    Tensor(TensorArgs),
    /// Decide (absolute) irreducibility at a rational specialization
    Irred(IrredArgs),
    /// Check a theorem statement at given or seeded parameters
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtRep {
    Ia,
    GassnerExt,
    BurauExt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FactorRep {
    GassnerExt,
    BurauExt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TensorRep {
    PhiG,
    PhiB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IrredRep {
    Ia,
    GassnerExt,
    BurauExt,
    PhiG,
    PhiB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Latex,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    /// Assignments such as `t1=2,t2=3,t3=5`; values may be `p/q`
    #[arg(long, allow_hyphen_values = true)]
    pub spec: Option<String>,
    /// Values of the t-variables, comma separated (`2` or `2,3,5`)
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Values of the m-variables of the second tensor factor
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub rep: ExtRep,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(long, value_enum)]
    pub rep: FactorRep,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long, value_enum)]
    pub rep: TensorRep,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IrredArgs {
    /// `ia`, `gassner-ext`, `burau-ext` decide the extension itself;
    /// `phi-g`, `phi-b` the composition factor, or its tensor product with
    /// a second copy when `--m` is given
    #[arg(
        long,
        value_enum,
        required_unless_present = "input",
        conflicts_with = "input"
    )]
    pub rep: Option<IrredRep>,
    /// Read the generators from a document written by gen/factor/tensor
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub params: Params,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// What a command writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Gen(a) => {
            let rep = match a.rep {
                ExtRep::Ia => build_ia_generators(a.n)?,
                ExtRep::GassnerExt => build_rho_g(a.n)?,
                ExtRep::BurauExt => build_rho_b(a.n)?,
            };
            emit(&rep, &a.params, a.format)
        }
        Command::Factor(a) => {
            let rep = match a.rep {
                FactorRep::GassnerExt => phi_g_over(a.n, "t")?,
                FactorRep::BurauExt => phi_b_over(a.n, "t")?,
            };
            emit(&rep, &a.params, a.format)
        }
        Command::Tensor(a) => {
            let (rep, _) = tensor_of(a.rep, a.n)?;
            emit(&rep, &a.params, a.format)
        }
        Command::Irred(a) => irred(a),
        Command::Verify(a) => verify(a),
    }
}

fn tensor_of(rep: TensorRep, n: usize) -> Result<(Representation<LaurentPoly>, usize), CliError> {
    let (a, b) = match rep {
        TensorRep::PhiG => (phi_g_over(n, "t")?, phi_g_over(n, "m")?),
        TensorRep::PhiB => (phi_b_over(n, "t")?, phi_b_over(n, "m")?),
    };
    let t_vars = a.context().len();
    Ok((tensor(&a, &b)?, t_vars))
}

fn value_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|x| Ok(parse_rational(x)?)).collect()
}

/// Assigns a comma list to `names` in order.
fn assign(names: &[String], list: &str, flag: &str) -> Result<Vec<(String, Rational)>, CliError> {
    let values = value_list(list)?;
    if values.len() != names.len() {
        return Err(CliError::Usage(format!(
            "--{flag} needs {} value(s) for [{}], got {}",
            names.len(),
            names.join(", "),
            values.len()
        )));
    }
    Ok(names.iter().cloned().zip(values).collect())
}

/// The specialization described by `--spec`, `--t` and `--m`, with the
/// t- and m-variables taken from `t_names` and `m_names`. `None` when no
/// flag is given.
fn collect(
    p: &Params,
    t_names: &[String],
    m_names: &[String],
) -> Result<Option<Specialization>, CliError> {
    let mut pairs = Vec::new();
    if let Some(s) = &p.spec {
        pairs.extend(
            Specialization::parse(s)?
                .iter()
                .map(|(k, v)| (k.clone(), v.clone())),
        );
    }
    if let Some(t) = &p.t {
        pairs.extend(assign(t_names, t, "t")?);
    }
    if let Some(m) = &p.m {
        if m_names.is_empty() {
            return Err(CliError::Usage(
                "--m only applies to tensor products".into(),
            ));
        }
        pairs.extend(assign(m_names, m, "m")?);
    }
    if pairs.is_empty() {
        return Ok(None);
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some((dup, _)) = pairs.iter().find(|(k, _)| !seen.insert(k.clone())) {
        return Err(CliError::Usage(format!("`{dup}` is assigned twice")));
    }
    Ok(Some(Specialization::new(pairs)?))
}

/// Checks that `s` assigns exactly the variables of `ctx`.
fn exact(ctx: &Context, s: &Specialization) -> Result<(), CliError> {
    if let Some((k, _)) = s.iter().find(|(k, _)| ctx.index_of(k).is_none()) {
        return Err(CliError::Usage(format!(
            "`{k}` is not a variable of [{ctx}]"
        )));
    }
    if let Some(v) = ctx.names().iter().find(|v| s.get(v).is_none()) {
        return Err(CliError::Usage(format!("no value given for `{v}`")));
    }
    Ok(())
}

fn split_names(ctx: &Context, t_vars: usize) -> (Vec<String>, Vec<String>) {
    let names = ctx.names();
    (names[..t_vars].to_vec(), names[t_vars..].to_vec())
}

fn emit(
    rep: &Representation<LaurentPoly>,
    params: &Params,
    format: Format,
) -> Result<Outcome, CliError> {
    let ctx = rep.context();
    let (t_names, m_names) = match rep.family() {
        conjrep::rep::Family::Tensor => split_names(
            ctx,
            ctx.names().iter().filter(|v| v.starts_with('t')).count(),
        ),
        _ => (ctx.names().to_vec(), Vec::new()),
    };
    let parsed = match collect(params, &t_names, &m_names)? {
        None => ParsedRep::Symbolic(rep.clone()),
        Some(s) => {
            exact(ctx, &s)?;
            let special = rep.specialize(&s)?;
            ParsedRep::Specialized {
                context: ctx.clone(),
                values: s,
                rep: special,
            }
        }
    };
    let document = RepDocument::from_parsed(&parsed);
    Ok(Outcome::ok(match format {
        Format::Json => document.to_json(),
        Format::Latex => doc::latex(&document, &parsed),
    }))
}

fn builtin(r: IrredRep, a: &IrredArgs) -> Result<(Representation<LaurentPoly>, usize), CliError> {
    Ok(match (r, &a.params.m) {
        (IrredRep::PhiG, Some(_)) => tensor_of(TensorRep::PhiG, a.n)?,
        (IrredRep::PhiB, Some(_)) => tensor_of(TensorRep::PhiB, a.n)?,
        (r, _) => {
            let rep = match r {
                IrredRep::Ia => build_ia_generators(a.n)?,
                IrredRep::GassnerExt => build_rho_g(a.n)?,
                IrredRep::BurauExt => build_rho_b(a.n)?,
                IrredRep::PhiG => phi_g_over(a.n, "t")?,
                IrredRep::PhiB => phi_b_over(a.n, "t")?,
            };
            let k = rep.context().len();
            (rep, k)
        }
    })
}

/// The specialized representation to decide and its parameters.
fn irred_input(a: &IrredArgs) -> Result<(Specialization, Representation<Rational>), CliError> {
    let symbolic = match (a.rep, &a.input) {
        (Some(r), _) => builtin(r, a)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            match RepDocument::from_json(&text)?.parse()? {
                ParsedRep::Symbolic(rep) => {
                    let k = rep.context().len();
                    (rep, k)
                }
                ParsedRep::Specialized { values, rep, .. } => {
                    if a.params.spec.is_some() || a.params.t.is_some() || a.params.m.is_some() {
                        return Err(CliError::Usage(
                            "the input document is already specialized".into(),
                        ));
                    }
                    return Ok((values, rep));
                }
            }
        }
        (None, None) => return Err(CliError::Usage("irred needs --rep or --input".into())),
    };
    let (rep, t_vars) = symbolic;
    let (t_names, m_names) = split_names(rep.context(), t_vars);
    let s = collect(&a.params, &t_names, &m_names)?
        .ok_or_else(|| CliError::Usage("irred needs a specialization (--spec, --t, --m)".into()))?;
    exact(rep.context(), &s)?;
    let special = rep.specialize(&s)?;
    Ok((s, special))
}

fn irred(a: &IrredArgs) -> Result<Outcome, CliError> {
    let (s, rep) = irred_input(a)?;
    let gens = rep.generators();
    let (decision, failure) = match decide_seeded(&gens, a.seed) {
        Ok(c) => (DecisionDoc::certified(&c), None),
        Err(IrredError::WitnessNotFound {
            closure_dim,
            degree,
            saturated,
        }) => (
            DecisionDoc {
                verdict: None,
                closure_dim,
                saturated,
                witness: None,
            },
            Some(IrredError::WitnessNotFound {
                closure_dim,
                degree,
                saturated,
            }),
        ),
        Err(e) => return Err(e.into()),
    };
    let document = IrredDocument {
        schema_version: SCHEMA_VERSION,
        family: rep.family().name().to_string(),
        n: rep.n(),
        degree: rep.degree(),
        parameters: doc::parameters(&s),
        seed: a.seed,
        decision,
    };
    let stdout = doc::to_json(&document);
    Ok(match failure {
        None => Outcome::ok(stdout),
        Some(e) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {e}\n"),
        },
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let id: TheoremId = a.theorem.parse()?;
    let n = a.n.unwrap_or(3);
    let names = |prefix: &str| -> Vec<String> {
        match id {
            TheoremId::T3 | TheoremId::T4 => Context::indexed(prefix, n).names().to_vec(),
            TheoremId::T8 => Context::indexed(prefix, 3).names().to_vec(),
            TheoremId::T6 | TheoremId::T7 | TheoremId::T9 => vec![prefix.to_string()],
        }
    };
    let m_names = if matches!(id, TheoremId::T8 | TheoremId::T9) {
        names("m")
    } else {
        Vec::new()
    };
    let all = collect(&a.params, &names("t"), &m_names)?;
    // m-variables go to the second factor, everything else to the first
    let (t, m) = match all {
        None => (None, None),
        Some(s) => {
            let (mv, tv): (Vec<_>, Vec<_>) = s
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .partition(|(k, _)| m_names.contains(k));
            let part = |v: Vec<(String, Rational)>| -> Result<Option<Specialization>, CliError> {
                Ok(if v.is_empty() {
                    None
                } else {
                    Some(Specialization::new(v)?)
                })
            };
            (part(tv)?, part(mv)?)
        }
    };
    let params = TheoremParams {
        n: a.n,
        t,
        m,
        seed: a.seed,
    };
    let report = check_theorem(id, &params)?;
    let document = ReportDocument::new(&report, a.seed);
    let stdout = doc::to_json(&document);
    Ok(if report.agrees {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: 1,
            stdout,
            stderr: format!(
                "discrepancy: {id} does not agree with the computed verdict at {}\n",
                report.parameters
            ),
        }
    })
}
