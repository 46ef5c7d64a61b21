//! `nclindep` command line. Data goes to `stdout`, diagnostics to `stderr`.
//!
//! Exit codes: 0 dependent (or no witness / identity evidence), 1
//! independent (or witness found), 2 usage or input error, 3 the exact
//! deciders disagree.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::freealg::{global_dependence, NcPoly};
use crate::locdep::json::{decision_to_json, verdict_to_json};
use crate::locdep::{
    compute_bounds, decide_dependence, directional_dependence_sample, family_nvars, fock_certify,
    local_dependence_sample, BoundReport, CrossCheck, DecideOptions, Decision, SamplerConfig,
    DEFAULT_ENTRY_BOUND, DEFAULT_TRIALS,
};
use crate::matexact::json::{matrix_to_json, scalar_strings, tuple_from_str};
use crate::matexact::{evaluate_poly, MatTuple};
use crate::ncparse::{format_poly, parse_poly};
use crate::scalar::Field;
use crate::specialpoly::{capelli_poly, central_poly_2x2, commutator_embed, razmyslov_symbolic_dependence, standard_poly};
use crate::verdict::{DependenceVerdict, Status};

pub const SEED_ENV: &str = "NCLINDEP_SEED";

pub const EXIT_DEPENDENT: i32 = 0;
pub const EXIT_INDEPENDENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "nclindep",
    version,
    about = "Exact linear dependence of noncommutative polynomials",
    after_help = "Polynomials use the syntax `1/2*X1^2 - X2*X1 + 3`; `@path` reads one polynomial per line."
)]
struct Cli {
    #[command(flatten)]
    config: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Work modulo this odd prime instead of over the rationals.
    #[arg(long, global = true, value_name = "P")]
    prime: Option<u64>,
    /// Master seed for samplers [default: $NCLINDEP_SEED or 0].
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Sampler trials.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    /// Sampled matrix entries lie in [-B, B].
    #[arg(long = "entry-bound", global = true, value_name = "B", default_value_t = DEFAULT_ENTRY_BOUND)]
    entry_bound: u32,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree bounds and the Fock dimension of a family.
    Bounds {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Run one decider.
    Depend {
        #[arg(value_enum)]
        method: Method,
        /// Matrix size for the local and directional samplers.
        #[arg(long)]
        size: Option<usize>,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Exact verdict, cross-checks, bounds and a local sampling run at s_local_min.
    Decide {
        /// Skip the local sampling run.
        #[arg(long)]
        no_local: bool,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Evaluate a polynomial at a tuple of matrices read from a JSON file.
    Eval {
        #[arg(long, value_name = "FILE")]
        at: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Print a standard, Capelli or central polynomial.
    Gen {
        #[command(subcommand)]
        which: GenKind,
    },
    /// Rewrite a polynomial in two variables with iterated commutators.
    Embed2 {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Search for a nonzero evaluation on d x d matrices.
    PiCheck {
        #[arg(long)]
        size: usize,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Global,
    Fock,
    Razmyslov,
    Local,
    Directional,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Standard polynomial St_n.
    St { n: usize },
    /// Capelli polynomial C_{2n-1}.
    Capelli { n: usize },
    /// (X1*X2 - X2*X1)^2.
    Central,
}

/// Resolved run configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub field: Field,
    pub seed: u64,
    pub trials: u64,
    pub entry_bound: u32,
    pub output: OutputFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            field: Field::Rational,
            seed: 0,
            trials: DEFAULT_TRIALS,
            entry_bound: DEFAULT_ENTRY_BOUND,
            output: OutputFormat::Text,
        }
    }
}

enum Failure {
    Usage(String),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DeciderDisagreement(msg) => Failure::Disagreement(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Outcome {
    stdout: String,
    code: i32,
}

/// Runs the CLI on `args` (including the program name). `env_seed` is the
/// value of `NCLINDEP_SEED`, if set.
pub fn run<O: Write, E: Write>(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    env_seed: Option<&str>,
    stdout: &mut O,
    stderr: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return if code == 0 { 0 } else { EXIT_USAGE };
        }
    };
    let result = resolve_config(&cli.config, env_seed).and_then(|config| dispatch(&cli.command, &config));
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Disagreement(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_DISAGREEMENT
        }
    }
}

fn resolve_config(args: &GlobalArgs, env_seed: Option<&str>) -> Result<CliConfig, Failure> {
    let field = match args.prime {
        Some(p) => Field::prime(p)?,
        None => Field::Rational,
    };
    let seed = match (args.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_ENV}={s} is not an unsigned integer")))?,
        (None, None) => 0,
    };
    Ok(CliConfig {
        field,
        seed,
        trials: args.trials,
        entry_bound: args.entry_bound,
        output: args.output,
    })
}

fn read_polys(sources: &[String], field: Field) -> Result<Vec<NcPoly>, Failure> {
    let mut out = Vec::new();
    for src in sources {
        if let Some(path) = src.strip_prefix('@') {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let p = parse_poly(line, field)
                    .map_err(|e| Failure::Usage(format!("{path}:{}: {e}", lineno + 1)))?;
                out.push(p);
            }
        } else {
            let p = parse_poly(src, field)
                .map_err(|e| Failure::Usage(format!("in `{src}`: {e}")))?;
            out.push(p);
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("no polynomials given".into()));
    }
    Ok(out)
}

fn read_one(src: &str, field: Field) -> Result<NcPoly, Failure> {
    let mut ps = read_polys(&[src.to_string()], field)?;
    if ps.len() != 1 {
        return Err(Failure::Usage(format!(
            "expected one polynomial, found {}",
            ps.len()
        )));
    }
    Ok(ps.remove(0))
}

fn exit_for(status: Status) -> i32 {
    match status {
        Status::Dependent | Status::NoWitnessFound => EXIT_DEPENDENT,
        Status::Independent => EXIT_INDEPENDENT,
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command, cfg: &CliConfig) -> Result<Outcome, Failure> {
    let field = cfg.field;
    let sampler = |dim: usize| SamplerConfig {
        dim,
        trials: cfg.trials,
        bound: cfg.entry_bound,
        seed: cfg.seed,
    };
    match cmd {
        Command::Bounds { polys } => {
            let fs = read_polys(polys, field)?;
            let b = compute_bounds(&fs, family_nvars(&fs))?;
            let stdout = match cfg.output {
                OutputFormat::Json => json_line(&serde_json::to_value(&b).expect("serializable")),
                OutputFormat::Text => bounds_text(&b),
            };
            Ok(Outcome { stdout, code: 0 })
        }
        Command::Depend {
            method,
            size,
            polys,
        } => {
            let fs = read_polys(polys, field)?;
            let verdict = match method {
                Method::Global => global_dependence(&fs)?,
                Method::Fock => fock_certify(&fs)?,
                Method::Razmyslov => razmyslov_symbolic_dependence(&fs)?,
                Method::Local | Method::Directional => {
                    let dim = size.ok_or_else(|| {
                        Failure::Usage("--size is required for sampling deciders".into())
                    })?;
                    if *method == Method::Local {
                        local_dependence_sample(&fs, &sampler(dim))?
                    } else {
                        directional_dependence_sample(&fs, &sampler(dim))?
                    }
                }
            };
            let bounds = compute_bounds(&fs, family_nvars(&fs)).ok();
            let stdout = match cfg.output {
                OutputFormat::Json => json_line(&verdict_to_json(&verdict, bounds.as_ref())),
                OutputFormat::Text => verdict_text(&verdict),
            };
            Ok(Outcome {
                stdout,
                code: exit_for(verdict.status),
            })
        }
        Command::Decide { no_local, polys } => {
            let fs = read_polys(polys, field)?;
            let options = DecideOptions {
                local_sampling: !no_local,
                trials: cfg.trials,
                bound: cfg.entry_bound,
                seed: cfg.seed,
                ..DecideOptions::default()
            };
            let d = decide_dependence(&fs, &options)?;
            let stdout = match cfg.output {
                OutputFormat::Json => json_line(&decision_to_json(&d)),
                OutputFormat::Text => decision_text(&d),
            };
            Ok(Outcome {
                stdout,
                code: exit_for(d.verdict.status),
            })
        }
        Command::Eval { at, poly } => {
            let p = read_one(poly, field)?;
            let tuple = read_tuple(Path::new(at), field)?;
            let m = evaluate_poly(&p, &tuple)?;
            let stdout = match cfg.output {
                OutputFormat::Json => json_line(&matrix_to_json(&m)),
                OutputFormat::Text => m.to_string(),
            };
            Ok(Outcome { stdout, code: 0 })
        }
        Command::Gen { which } => {
            let p = match which {
                GenKind::St { n } => standard_poly(*n, field)?,
                GenKind::Capelli { n } => capelli_poly(*n, field)?,
                GenKind::Central => central_poly_2x2(field),
            };
            Ok(Outcome {
                stdout: poly_out(&p, cfg.output),
                code: 0,
            })
        }
        Command::Embed2 { poly } => {
            let p = read_one(poly, field)?;
            Ok(Outcome {
                stdout: poly_out(&commutator_embed(&p), cfg.output),
                code: 0,
            })
        }
        Command::PiCheck { size, poly } => {
            let p = read_one(poly, field)?;
            let verdict = local_dependence_sample(std::slice::from_ref(&p), &sampler(*size))?;
            let stdout = match cfg.output {
                OutputFormat::Json => json_line(&verdict_to_json(&verdict, None)),
                OutputFormat::Text => pi_text(&verdict, *size),
            };
            Ok(Outcome {
                stdout,
                code: exit_for(verdict.status),
            })
        }
    }
}

fn read_tuple(path: &Path, field: Field) -> Result<MatTuple, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    tuple_from_str(field, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn poly_out(p: &NcPoly, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => json_line(&json!({ "poly": format_poly(p) })),
        OutputFormat::Text => format!("{}\n", format_poly(p)),
    }
}

fn bounds_text(b: &BoundReport) -> String {
    let degs: Vec<String> = b.degs.iter().map(ToString::to_string).collect();
    format!(
        "m           = {}\ndegrees     = {}\nbeta        = {}\ns_local_min = {}\nd_rank      = {}\ngamma       = {}\ns_dir_min   = {}\nk_max       = {}\nsigma       = {} (n = {})\n",
        b.m,
        degs.join(", "),
        b.beta,
        b.s_local_min,
        b.d_rank,
        b.gamma,
        b.s_dir_min,
        b.k_max,
        b.sigma,
        b.n
    )
}

fn verdict_text(v: &DependenceVerdict) -> String {
    let mut s = format!("{}\n", v.status);
    if let Some(c) = &v.coefficients {
        let _ = writeln!(s, "coefficients: {}", scalar_strings(c).join(", "));
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "witness after {} trial(s):", v.trials_used);
        for (i, m) in w.tuple.matrices().iter().enumerate() {
            let _ = write!(s, "X{} =\n{m}", i + 1);
        }
        if let Some(dir) = &w.direction {
            let _ = writeln!(s, "v = ({})", scalar_strings(dir).join(", "));
        }
    }
    if v.status == Status::NoWitnessFound {
        let _ = writeln!(s, "trials: {}", v.trials_used);
    }
    if let Some(note) = &v.note {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

fn pi_text(v: &DependenceVerdict, size: usize) -> String {
    match v.status {
        Status::Independent => {
            let mut s = format!("not an identity of M_{size}: nonzero evaluation found\n");
            s.push_str(verdict_text(v).split_once('\n').map_or("", |x| x.1));
            s
        }
        _ => format!(
            "identity evidence on M_{size}: every evaluation vanished in {} trial(s)\n",
            v.trials_used
        ),
    }
}

fn decision_text(d: &Decision) -> String {
    let mut s = verdict_text(&d.verdict);
    for c in &d.cross_checks {
        match c {
            CrossCheck::Agreed { decider } => {
                let _ = writeln!(s, "cross-check {decider}: agrees");
            }
            CrossCheck::Skipped { decider, reason } => {
                let _ = writeln!(s, "cross-check {decider}: skipped ({reason})");
            }
        }
    }
    match &d.bounds {
        Some(b) => {
            s.push_str(&bounds_text(b));
            s.push_str(
                "note: s_dir_min is applied to directional sampling; the corresponding \
                 matrix statement is read as directional\n",
            );
        }
        None => s.push_str("bounds: undefined (family has a zero member)\n"),
    }
    if let Some(local) = &d.local {
        let _ = write!(
            s,
            "local sampling at d = {}: {}",
            local.dim,
            verdict_text(&local.verdict)
        );
    }
    s
}
