//! Command-line parsing and dispatch.
//!
//! Every command prints one JSON object on stdout. Exit codes: 0 success,
//! 1 undefined or degenerate result (or a failed verification), 2 bad input.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncdet_core::dets::{delta, dieudonne_sq, moore, nu_matrix, nu_via_moore, predet, study, MOORE_CAP};
use ncdet_core::permanents::{double_permanent_capped, enumerate_paths_capped, mu_count, PERMANENT_CAP};
use ncdet_core::quasidet::quasidet_block;
use ncdet_core::{LabeledMatrix, Ordering, Real};
use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{read_matrix, AnyMatrix, Element, FormatError, Kind, Printer};
use crate::verify::{self, Suite, VerifyError};
use crate::with_matrix;

/// Reason reported when `A^{ij}` has no inverse.
pub const UNDEFINED_REASON: &str = "undefined: A^{ij} not invertible";

#[derive(Debug, Parser)]
#[command(name = "ncdet", version, about = "Quasideterminants and noncommutative determinants over exact scalars")]
pub struct Cli {
    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Print values as floating-point numbers instead of exact strings.
    #[arg(long, global = true)]
    pub float: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix file (JSON).
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormMethod {
    Moore,
    Recursive,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quasideterminant |A|_{ij}.
    Quasidet {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    /// Moore determinant.
    Moore {
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Study determinant (quaternion kinds).
    Study {
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Squared Dieudonné determinant ν(Δ(A)); `--float` adds the root.
    Dieudonne {
        #[command(flatten)]
        m: MatrixArg,
    },
    /// Matrix norm ν(A).
    Norm {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, value_enum, default_value_t = NormMethod::Moore)]
        method: NormMethod,
    },
    /// Predeterminant D_{I,J}(A) for orderings given as comma-separated labels.
    Predet {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Double permanent π_{ij}(A).
    Permanent {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    /// Symbolic terms of the expansion of ν(A^{ij})|A|_{ij} for order n.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
        /// One term per line instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Randomized verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, value_enum, default_value_t = Kind::RationalQuaternion)]
        scalar: Kind,
        /// Run only the named check (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),

    #[error(transparent)]
    Core(#[from] ncdet_core::Error),

    #[error(transparent)]
    Verify(#[from] VerifyError),

    #[error("{0}")]
    Usage(String),
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: u8, v: &Value) -> Self {
        Outcome::text(code, serde_json::to_string_pretty(v).expect("json values serialize"))
    }

    fn text(code: u8, body: String) -> Self {
        Outcome {
            code,
            stdout: format!("{body}\n"),
            stderr: String::new(),
        }
    }
}

enum Reply {
    Json(Value),
    Text(String),
}

impl From<Value> for Reply {
    fn from(v: Value) -> Self {
        Reply::Json(v)
    }
}

/// Parses `args` (program name first) and runs the command. `max_n` is the
/// raw value of `NCDET_MAX_N`, if set.
pub fn main_from<I, T>(args: I, max_n: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, max_n.as_deref()),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli, max_n: Option<&str>) -> Outcome {
    match execute(cli, max_n) {
        Ok((code, Reply::Json(v))) => Outcome::json(code, &v),
        Ok((code, Reply::Text(t))) => Outcome::text(code, t),
        Err(e) => {
            let msg = e.to_string();
            let mut out = Outcome::json(2, &json!({ "status": "error", "error": msg }));
            out.stderr = format!("error: {msg}\n");
            out
        }
    }
}

fn permanent_cap(max_n: Option<&str>) -> Result<usize, CliError> {
    match max_n {
        None => Ok(PERMANENT_CAP),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("NCDET_MAX_N must be a positive integer, got \"{s}\""))),
    }
}

fn undefined(command: &str, e: &ncdet_core::Error) -> (u8, Value) {
    let reason = match e {
        ncdet_core::Error::Undefined { .. } => e.to_string(),
        _ => format!("undefined: {e}"),
    };
    (1, json!({ "command": command, "status": "undefined", "reason": reason }))
}

fn is_undefined(e: &ncdet_core::Error) -> bool {
    matches!(e, ncdet_core::Error::Undefined { .. } | ncdet_core::Error::Singular)
}

fn execute(cli: &Cli, max_n: Option<&str>) -> Result<(u8, Reply), CliError> {
    let p = Printer { float: cli.float };
    let (code, v) = match &cli.command {
        Command::Quasidet { m, row, col } => {
            let a = read_matrix(&m.matrix)?;
            with_matrix!(&a, a => cmd_quasidet(a, *row, *col, p))
        }
        Command::Moore { m } => {
            let a = read_matrix(&m.matrix)?;
            if a.order() > MOORE_CAP {
                return Err(ncdet_core::Error::CapExceeded { n: a.order(), cap: MOORE_CAP }.into());
            }
            with_matrix!(&a, a => Ok((0, json!({ "command": "moore", "scalar": a_name(a), "value": p.value(&moore(a)?) }))))
        }
        Command::Study { m } => {
            let a = read_matrix(&m.matrix)?;
            let value = match &a {
                AnyMatrix::RationalQuaternion(a) => p.real::<ncdet_core::Quaternion<ncdet_core::Rational>>(&study(a)?),
                AnyMatrix::F64Quaternion(a) => p.real::<ncdet_core::Quaternion<f64>>(&study(a)?),
                other => {
                    return Err(CliError::Usage(format!(
                        "study needs a quaternion scalar kind, got {}",
                        other.kind().name()
                    )))
                }
            };
            Ok((0, json!({ "command": "study", "scalar": a.kind().name(), "value": value })))
        }
        Command::Dieudonne { m } => {
            let a = read_matrix(&m.matrix)?;
            with_matrix!(&a, a => cmd_dieudonne(a, p))
        }
        Command::Norm { m, method } => {
            let a = read_matrix(&m.matrix)?;
            with_matrix!(&a, a => cmd_norm(a, *method, p))
        }
        Command::Predet { m, rows, cols } => {
            let a = read_matrix(&m.matrix)?;
            let rows = Ordering::new(rows.clone())?;
            let cols = Ordering::new(cols.clone())?;
            with_matrix!(&a, a => cmd_predet(a, &rows, &cols, p))
        }
        Command::Permanent { m, row, col } => {
            let cap = permanent_cap(max_n)?;
            let a = read_matrix(&m.matrix)?;
            with_matrix!(&a, a => Ok((0, json!({
                "command": "permanent",
                "scalar": a_name(a),
                "row": row,
                "col": col,
                "value": p.value(&double_permanent_capped(a, *row, *col, cap)?),
            }))))
        }
        Command::Expand { n, row, col, text } => {
            let cap = permanent_cap(max_n)?;
            let terms = enumerate_paths_capped(*n, *row, *col, cap)?;
            let lines: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            if *text {
                return Ok((0, Reply::Text(lines.join("\n"))));
            }
            Ok((0, json!({
                "command": "expand",
                "n": n,
                "row": row,
                "col": col,
                "mu": mu_count(*n)?.to_string(),
                "count": lines.len(),
                "terms": lines,
            })))
        }
        Command::Verify { suite, n, trials, scalar, checks } => {
            let mut cfg = verify::Config::new(*suite, *n, *trials, cli.seed, *scalar);
            cfg.only = checks.clone();
            cfg.cap = permanent_cap(max_n)?;
            let report = verify::run(&cfg)?;
            let code = if !report.ok() || (report.trials > 0 && report.passes == 0) { 1 } else { 0 };
            Ok((code, serde_json::to_value(&report).expect("report serializes")))
        }
    }?;
    Ok((code, v.into()))
}

fn a_name<S: Element>(_: &LabeledMatrix<S>) -> &'static str {
    S::NAME
}

fn cmd_quasidet<S: Element>(a: &LabeledMatrix<S>, row: usize, col: usize, p: Printer) -> Result<(u8, Value), CliError> {
    let r = quasidet_block(a, row, col)?;
    Ok(match r.value {
        Some(v) => (0, json!({
            "command": "quasidet",
            "scalar": S::NAME,
            "row": row,
            "col": col,
            "defined": true,
            "value": p.value(&v),
        })),
        None => (1, json!({
            "command": "quasidet",
            "scalar": S::NAME,
            "row": row,
            "col": col,
            "defined": false,
            "reason": UNDEFINED_REASON,
        })),
    })
}

fn cmd_dieudonne<S: Element>(a: &LabeledMatrix<S>, p: Printer) -> Result<(u8, Value), CliError> {
    let (d, sq) = match delta(a).and_then(|d| Ok((d, dieudonne_sq(a)?))) {
        Ok(x) => x,
        Err(e) if is_undefined(&e) => return Ok(undefined("dieudonne", &e)),
        Err(e) => return Err(e.into()),
    };
    let mut out = json!({
        "command": "dieudonne",
        "scalar": S::NAME,
        "delta": p.value(&d),
        "squared": p.real::<S>(&sq),
    });
    if p.float {
        out["root"] = json!(sq.to_f64().sqrt());
    }
    Ok((0, out))
}

fn cmd_norm<S: Element>(a: &LabeledMatrix<S>, method: NormMethod, p: Printer) -> Result<(u8, Value), CliError> {
    let nu = match method {
        NormMethod::Moore => {
            if a.order() > MOORE_CAP {
                return Err(ncdet_core::Error::CapExceeded { n: a.order(), cap: MOORE_CAP }.into());
            }
            nu_via_moore(a)?
        }
        NormMethod::Recursive => match nu_matrix(a) {
            Ok(v) => v,
            Err(e) if is_undefined(&e) => return Ok(undefined("norm", &e)),
            Err(e) => return Err(e.into()),
        },
    };
    let method = match method {
        NormMethod::Moore => "moore",
        NormMethod::Recursive => "recursive",
    };
    Ok((0, json!({ "command": "norm", "scalar": S::NAME, "method": method, "value": p.real::<S>(&nu) })))
}

fn cmd_predet<S: Element>(a: &LabeledMatrix<S>, rows: &Ordering, cols: &Ordering, p: Printer) -> Result<(u8, Value), CliError> {
    match predet(a, rows, cols) {
        Ok(v) => Ok((0, json!({
            "command": "predet",
            "scalar": S::NAME,
            "rows": rows.as_slice(),
            "cols": cols.as_slice(),
            "parity": rows.parity() * cols.parity(),
            "value": p.value(&v),
        }))),
        Err(e) if is_undefined(&e) => Ok(undefined("predet", &e)),
        Err(e) => Err(e.into()),
    }
}
