//! `comprelie`: evaluate, check and classify Com-PreLie structures.
//!
//! Exit codes: 0 success, 1 a law or relation fails, 2 usage, config, parse
//! or evaluation error.

mod config;
mod eval;
mod expr;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use comprelie::law::{all_passed, run_suite, LawReport, Suite};
use comprelie::lie_view::{check_antisymmetry, check_fdb_presentation, check_g2_presentation, check_jacobi};
use comprelie::lincomb::Basis;
use comprelie::polyx::{classify, FamilySpec, LambdaSeq};
use comprelie::scalar::parse_rational;
use comprelie::structures::{KxProduct, KxStructure, TvStructure};
use comprelie::{AlgebraError, LinMap};
use serde_json::Value as Json;

use config::{parse_config, Configured};
use eval::{eval, Atoms, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error("error at byte {offset}: {message}")]
    Eval { offset: usize, message: String },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "comprelie", version, about = "Exact Com-PreLie and Zinbiel-PreLie algebra toolkit")]
struct Cli {
    /// Structure configuration file (key = value lines).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Total-degree bound for law checks.
    #[arg(long, global = true, env = "COMPRELIE_CAP", default_value_t = 5)]
    cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "pl(x1x0, x0)" or "cop(x0x1)".
    Eval { expr: String },
    /// Run a law suite: comprelie, zinbiel, bialgebra or all.
    Check {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Classify a λ-sequence prefix λ_0 λ_1 … λ_M.
    Classify {
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Evaluate a bracket, or check Jacobi and the bracket presentations.
    Bracket {
        a: Option<String>,
        b: Option<String>,
        /// Check antisymmetry and the Jacobi identity up to --cap.
        #[arg(long)]
        jacobi: bool,
        /// Check the semidirect-product presentation of a kx_family config.
        #[arg(long)]
        presentation: bool,
        /// Index bound for --presentation.
        #[arg(long, default_value_t = 8)]
        imax: usize,
    },
}

macro_rules! with_structure {
    ($cfg:expr, $s:ident => $body:expr) => {
        match $cfg {
            Configured::Tv($s) => $body,
            Configured::S($s) => $body,
            Configured::Kx($s) => $body,
        }
    };
}

fn load(path: &Option<PathBuf>) -> Result<Option<Configured>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    parse_config(&text).map(Some)
}

fn require(cfg: Option<Configured>) -> Result<Configured, CliError> {
    cfg.ok_or_else(|| CliError::Usage("this command needs --config".into()))
}

/// Without a config, words live in `T(V)` with `f = 0`, sized to the
/// largest letter used.
fn default_structure(exprs: &[&expr::Expr]) -> Configured {
    let dim = exprs.iter().filter_map(|e| e.max_letter()).max().map_or(1, |m| m + 1);
    Configured::Tv(TvStructure::tvf(LinMap::zero(dim)))
}

fn print_value<B: Basis>(v: &Value<B>, format: Format) {
    match (format, v) {
        (Format::Json, v) => println!("{}", output::value_json(v)),
        (Format::Text, Value::Elem(e)) => println!("{e}"),
        (Format::Text, Value::Tensor(t)) => println!("{t}"),
    }
}

fn print_reports<B: Basis>(reports: &[LawReport<B>], format: Format) {
    match format {
        Format::Json => {
            let arr: Vec<Json> = reports.iter().map(output::report_json).collect();
            println!("{}", Json::Array(arr));
        }
        Format::Text => {
            if let Some(r) = reports.first() {
                println!("{} (cap {})", r.structure, r.cap);
            }
            for r in reports {
                println!("  {r}");
            }
        }
    }
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn eval_and_print<S: Atoms>(s: &S, e: &expr::Expr, format: Format) -> Result<(), CliError> {
    print_value(&eval(s, e)?, format);
    Ok(())
}

fn check<S: Atoms>(s: &S, suite: Suite, cap: usize, format: Format) -> Result<bool, CliError> {
    let reports = run_suite(s, suite, cap)?;
    print_reports(&reports, format);
    Ok(all_passed(&reports))
}

fn jacobi<S: Atoms>(s: &S, cap: usize, format: Format) -> Result<bool, CliError> {
    let reports = vec![check_antisymmetry(s, cap)?, check_jacobi(s, cap)?];
    print_reports(&reports, format);
    Ok(all_passed(&reports))
}

fn presentation(s: &KxStructure, imax: usize, format: Format) -> Result<bool, CliError> {
    let spec = match s.product() {
        KxProduct::Graded(LambdaSeq::Family(spec)) => spec,
        _ => {
            return Err(CliError::Usage(
                "--presentation needs family = G1, G2 or G3".into(),
            ))
        }
    };
    Ok(match spec {
        FamilySpec::G2 { n, mu, .. } => {
            let r = check_g2_presentation(*n, mu.clone(), imax)?;
            print_reports(std::slice::from_ref(&r), format);
            r.passed()
        }
        other => {
            let r = check_fdb_presentation(other, imax)?;
            print_reports(std::slice::from_ref(&r), format);
            r.passed()
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = load(&cli.config)?;
    let format = cli.format;
    match cli.command {
        Command::Eval { expr: src } => {
            let e = expr::parse(&src)?;
            let cfg = cfg.unwrap_or_else(|| default_structure(&[&e]));
            with_structure!(&cfg, s => eval_and_print(s, &e, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { suite } => {
            let suite: Suite = suite.parse()?;
            let cfg = require(cfg)?;
            let pass = with_structure!(&cfg, s => check(s, suite, cli.cap, format))?;
            Ok(status(pass))
        }
        Command::Classify { values } => {
            let prefix = values
                .iter()
                .map(|v| parse_rational(v))
                .collect::<Result<Vec<_>, _>>()?;
            let r = classify(&prefix);
            match format {
                Format::Json => println!("{}", output::classify_json(&r)),
                Format::Text => println!("{}", output::classify_text(&r)),
            }
            Ok(status(!matches!(r, comprelie::polyx::ClassifyResult::Inconsistent { .. })))
        }
        Command::Bracket {
            a,
            b,
            jacobi: want_jacobi,
            presentation: want_presentation,
            imax,
        } => {
            let mut pass = true;
            let mut did = false;
            if let (Some(a), Some(b)) = (&a, &b) {
                let e = expr::Expr::Call(expr::Func::Br, vec![expr::parse(a)?, expr::parse(b)?], expr::Pos(0));
                let cfg = match &cfg {
                    Some(c) => c.clone(),
                    None => default_structure(&[&e]),
                };
                with_structure!(&cfg, s => eval_and_print(s, &e, format))?;
                did = true;
            } else if a.is_some() {
                return Err(CliError::Usage("bracket takes two expressions".into()));
            }
            if want_jacobi {
                let cfg = require(cfg.clone())?;
                pass &= with_structure!(&cfg, s => jacobi(s, cli.cap, format))?;
                did = true;
            }
            if want_presentation {
                match require(cfg)? {
                    Configured::Kx(s) => pass &= presentation(&s, imax, format)?,
                    _ => return Err(CliError::Usage("--presentation needs kind = kx_family".into())),
                }
                did = true;
            }
            if !did {
                return Err(CliError::Usage(
                    "bracket needs two expressions, --jacobi or --presentation".into(),
                ));
            }
            Ok(status(pass))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("comprelie: {e}");
            ExitCode::from(2)
        }
    }
}
