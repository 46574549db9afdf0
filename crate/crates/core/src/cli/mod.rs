//! Command-line front end: `check`, `construct` and `search`.
//!
//! Exit codes: 0 when every task passes (or does not apply), 1 when an
//! axiom or verdict fails, 2 on input errors and hypothesis failures.

pub mod commands;
pub mod format;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus;
use crate::exactfield::{FieldKind, Scalar};
use crate::par::{limit_threads, Execution};
use crate::structures::{AlgebraData, StructureMaps};
use crate::yangbaxter::{SearchMode, SearchOptions};

use self::commands::SearchRequest;
use self::report::{Outcome, Report, TaskReport};

pub const THREADS_ENV: &str = "BIHOM_THREADS";

#[derive(Parser, Debug)]
#[command(name = "bihom", version, about = "Exact checks and constructions for BiHom-associative structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every task declared in an instance file.
    Check {
        path: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a theorem's hypotheses, build its structure and verify it.
    Construct {
        path: PathBuf,
        theorem: String,
        /// Write the constructed instance here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate solutions of the weighted Yang-Baxter pair equations.
    Search {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        field: String,
        /// `λ` or `λ,γ`; a single value is used for both.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Diagonal)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = MapsArg::Identity)]
        maps: MapsArg,
        /// `diagonal`, `zero`, a built-in algebra name, or an instance file.
        #[arg(long, default_value = "diagonal")]
        algebra: String,
        #[arg(long)]
        max_candidates: Option<u128>,
        /// Re-check each solution through its Rota-Baxter operator.
        #[arg(long)]
        verify: bool,
        /// Write the solution listing here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Diagonal,
    Pairs,
}

/// `identity` replaces the algebra's maps by identities; `algebra` keeps
/// the maps that come with the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapsArg {
    Identity,
    Algebra,
}

/// A failure before any task ran; always exit 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn execution() -> Result<Execution, InputError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(Execution::Parallel),
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| InputError(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
            if n == 0 {
                return Err(InputError(format!("{THREADS_ENV} must be positive")));
            }
            limit_threads(n);
            Ok(if n == 1 { Execution::Sequential } else { Execution::Parallel })
        }
    }
}

fn read_instance(path: &Path) -> Result<format::Instance, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    format::parse_instance(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn builtin_algebra(name: &str, kind: FieldKind, dim: Option<usize>) -> Result<(AlgebraData, StructureMaps), InputError> {
    let fixed = |(alg, maps): (AlgebraData, StructureMaps)| match dim {
        Some(d) if d != alg.dim() => Err(InputError(format!("algebra {name} has dimension {}, not {d}", alg.dim()))),
        _ => Ok((alg, maps)),
    };
    match name {
        "diagonal" | "zero" => {
            let n = dim.ok_or_else(|| InputError(format!("--dim is required with --algebra {name}")))?;
            if n == 0 {
                return Err(InputError("--dim must be positive".into()));
            }
            if name == "zero" {
                let alg = AlgebraData::new(crate::exactfield::BilinearMap::zero(kind, n), None)?;
                Ok((alg, StructureMaps::identity(kind, n)))
            } else {
                Ok(corpus::diagonal(kind, n))
            }
        }
        other => match corpus::builtin(kind).into_iter().find(|b| b.name == other) {
            Some(b) => fixed((b.alg, b.maps)),
            None => {
                let path = Path::new(other);
                if !path.exists() {
                    return Err(InputError(format!("unknown algebra {other:?}: not a built-in name or a file")));
                }
                let inst = read_instance(path)?;
                if inst.kind != kind {
                    return Err(InputError(format!("{other} is over {}, not {kind}", inst.kind)));
                }
                fixed((inst.alg, inst.maps))
            }
        },
    }
}

fn parse_weight(text: &str, kind: FieldKind) -> Result<(Scalar, Scalar), InputError> {
    let parts: Vec<&str> = text.split(',').collect();
    let one = |s: &str| Scalar::parse_in(s.trim(), kind).map_err(|e| InputError(format!("--weight: {e}")));
    match parts.as_slice() {
        [l] => Ok((one(l)?, one(l)?)),
        [l, g] => Ok((one(l)?, one(g)?)),
        _ => Err(InputError(format!("--weight takes one or two scalars, got {text:?}"))),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), InputError> {
    std::fs::write(path, contents).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_string(),
        Format::Json => report.to_json(),
    }
}

fn run(cli: Cli) -> Result<(Report, Option<PathBuf>), InputError> {
    let exec = execution()?;
    let start = Instant::now();
    let (mut report, report_path) = match cli.command {
        Command::Check { path, output } => {
            let inst = read_instance(&path)?;
            (commands::cmd_check(&path.display().to_string(), &inst, exec), output)
        }
        Command::Construct { path, theorem, output } => {
            let inst = read_instance(&path)?;
            let (report, built) = commands::cmd_construct(&path.display().to_string(), &inst, &theorem).map_err(InputError)?;
            if let (Some(out), Some(built)) = (output, built) {
                write_file(&out, &format::emit_text(&built))?;
            }
            (report, None)
        }
        Command::Search {
            dim,
            field,
            weight,
            mode,
            maps,
            algebra,
            max_candidates,
            verify,
            output,
        } => {
            let kind: FieldKind = field.parse()?;
            let (alg, algebra_maps) = builtin_algebra(&algebra, kind, dim)?;
            let n = alg.dim();
            let maps = match maps {
                MapsArg::Identity => StructureMaps::identity(kind, n),
                MapsArg::Algebra => algebra_maps,
            };
            let (lambda, gamma) = parse_weight(&weight, kind)?;
            let mode = match mode {
                ModeArg::Diagonal => SearchMode::Diagonal,
                ModeArg::Pairs => SearchMode::Pairs,
            };
            let req = SearchRequest {
                alg,
                maps,
                lambda,
                gamma,
                mode,
                max_candidates: max_candidates.unwrap_or(SearchOptions::default().max_candidates),
                verify,
            };
            let report = commands::cmd_search(&req, exec);
            if let (Some(out), Some(summary)) = (&output, &report.search) {
                let mut text = serde_json::to_string_pretty(summary)?;
                text.push('\n');
                write_file(out, &text)?;
            }
            (report, None)
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((report, report_path))
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, path)) => {
            let text = render(&report, format);
            match path {
                Some(p) => {
                    if let Err(InputError(e)) = write_file(&p, &text) {
                        eprintln!("error: {e}");
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            report.exit_code()
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            if format == Format::Json {
                let report = Report {
                    command: "error".into(),
                    input: None,
                    tasks: vec![TaskReport::message("input", Outcome::HypothesisError, msg)],
                    search: None,
                    elapsed_ms: 0,
                };
                print!("{}", report.to_json());
            }
            2
        }
    }
}
