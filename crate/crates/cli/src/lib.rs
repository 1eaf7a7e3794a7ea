//! The `unitc` command: convert quantities between measurement systems,
//! inspect dimension vectors, list the catalog and check typed predicates.
//!
//! Exit codes: 0 success, 1 other failure (unreadable registry file),
//! 2 usage or unit-expression syntax error, 3 dimension mismatch, 4 unknown
//! unit name or predicate. Results go to stdout, diagnostics to stderr.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use isq_core::catalog::{si_unit, Catalog};
use isq_core::{dim_view, parse_unit, DimensionNames, DimensionVector, Error, MeasurementSystem, TypedPredicate};

pub use isq_core::catalog::CATALOG_ENV;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "unitc", version, about = "Unit conversion and dimension inspection")]
pub struct Cli {
    /// Emit one JSON record per result instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a magnitude from one unit expression to another.
    #[command(allow_negative_numbers = true)]
    Convert {
        magnitude: f64,
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Print the SI dimension string of a unit expression.
    Dim { expr: String },
    /// List every registered measurement system.
    Systems {
        /// Print the registry in its file format.
        #[arg(long)]
        registry: bool,
    },
    /// Evaluate a typed predicate (e.g. Pressure) on a unit expression.
    Check { expr: String, predicate: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } => EXIT_SYNTAX,
            Error::DimensionMismatch { .. } => EXIT_MISMATCH,
            Error::UnknownSymbol { .. } | Error::UnknownPredicate(_) => EXIT_UNKNOWN,
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e.to_string())
    }
}

/// Loads the registry named by `path`, or the built-in catalog.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog, CliError> {
    match path {
        None => Ok(Catalog::builtin().clone()),
        Some(p) => {
            let file = File::open(p)
                .map_err(|e| CliError::new(EXIT_FAILURE, format!("cannot open registry {}: {e}", p.display())))?;
            Catalog::read_jsonl(BufReader::new(file))
                .map_err(|e| CliError::new(EXIT_FAILURE, format!("{}: {e}", p.display())))
        }
    }
}

/// Resolves a unit expression to a measurement system through the catalog.
///
/// Each symbol is raised to its exponent and the results are multiplied
/// left to right, so the first symbol's schema leads.
pub fn resolve(catalog: &Catalog, text: &str) -> Result<MeasurementSystem, CliError> {
    let expr = parse_unit(text)?;
    let mut acc: Option<MeasurementSystem> = None;
    for term in expr.terms() {
        let named = catalog.lookup(&term.symbol).ok_or_else(|| Error::UnknownSymbol {
            symbol: term.symbol.clone(),
            offset: term.offset,
            known: catalog.symbols(),
        })?;
        let factor = named.system.itself_n(term.exponent)?;
        acc = Some(match acc {
            None => factor,
            Some(a) => a.times(&factor)?,
        });
    }
    Ok(acc.unwrap_or_else(|| si_unit(DimensionVector::ZERO)))
}

/// Up to 10 significant digits, trailing zeros trimmed.
pub fn format_human(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("valid float");
    let a = rounded.abs();
    if (1e-6..1e15).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn view(dv: &DimensionVector) -> String {
    dim_view(&DimensionNames::si(), dv)
}

/// Converts `magnitude` of `from` into `to`; returns the result and the
/// per-unit factor.
pub fn convert(catalog: &Catalog, magnitude: f64, from: &str, to: &str) -> Result<(f64, f64, DimensionVector), CliError> {
    let source = resolve(catalog, from)?;
    let target = resolve(catalog, to)?;
    if source.dim() != target.dim() {
        return Err(CliError::new(
            EXIT_MISMATCH,
            format!(
                "dimension mismatch: `{from}` is {} but `{to}` is {}",
                view(&source.dim()),
                view(&target.dim())
            ),
        ));
    }
    let factor = source.factor_to(&target)?;
    let value = factor * magnitude;
    if !value.is_finite() {
        return Err(Error::NonFinite(value).into());
    }
    Ok((value, factor, source.dim()))
}

fn execute(cli: &Cli, catalog: &Catalog, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| match e.kind() {
        // downstream closed the pipe
        std::io::ErrorKind::BrokenPipe => CliError::new(EXIT_OK, ""),
        _ => CliError::new(EXIT_FAILURE, e.to_string()),
    };
    match &cli.command {
        Command::Convert { magnitude, from, to } => {
            let (value, factor, dim) = convert(catalog, *magnitude, from, to)?;
            if cli.json {
                let record = json!({
                    "command": "convert",
                    "input": { "magnitude": magnitude, "unit": from },
                    "output": { "magnitude": value, "unit": to },
                    "dimension": view(&dim),
                    "factor": factor,
                });
                writeln!(out, "{record}").map_err(io)?;
            } else {
                writeln!(out, "{} {to}", format_human(value)).map_err(io)?;
            }
        }
        Command::Dim { expr } => {
            let ms = resolve(catalog, expr)?;
            let text = view(&ms.dim());
            if cli.json {
                let record = json!({
                    "command": "dim",
                    "input": expr,
                    "dimension": text,
                    "exponents": ms.dim(),
                });
                writeln!(out, "{record}").map_err(io)?;
            } else {
                writeln!(out, "{text}").map_err(io)?;
            }
        }
        Command::Systems { registry } => {
            if *registry || cli.json {
                catalog.write_jsonl(&mut *out).map_err(io)?;
            } else {
                let width = catalog.entries().iter().map(|e| e.name.len()).max().unwrap_or(0);
                for e in catalog.entries() {
                    writeln!(
                        out,
                        "{:<width$}  {:<4}  {:<24}  {}",
                        e.name,
                        e.system.unit,
                        view(&e.system.dim()),
                        format_human(e.system.magnitude()),
                    )
                    .map_err(io)?;
                }
            }
        }
        Command::Check { expr, predicate } => {
            let pred: TypedPredicate = predicate.parse()?;
            let ms = resolve(catalog, expr)?;
            let holds = pred.holds(&ms);
            if cli.json {
                let record = json!({
                    "command": "check",
                    "input": expr,
                    "predicate": pred.name(),
                    "dimension": view(&ms.dim()),
                    "result": holds,
                });
                writeln!(out, "{record}").map_err(io)?;
            } else {
                writeln!(out, "{holds}").map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, catalog_path: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = load_catalog(catalog_path.as_deref()).and_then(|cat| execute(&cli, &cat, out));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            if !e.message.is_empty() {
                let _ = writeln!(err, "unitc: {}", e.message);
            }
            e.code
        }
    }
}
