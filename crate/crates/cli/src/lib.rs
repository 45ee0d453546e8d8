//! Command-line driver: request parsing, stage orchestration and reports.

mod pipeline;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use macaulay_core::arith::Rational;
use thiserror::Error;

pub use pipeline::run;
pub use report::AnalysisReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Complete,
    Characters,
    Purity,
    TorsionChain,
    Parametrize,
    InverseSystem,
    Generators,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "macaulay", about = "Analyse linear PD systems with constant coefficients")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// System file in the DSL or JSON format, `-` for stdin.
    input: Option<PathBuf>,
    /// Inline system text instead of a file.
    #[arg(short = 'e', long = "expr", conflicts_with = "input")]
    expr: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-order")]
    max_order: Option<usize>,
    #[arg(long = "max-rounds", default_value_t = 50)]
    max_rounds: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Parameter assignment such as `a=0`; may be repeated.
    #[arg(long = "set", value_parser = parse_assignment)]
    set: Vec<(String, Rational)>,
}

fn parse_assignment(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{}`", s))?;
    let value: Rational = value.trim().parse().map_err(|_| format!("`{}` is not a rational number", value))?;
    Ok((name.trim().to_string(), value))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Path(PathBuf),
    Stdin,
    Inline(String),
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub command: Command,
    pub input: Input,
    pub seed: u64,
    pub max_order: Option<usize>,
    pub max_rounds: usize,
    pub format: Format,
    pub specialize: Vec<(String, Rational)>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("{0}")]
    Parse(macaulay_core::Error),
    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        source: macaulay_core::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help(_) => 0,
            CliError::Usage(_) | CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Stage { .. } => 3,
        }
    }
}

pub fn parse_request<I, S>(argv: I) -> Result<AnalysisRequest, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(std::iter::once("macaulay".into()).chain(argv.into_iter().map(Into::into)))
        .map_err(|e| match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Help(e.render().to_string()),
            _ => CliError::Usage(e.render().to_string()),
        })?;
    let input = match (args.expr, args.input) {
        (Some(text), _) => Input::Inline(text),
        (None, Some(p)) if p.as_os_str() == "-" => Input::Stdin,
        (None, Some(p)) => Input::Path(p),
        (None, None) => return Err(CliError::Usage("missing input: give a file, `-` or --expr".into())),
    };
    Ok(AnalysisRequest {
        command: args.command,
        input,
        seed: args.seed,
        max_order: args.max_order,
        max_rounds: args.max_rounds,
        format: args.format,
        specialize: args.set,
    })
}
