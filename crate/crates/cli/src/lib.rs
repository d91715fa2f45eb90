//! Library behind the `lcais` binary: instance files, workload generators,
//! solve reports and benchmark sweeps.

pub mod bench;
pub mod generate;
pub mod instance;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lcais::{Algorithm, Delta, LcaisError};
use thiserror::Error;

use crate::bench::{run_bench, write_csv, BenchError, BenchSpec};
use crate::generate::{generate, Distribution, GenError, GenSpec};
use crate::instance::{parse_instance, parse_sequence, write_instance, Instance, ParseError};
use crate::report::{run_solve, SolveError};

#[derive(Debug, Parser)]
#[command(
    name = "lcais",
    version,
    about = "Longest common almost-increasing subsequence"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance and print the result.
    Solve(SolveArgs),
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Run a sweep of generated instances and write CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Two-line instance file (A on the first data line, B on the second).
    #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present_all = ["a", "b"])]
    pub instance: Option<PathBuf>,
    /// File holding sequence A.
    #[arg(long, requires = "b")]
    pub a: Option<PathBuf>,
    /// File holding sequence B.
    #[arg(long, requires = "a")]
    pub b: Option<PathBuf>,
    /// Tolerance; must be a non-negative integer.
    #[arg(long, allow_negative_numbers = true)]
    pub delta: i64,
    #[arg(long, value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// Check the witness against the inputs before reporting it.
    #[arg(long)]
    pub verify: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub sigma: u64,
    #[arg(long, value_parser = parse_distribution)]
    pub dist: Distribution,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// TOML sweep description.
    #[arg(long)]
    pub spec: PathBuf,
    /// CSV output; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
        .map_err(|e: lcais::UnknownAlgorithm| e.to_string())
}

fn parse_distribution(s: &str) -> Result<Distribution, String> {
    s.parse().map_err(|e: GenError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Solver(#[from] LcaisError),
    #[error(transparent)]
    Verification(SolveError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("could not serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for a witness that fails verification, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 2,
            _ => 1,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Solver(e) => CliError::Solver(e),
            e @ SolveError::Verification(_) => CliError::Verification(e),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn write_output(path: Option<&Path>, text: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf),
        source,
    };
    match path {
        Some(p) => fs::write(p, text).map_err(io),
        None => stdout.write_all(text).map_err(io),
    }
}

pub fn load_instance(args: &SolveArgs) -> Result<Instance, CliError> {
    match (&args.instance, &args.a, &args.b) {
        (Some(path), _, _) => parsed(path, parse_instance(&read(path)?)),
        (None, Some(pa), Some(pb)) => Ok(Instance {
            a: parsed(pa, parse_sequence(&read(pa)?))?,
            b: parsed(pb, parse_sequence(&read(pb)?))?,
        }),
        _ => unreachable!("clap requires --instance or both --a and --b"),
    }
}

pub fn cmd_solve(args: &SolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let delta = Delta::new(args.delta)?;
    let inst = load_instance(args)?;
    let report = run_solve(args.algo, &inst.a, &inst.b, delta, args.verify)?;
    let mut text = if args.json {
        serde_json::to_string_pretty(&report)?
    } else {
        report.to_string()
    };
    text.push('\n');
    write_output(None, text.as_bytes(), stdout)
}

pub fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = GenSpec {
        n: args.n,
        m: args.m,
        sigma: args.sigma,
        dist: args.dist,
        seed: args.seed,
    };
    let inst = generate(&spec)?;
    let text = write_instance(&inst, Some(&format!("gen {}", spec.describe())));
    write_output(args.out.as_deref(), text.as_bytes(), stdout)
}

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = BenchSpec::parse(&read(&args.spec)?)?;
    let rows = run_bench(&spec)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    write_output(args.out.as_deref(), &buf, stdout)
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(args) => cmd_solve(args, stdout),
        Command::Gen(args) => cmd_gen(args, stdout),
        Command::Bench(args) => cmd_bench(args, stdout),
    }
}


#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
