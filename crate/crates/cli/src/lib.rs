//! Command-line front end: generators, the construction, validators and
//! oracles wired into reproducible file-based pipelines.
//!
//! Exit codes: `0` success (or a valid certificate), `1` a certificate with
//! violations, `2` usage, I/O or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod commands;
pub mod manifest;
pub mod sweep;

pub use manifest::RunManifest;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}: {1}")]
    Input(String, treepart::Error),
    #[error(transparent)]
    Core(#[from] treepart::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}: malformed manifest: {1}")]
    Manifest(String, String),
}

pub(crate) fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

#[derive(Debug, Parser)]
#[command(name = "treepart", version, about = "Tree-partitions of bounded-degree graphs with bounded pathwidth")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph family with its canonical certificates.
    Gen {
        family: Family,
        #[arg(long)]
        n: usize,
        /// Depth of the lower-bound tree G_i.
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output prefix; writes PREFIX.graph and JSON sidecars.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Exact pathwidth of a small graph.
    Pw {
        graph: PathBuf,
        /// Write the optimal path-decomposition here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = treepart::pathwidth::EXACT_LIMIT)]
        limit: usize,
    },
    /// Build a tree-partition from a path-decomposition.
    Partition {
        graph: PathBuf,
        /// Path-decomposition to start from; exact pathwidth is used if absent.
        #[arg(long)]
        pd: Option<PathBuf>,
        /// Degree bound; defaults to the maximum degree.
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated 0-based vertex ids that must share the root bag.
        #[arg(long, value_delimiter = ',')]
        seed_set: Vec<usize>,
        /// Output prefix for the partition, witness, trace and manifest.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Check a certificate or construction trace against a graph.
    Verify { graph: PathBuf, artifact: PathBuf },
    /// Exhaustive ground truth for tiny graphs.
    Oracle { kind: OracleKind, graph: PathBuf },
    /// Run the construction over a family and append CSV rows.
    Sweep {
        family: Family,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Degree bound for every instance; defaults to each maximum degree.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-run the invocation recorded in a manifest.
    Replay { manifest: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Fan,
    Comb,
    LowerBound,
    RandomTree,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Fan => "fan",
            Family::Comb => "comb",
            Family::LowerBound => "lower-bound",
            Family::RandomTree => "random-tree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Pathwidth,
    PathPartitionWidth,
    TreePartitionWidth,
}

/// Runs one invocation and returns its exit code. `args` includes the
/// program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(std::io::stderr(), "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let recorded: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match commands::dispatch(cli.command, &recorded, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
