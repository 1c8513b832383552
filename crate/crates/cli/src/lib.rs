//! Command-line front end: labeling, verification, classification, oracle
//! runs, tree generation, stress testing and benchmarking.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 the tree does not meet
//! the even-path precondition, 3 internal invariant violation, 4 a check
//! found a failure (non-antimagic labeling, stress failure).

pub mod bench;
pub mod commands;
pub mod stress;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use antimagic_core::EvenPathStatus;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use commands::run;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Precondition {
        status: EvenPathStatus,
        input: String,
    },
    Internal(String),
    Findings(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Precondition { .. } => 2,
            CliError::Internal(_) => 3,
            CliError::Findings(_) => 4,
        }
    }

    /// Machine-readable description, printed on stdout.
    pub fn report(&self) -> serde_json::Value {
        match self {
            CliError::Usage(msg) => json!({ "error": "usage", "message": msg }),
            CliError::Parse(msg) => json!({ "error": "parse", "message": msg }),
            CliError::Precondition { status, input } => {
                let reason = match status {
                    EvenPathStatus::NotAPath(reason) => Some(*reason),
                    _ => None,
                };
                json!({
                    "error": "precondition",
                    "status": status.tag(),
                    "reason": reason,
                    "detail": status.to_string(),
                    "reproducer": format!("antimagic label {input}"),
                })
            }
            CliError::Internal(msg) => json!({ "error": "internal", "message": msg }),
            CliError::Findings(msg) => json!({ "error": "findings", "message": msg }),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Parse(m)
            | CliError::Internal(m)
            | CliError::Findings(m) => f.write_str(m),
            CliError::Precondition { status, .. } => {
                write!(f, "precondition not met: {status}")
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "antimagic",
    version,
    about = "Antimagic labelings of trees whose even-degree vertices induce a path"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    EdgeList,
    Structured,
    Dot,
}

impl From<OutputFormat> for antimagic_core::Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::EdgeList => antimagic_core::Format::EdgeList,
            OutputFormat::Structured => antimagic_core::Format::Structured,
            OutputFormat::Dot => antimagic_core::Format::Dot,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Edge-list file, or `-` for standard input.
    pub input: PathBuf,
}

impl InputArg {
    pub fn read(&self) -> Result<String, CliError> {
        if self.input.as_os_str() == "-" {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(&self.input)
                .map_err(|e| CliError::Parse(format!("{}: {e}", self.input.display())))
        }
    }

    pub fn display(&self) -> String {
        self.input.display().to_string()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an antimagic labeling and audit its residue structure.
    Label {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "structured")]
        format: OutputFormat,
    },
    /// Check a labeling (structured document or edge list with `# label=k` comments).
    Verify {
        #[command(flatten)]
        input: InputArg,
    },
    /// Report which antimagic result covers the tree and whether it can be constructed here.
    Classify {
        #[command(flatten)]
        input: InputArg,
    },
    /// Exhaustive backtracking search for an antimagic labeling of a small tree.
    Oracle {
        /// Edge-list file or `-`; omit to sample a random tree.
        input: Option<PathBuf>,
        /// Vertex count of the sampled tree when no input is given.
        #[arg(long, default_value_t = 8)]
        random_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search node limit.
        #[arg(long, default_value_t = antimagic_core::oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generate a random tree satisfying the even-path precondition.
    Gen {
        #[arg(long)]
        p: usize,
        /// Extra edges beyond the 2p - 1 spine edges (even).
        #[arg(long)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of forcing a leaf at one spine end.
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: OutputFormat,
    },
    /// Generate, label and verify many seeded trees.
    Stress {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        p_min: usize,
        #[arg(long, default_value_t = 10)]
        p_max: usize,
        #[arg(long, default_value_t = 1000)]
        budget_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cross-check trees with at most this many edges against the oracle.
        #[arg(long, default_value_t = 12)]
        oracle_max_m: usize,
    },
    /// Time label + verify and record peak memory on large generated trees.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match run(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            // findings have already written their own report
            if !matches!(e, CliError::Findings(_)) {
                let report = serde_json::to_string_pretty(&e.report()).unwrap_or_default();
                let _ = writeln!(out, "{report}");
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
