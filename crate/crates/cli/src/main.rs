//! `aalpha`: spectra, claim verification and the least-eigenvalue scan from
//! the command line.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check is
//! violated (or a formula disagrees with the solver), 2 on usage or input
//! errors.

mod commands;
mod config;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use aalpha::lab::Claim;
use clap::{Args, Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Core(aalpha::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "output error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<aalpha::Error> for CliError {
    fn from(e: aalpha::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Clean,
    Violations,
}

#[derive(Parser, Debug)]
#[command(name = "aalpha", version, about = "Spectra of A_alpha(G) = alpha*D + (1 - alpha)*A for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Named family, e.g. cycle:5, complete:4, bipartite:2,3, split:2,6,
    /// complete-minus-edge:4, star:5, path:4, empty:3.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file: a line `n m`, then `m` lines `u v` (0-indexed).
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Report file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// jsonl (17 significant digits) or csv (6 significant digits).
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full spectrum of A_alpha for each alpha.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated alpha values.
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form family eigenvalues against the solver.
    Family {
        #[arg(long)]
        family: String,
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check claims over all graphs in each claim's class.
    #[command(after_help = claim_table())]
    Verify(VerifyArgs),
    /// Least-eigenvalue scan: every connected graph against the star.
    Scan(ScanArgs),
    /// Smallest alpha making A_alpha positive semidefinite.
    Alpha0 {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of claim ids.
    #[arg(long)]
    claims: Option<String>,
    /// Orders, `N` or `LO..HI` (inclusive). Default 2..7.
    #[arg(long)]
    n: Option<String>,
    /// Comma-separated alpha grid. Default 0.5,0.6,0.75,0.9.
    #[arg(long)]
    alpha: Option<String>,
    /// Eigenvalue equality tolerance. Default 1e-9.
    #[arg(long)]
    tolerance: Option<String>,
    /// Flat `key = value` file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory for enumeration caches.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Orders within 3..8. Default 3..7.
    #[arg(long)]
    n: Option<String>,
    /// Alpha values in (1/2, 1). Default 0.55,0.6,0.75,0.9.
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also write the verdict of every scanned graph.
    #[arg(long)]
    all_verdicts: bool,
    #[command(flatten)]
    out: OutputArgs,
}

fn claim_table() -> String {
    let mut s = String::from("Claims and the graph class each one enumerates:\n");
    for c in Claim::ALL {
        s.push_str(&format!("  {:<22} {:<18} {}\n", c.id(), c.class().name(), c.summary()));
    }
    s
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Spectrum { input, alpha, out } => commands::spectrum(&input, alpha.as_deref(), &out),
        Command::Family { family, alpha, out } => commands::family(&family, alpha.as_deref(), &out),
        Command::Verify(args) => commands::verify(&args),
        Command::Scan(args) => commands::scan(&args),
        Command::Alpha0 { input, out } => commands::alpha0(&input, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
