//! `hoconvex`: exact verification campaigns separating higher-order
//! Wright-convex from Jensen-convex functions.
//!
//! Exit status: 0 on success, 1 on configuration or parse errors, 2 when an
//! outcome contradicts a proved theorem (which can only be a bug).

mod commands;
mod config;
mod funcspec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hoconvex",
    version,
    about = "Exact higher-order Jensen/Wright convexity checks over Q(sqrt d)"
)]
pub struct Cli {
    /// TOML file with default values for the flags below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads for sample evaluation (1 runs sequentially).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a certification campaign on the counterexample family.
    Verify(VerifyArgs),
    /// Run the exact identity suites for the difference operator.
    Identities(IdentitiesArgs),
    /// Evaluate a single exact quantity.
    #[command(subcommand)]
    Eval(EvalCommand),
    /// Re-read a JSON report and re-check every recorded violation.
    CheckReport { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Radicand d of Q(sqrt d).
    #[arg(long)]
    pub d: Option<u64>,
    /// Random samples to draw (default 200).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Sampler seed (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest |numerator| of sampled rationals.
    #[arg(long)]
    pub num_bound: Option<u32>,
    /// Largest denominator of sampled rationals.
    #[arg(long)]
    pub den_bound: Option<u32>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Output format (default json).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Omit the non-canonical run section (timestamp, duration, threads).
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// jensen, wright, strong-jensen or strong-wright.
    #[arg(long)]
    pub kind: Option<String>,
    /// Convexity order n >= 1.
    #[arg(long)]
    pub n: Option<u32>,
    /// Modulus for the strong kinds, as p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long)]
    pub n_max: Option<u32>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// Rational coordinate alpha(x).
    Alpha {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Complementary projection beta(x) = x - alpha(x).
    Beta {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Exact sign of x.
    Sign {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Value of the counterexample function of order n at x.
    F {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Iterated difference of a function at x.
    Delta {
        /// pow K | poly c0,c1,.. | const V | counterexample N | strong-counterexample N C
        #[arg(long)]
        f: String,
        /// Comma-separated steps, or witness (needs --n).
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Order used to expand `--steps witness`.
        #[arg(long)]
        n: Option<u32>,
        /// Evaluate through the subset-sum expansion instead of the recursion.
        #[arg(long)]
        subset_sum: bool,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Closed form (n+1)! (prod alpha(h_i) + prod beta(h_i)).
    ClosedFormWright {
        #[arg(long)]
        n: u32,
        /// Comma-separated steps, or witness.
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Closed form (n+1)! (alpha(h)^(n+1) + beta(h)^(n+1)).
    ClosedFormJensen {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// The refuting step vector of length n+1.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            let message = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
