//! `cauchy` — exact tables, quadrature diagnostics, and verification suites
//! for Cauchy numbers of the second kind.

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use cauchy_core::Error;
use commands::{EvalRequest, Selection};
use config::{parse_exact, resolve_precision, Format};

#[derive(Parser)]
#[command(
    name = "cauchy",
    version,
    about = "Exact and high-precision toolkit for Cauchy numbers of the second kind"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Working precision in bits (env CAUCHY_PRECISION, default 128).
    #[arg(long)]
    precision: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact table c_0..c_n by both routes and print it.
    Compute {
        /// Largest index to compute.
        #[arg(long, value_name = "N")]
        n_max: usize,
        /// Opt-in table bound for indices beyond the default 256.
        #[arg(long)]
        table_bound: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Integrate the moment representation of c_n/n! and compare with the
    /// exact value.
    Quad {
        /// Moment index.
        #[arg(long)]
        n: usize,
        /// Absolute tolerance (exact decimal string).
        #[arg(long, default_value = config::DEFAULT_TOL)]
        tol: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run verification suites and emit a structured report.
    Verify {
        /// Suites to run (repeatable or comma-separated); default: all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Bound for the bound-scaled suites (difference depth, log-convexity).
        #[arg(long, default_value_t = config::DEFAULT_N_BOUND)]
        n_bound: usize,
        /// Minimality probe epsilon (exact decimal or p/q).
        #[arg(long, default_value = config::DEFAULT_EPSILON)]
        epsilon: String,
        /// Minimality probe depth.
        #[arg(long, default_value_t = config::DEFAULT_DEPTH)]
        depth: usize,
        /// Seed for randomized sweep extensions.
        #[arg(long, default_value_t = config::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate one of the integral representations.
    Eval {
        #[command(subcommand)]
        kind: EvalKind,
    },
}

#[derive(Subcommand)]
enum EvalKind {
    /// F(z) = z/((1+z)ln(1+z)) by quadrature, with closed-form comparison.
    #[command(name = "F")]
    F {
        /// Argument z > -1 (exact decimal or p/q).
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Absolute tolerance.
        #[arg(long, default_value = config::DEFAULT_TOL)]
        tol: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// h_n(t), the n-th integral kernel at shift t >= 0.
    H {
        #[arg(long)]
        n: usize,
        /// Shift t >= 0 (exact decimal or p/q).
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = config::DEFAULT_TOL)]
        tol: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// h(s, t) with real order s >= 0.
    Hs {
        /// Order s >= 0 (exact decimal or p/q).
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = config::DEFAULT_TOL)]
        tol: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Internal(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute {
            n_max,
            table_bound,
            common,
        } => {
            let precision = resolve_precision(common.precision)?;
            let r = commands::compute(
                n_max,
                table_bound,
                precision,
                common.format,
                common.out.as_deref(),
            )?;
            if !r.text.is_empty() {
                eprint!("{}", r.text);
            }
            Ok(r.exit)
        }
        Command::Quad { n, tol, common } => {
            let precision = resolve_precision(common.precision)?;
            let tol = parse_exact("tol", &tol)?;
            let r = commands::quad(n, &tol, precision, common.format, common.out.as_deref())?;
            Ok(r.exit)
        }
        Command::Verify {
            suites,
            n_bound,
            epsilon,
            depth,
            seed,
            common,
        } => {
            let precision = resolve_precision(common.precision)?;
            let selection = Selection::parse(&suites)?;
            let epsilon = parse_exact("epsilon", &epsilon)?;
            let r = commands::verify(
                &selection,
                n_bound,
                &epsilon,
                depth,
                seed,
                precision,
                common.format,
                common.out.as_deref(),
            )?;
            Ok(r.exit)
        }
        Command::Eval { kind } => {
            let (request, tol, common) = match kind {
                EvalKind::F { z, tol, common } => (
                    EvalRequest::F {
                        z: parse_exact("z", &z)?,
                    },
                    tol,
                    common,
                ),
                EvalKind::H { n, t, tol, common } => (
                    EvalRequest::H {
                        n,
                        t: parse_exact("t", &t)?,
                    },
                    tol,
                    common,
                ),
                EvalKind::Hs { s, t, tol, common } => (
                    EvalRequest::Hs {
                        s: parse_exact("s", &s)?,
                        t: parse_exact("t", &t)?,
                    },
                    tol,
                    common,
                ),
            };
            let precision = resolve_precision(common.precision)?;
            let tol = parse_exact("tol", &tol)?;
            let r = commands::eval(&request, &tol, precision, common.format, common.out.as_deref())?;
            Ok(r.exit)
        }
    }
}
