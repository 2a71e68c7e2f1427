//! `renyi`: Rényi spectra, divergences and order inversion for labeled weights.
//!
//! Exit codes: 0 success, 1 malformed input or arguments, 2 invalid orders,
//! 3 numeric failure, 4 support violation, 5 target out of range.

mod commands;
mod error;
mod input;
mod orders;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use renyi_core::LogBase;

use crate::error::{CliError, Result};
use crate::output::Format;

#[derive(Parser)]
#[command(name = "renyi", version, about = "Shifted Rényi information measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy, equivalent probability, potential and derivative over a grid of orders.
    Spectrum {
        /// CSV (label,weight) or JSON array of {label, weight}.
        input: PathBuf,
        /// `named`, `default`, `a:b:n` or a comma list (inf and -inf allowed).
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        orders: String,
        /// Logarithm base, a number > 1 or `e`.
        #[arg(long, env = "RENYI_BASE", default_value = "2")]
        base: String,
        /// Also report the entropy of the unnormalized masses.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Writes PREFIX_spectrum.dat and PREFIX_eqprob.dat.
        #[arg(long, value_name = "PREFIX")]
        plot_data: Option<PathBuf>,
    },
    /// Divergence of P from Q over a grid of orders.
    Divergence {
        p: PathBuf,
        q: PathBuf,
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        orders: String,
        #[arg(long, env = "RENYI_BASE", default_value = "2")]
        base: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Orders at which the equivalent probability reaches a target.
    Invert {
        input: PathBuf,
        /// Probability as a decimal or a fraction like 1/6.
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        target: Option<String>,
        /// Recover the order of every distinct probability.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn parse_base(s: &str) -> Result<LogBase> {
    s.parse()
        .map_err(|_| CliError::Input(format!("invalid base {s:?}: expected a number > 1 or e")))
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Spectrum {
            input,
            orders,
            base,
            normalize,
            format,
            plot_data,
        } => {
            let base = parse_base(&base)?;
            let grid = orders::parse_orders(&orders)?;
            commands::spectrum(&commands::SpectrumArgs {
                input: &input,
                grid: &grid,
                base,
                normalize,
                format,
                plot_data: plot_data.as_deref(),
            })
        }
        Command::Divergence {
            p,
            q,
            orders,
            base,
            format,
        } => {
            let base = parse_base(&base)?;
            let grid = orders::parse_orders(&orders)?;
            commands::divergence(&p, &q, &grid, base, format)
        }
        Command::Invert { input, target, tol, .. } => {
            let target = target.as_deref().map(commands::parse_target).transpose()?;
            commands::invert(&input, target, tol)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("renyi: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
