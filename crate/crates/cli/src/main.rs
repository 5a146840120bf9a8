//! `ellq`: evaluate q-series quantities, run the identity suite, recognize
//! minimal polynomials and print the table of worked constants.

mod commands;
mod error;
mod eval;
mod nome;
mod params;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "ellq", version, about = "Elliptic singular values, q-series and Ramanujan quantities")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Significant decimal digits of the result.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,
    /// Seed of the parameter sampler.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads for `verify` (default: one per processor).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named quantity.
    Eval(commands::EvalArgs),
    /// Run identity checks.
    Verify(commands::VerifyArgs),
    /// Find an integer polynomial with the given value as a root.
    Minpoly(commands::MinpolyArgs),
    /// Worked constants next to their closed forms.
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(args) => commands::eval(args, &cli.common),
        Command::Verify(args) => commands::verify(args, &cli.common),
        Command::Minpoly(args) => commands::minpoly(args, &cli.common),
        Command::Table => commands::table(&cli.common),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ellq: {e}");
            ExitCode::from(exit_byte(&e))
        }
    }
}

fn exit_byte(e: &CliError) -> u8 {
    e.exit_code() as u8
}
