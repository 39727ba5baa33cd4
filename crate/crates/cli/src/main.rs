//! `chute`: pipe dreams, their crystal, and key decompositions of Schubert
//! polynomials from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "chute",
    version,
    about = "Reduced pipe dreams, crystal chute moves and key polynomials"
)]
pub struct Cli {
    /// Output format; `dot` is only available for `crystal`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel work (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pipedreams,
    Compatible,
    Rfc,
    Divdiff,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Schubert polynomial of a permutation.
    Schubert {
        /// One-line window, `2,1,5,4,3` or `21543`.
        w: String,
        #[arg(long, value_enum, default_value = "pipedreams")]
        method: Method,
        /// Compute with every method and require them to agree.
        #[arg(long)]
        check_all: bool,
    },
    /// List the reduced pipe dreams of a permutation.
    Pipedreams { w: String },
    /// Export the crystal graph on reduced pipe dreams.
    Crystal { w: String },
    /// Split the crystal into components and expand into key polynomials.
    Decompose { w: String },
    /// List the reduced factorizations with cutoff matching `RP(w)`.
    Rfc { w: String },
    /// Map a pipe dream to its factorization or back.
    Phi {
        /// Crosses as JSON (`[[1,1],[1,4]]` or `{"n":5,"crosses":[...]}`), or a
        /// factorization such as `( )( 4 )( 3 )( 1 4 )` or `{"n":5,"blocks":[...]}`.
        input: String,
        /// Grid size for a bare cross list (default: smallest that fits).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check every invariant on every permutation of `S_n`.
    Verify {
        n: usize,
        /// Where to write failing cases as JSON (default `chute-verify-n<N>-failures.json`).
        #[arg(long)]
        failures: Option<PathBuf>,
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
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
