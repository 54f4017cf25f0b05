//! `semidirect`: verification suites and small computations with the
//! semidirect-product groups of the Pauli algebra.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semidirect_cli::{eval_cmd, lorentz_cmd, reconstruct_cmd, transform_cmd, verify_cmd, Format};

const DEFAULT_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "semidirect",
    version,
    about = "Semidirect-product groups over the Pauli algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`) and print its report.
    Verify {
        /// group-axioms, matrix-reps, star-involution, minkowski, lorentz-cover,
        /// so4c, quasiring, restore-D, restore-T, star-counterexamples or all
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Lorentz matrix of a determinant-one 2x2 matrix, e.g. `[[1,0],[0,1]]`.
    Lorentz {
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Recover an algebra from inner automorphisms of D, T or starD.
    Reconstruct {
        group: String,
        /// File with one group expression per line.
        #[arg(long, conflicts_with = "random")]
        generators: Option<PathBuf>,
        /// Number of random generators.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Evaluate a group or algebra expression, e.g. `S[sigma1] * L[sigma3] @ sigma0`.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Apply a group element to a four-vector `(v0, v1, v2, v3)`.
    Transform {
        element: String,
        vector: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            suite,
            seed,
            trials,
            tol,
            output,
            format,
        } => verify_cmd(&suite, seed, trials, tol, output.as_deref(), format.into()),
        Command::Lorentz { matrix, tol } => lorentz_cmd(&matrix, tol),
        Command::Reconstruct {
            group,
            generators,
            random,
            seed,
            tol,
        } => reconstruct_cmd(&group, generators.as_deref(), random, seed, tol),
        Command::Eval { expr, format } => eval_cmd(&expr, format.into()),
        Command::Transform { element, vector, tol } => transform_cmd(&element, &vector, tol),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
