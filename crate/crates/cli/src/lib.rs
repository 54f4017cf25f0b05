//! Command implementations behind the `semidirect` binary. Each command
//! returns its stdout text and exit code so that it can be tested without
//! spawning a process.

pub mod commands;
pub mod expr;

use std::path::PathBuf;

pub use commands::{eval_cmd, lorentz_cmd, reconstruct_cmd, transform_cmd, verify_cmd, Format, Output};

/// Errors that abort a command with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{err}\n  {src}\n  {caret}^", caret = " ".repeat(err.pos))]
    Parse { src: String, err: expr::ParseError },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Math(#[from] semidirect::Error),

    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
