//! Library side of the `mip` command-line tool: argument definitions,
//! command implementations and the reference tables.

pub mod args;
pub mod commands;
pub mod expected;
pub mod tables;

use thiserror::Error;

pub use args::{Cli, Command};
pub use commands::run;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// `--assert-distinguished` saw an indistinguishable pair, or a table
    /// cell failed.
    pub const CHECK_FAILED: i32 = 2;
    pub const NOT_ISOMORPHIC: i32 = 3;
    pub const CAP_EXCEEDED: i32 = 4;
    pub const USAGE: i32 = 64;
    pub const CONSTRUCTION: i32 = 65;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mip_core::Error),
}

impl CliError {
    /// Input that could not be read or parsed maps to the usage code; every
    /// other library failure is a construction failure.
    pub fn exit_code(&self) -> i32 {
        use mip_core::Error as E;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Core(e) => match e {
                E::Parse { .. }
                | E::UnknownGenerator(_)
                | E::DuplicateGenerator(_)
                | E::NoGenerators
                | E::NotPrime(_)
                | E::InvalidDegree(_)
                | E::Io(_)
                | E::Json(_) => exit::USAGE,
                _ => exit::CONSTRUCTION,
            },
        }
    }
}
