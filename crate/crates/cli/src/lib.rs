//! Library half of the command-line front end: job specifications, report
//! rendering, command dispatch and the built-in identity suite. The
//! `conformable` binary is a thin wrapper around [`run::run`].

// `!(x > y)` guards deliberately reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt;

pub mod report;
pub mod run;
pub mod spec;
pub mod suite;

/// Errors surfaced by the front end, each mapping to an exit code:
/// 2 schema/io, 3 domain, 4 numerical failure.
#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Core(conformable::Error),
    Io(String),
}

impl CliError {
    pub fn schema(message: impl Into<String>) -> Self {
        CliError::Schema(message.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema(_) => "schema",
            CliError::Io(_) => "io",
            CliError::Core(core) => match core {
                conformable::Error::Domain(_) => "domain",
                conformable::Error::Dimension(_) => "dimension",
                conformable::Error::InsufficientSamples(_) => "insufficient-samples",
                conformable::Error::NonFinite(_) => "non-finite",
                conformable::Error::NoLimit(_) => "no-limit",
                conformable::Error::CflViolation(_) => "cfl-violation",
            },
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema(_) | CliError::Io(_) => 2,
            CliError::Core(core) => match core {
                conformable::Error::Domain(_)
                | conformable::Error::Dimension(_)
                | conformable::Error::InsufficientSamples(_) => 3,
                conformable::Error::NonFinite(_)
                | conformable::Error::NoLimit(_)
                | conformable::Error::CflViolation(_) => 4,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(msg) | CliError::Io(msg) => write!(f, "{msg}"),
            CliError::Core(core) => write!(f, "{core}"),
        }
    }
}
