use std::path::PathBuf;

use coxeter_core::codes::CodesError;
use coxeter_core::{GammaError, Gf2Error, VerifyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error("{0}")]
    Domain(String),
    #[error("{failed} of {total} suites failed")]
    VerifyFailed { failed: usize, total: usize },
}

impl CliError {
    /// 1 for domain errors and failed checks, 2 for usage, input and I/O errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::VerifyFailed { .. } => 1,
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Write(_)
            | CliError::Parse { .. } => 2,
        }
    }

    pub fn parse(context: impl Into<String>, message: impl ToString) -> Self {
        CliError::Parse {
            context: context.into(),
            message: message.to_string(),
        }
    }
}

impl From<Gf2Error> for CliError {
    fn from(e: Gf2Error) -> Self {
        match e {
            Gf2Error::Parse(m) => CliError::parse("input", m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<GammaError> for CliError {
    fn from(e: GammaError) -> Self {
        match e {
            GammaError::Gf2(inner) => inner.into(),
            GammaError::Io(io) => CliError::Write(io),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<CodesError> for CliError {
    fn from(e: CodesError) -> Self {
        match e {
            CodesError::Gf2(inner) => inner.into(),
            CodesError::Gamma(inner) => inner.into(),
            CodesError::Parse(m) => CliError::parse("code", m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Gf2(inner) => inner.into(),
            VerifyError::Gamma(inner) => inner.into(),
            VerifyError::Codes(inner) => inner.into(),
            VerifyError::UnknownSuite(s) => CliError::Usage(format!("unknown suite `{s}`")),
            other => CliError::Domain(other.to_string()),
        }
    }
}
