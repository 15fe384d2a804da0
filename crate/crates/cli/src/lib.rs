//! Command-line front end for `bcf-core`.
//!
//! Exit codes: 0 success, 1 other failure, 2 parse error, 3 precision,
//! 4 algebra (mixed fields, reducible modulus), 5 unsupported order.

pub mod args;
pub mod commands;
pub mod digit_file;
pub mod value_spec;

use bcf_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Core(#[from] CoreError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                CoreError::AmbiguousFloor { .. }
                | CoreError::PrecisionTooLow { .. }
                | CoreError::RefinementLimit(_)
                | CoreError::NoConvergence(_) => 3,
                CoreError::MixedFields
                | CoreError::MixedBackends(..)
                | CoreError::ReducibleModulus { .. }
                | CoreError::ZeroInverse
                | CoreError::ZeroTail(_) => 4,
                CoreError::UnsupportedOrder { .. } => 5,
                CoreError::NonMonicModulus(_)
                | CoreError::ModulusDegree { .. }
                | CoreError::NoSignChange { .. }
                | CoreError::NonIsolatingInterval { .. }
                | CoreError::InvalidDigits(_)
                | CoreError::InsufficientDigits { .. }
                | CoreError::TreeTooDeep(_)
                | CoreError::UnknownEvaluator(_)
                | CoreError::EmptyInput => 2,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command, returning the
/// text to print on standard output.
pub fn run<I, T>(args: I, stdin: &mut dyn std::io::Read) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::error::ErrorKind;
    use clap::Parser;
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Ok(e.to_string());
        }
        Err(e) => return Err(CliError::Parse(e.to_string())),
    };
    commands::dispatch(cli, stdin)
}
