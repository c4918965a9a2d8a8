//! Library side of the `tcnet` command: argument types, the subcommands and
//! the self-verification suite. `main.rs` only parses and dispatches.

pub mod args;
pub mod commands;
pub mod fixtures;
pub mod output;
pub mod verify;

use std::process::ExitCode;

use tcnet_core::{ComponentGraphError, NetworkError};
use tcnet_exact::CountError;
use tcnet_oracle::OracleError;
use thiserror::Error;

pub use args::Cli;

/// Errors mapped onto the exit-code contract.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::FactorialCap { .. } => CliError::Resource(e.to_string()),
            CountError::NonIntegral(_) => CliError::CheckFailed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            OracleError::Domain(_) => CliError::Usage(e.to_string()),
            _ => CliError::CheckFailed(e.to_string()),
        }
    }
}

impl From<ComponentGraphError> for CliError {
    fn from(e: ComponentGraphError) -> Self {
        match e {
            ComponentGraphError::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<NetworkError> for CliError {
    fn from(e: NetworkError) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Runs a parsed command line, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> Result<()> {
    tcnet_exact::factorial::set_factorial_cap(cli.factorial_cap);
    commands::dispatch(cli, out)
}

/// Runs and converts the outcome into a process exit code, reporting errors
/// on stderr.
pub fn main_with(cli: &Cli) -> ExitCode {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe, e.g. `| head`, is not a failure
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
