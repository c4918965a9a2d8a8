use std::process::ExitCode;

use clap::Parser;
use tcnet_cli::Cli;

fn main() -> ExitCode {
    tcnet_cli::main_with(&Cli::parse())
}
