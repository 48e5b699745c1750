mod args;
mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;
use mcz_core::Error;

use args::{Cli, Command};
use config::Config;

/// A failure carrying its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub const FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const TOLERANCE: u8 = 3;
    pub const FILE: u8 = 4;

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: Self::USAGE, msg: msg.into() }
    }

    pub fn file(msg: impl Into<String>) -> Self {
        CliError { code: Self::FILE, msg: msg.into() }
    }

    pub fn tolerance(msg: impl Into<String>) -> Self {
        CliError { code: Self::TOLERANCE, msg: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TolNotReached { .. } | Error::NonFiniteSample { .. } => Self::TOLERANCE,
            _ => Self::USAGE,
        };
        CliError { code, msg: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Config::load(cli.config.as_deref()).and_then(|cfg| match cli.command {
        Command::Eval(a) => commands::eval(&a, &cfg),
        Command::Verify(a) => commands::verify(&a, &cfg),
        Command::Table(a) => commands::table(&a),
        Command::Bench(a) => commands::bench(&a),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("mcz: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
