mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, violated preconditions, unreadable input. Exit code 1.
    Usage(String),
    /// A check ran and did not hold. Exit code 2.
    Check(String),
}

impl From<multicore::Error> for Failure {
    fn from(e: multicore::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = std::result::Result<Output, Failure>;

/// Text for stdout plus whether every check passed.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
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
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(if out.failed { 2 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
