//! `allbut`: compute and analyze nim sequences of all-but subtraction games.

mod commands;
mod conjecture;
mod opts;
mod suites;
mod sweep;

use std::process::ExitCode;

use allbut_core::boundary::DetectError;
use allbut_core::naive::EngineError;
use clap::Parser;

use opts::{Cli, Command};

pub(crate) const EXIT_OK: u8 = 0;
pub(crate) const EXIT_FAIL: u8 = 1;
pub(crate) const EXIT_USAGE: u8 = 2;
pub(crate) const EXIT_CAP: u8 = 3;

fn main() -> ExitCode {
    // Die quietly when a pager or `head` closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let cap = cli.resolved_cap();
    let result = match &cli.command {
        Command::Grundy { x, n, engine, format } => {
            commands::grundy(x, *n, *engine, *format, cap)
        }
        Command::Period { x, k_limit, format } => commands::period(x, *k_limit, *format, cap),
        Command::Boundary { x, k_limit } => commands::boundary(x, *k_limit),
        Command::Verify { suite, bounds, jobs, format } => {
            suites::run(*suite, *bounds, *jobs, *format)
        }
        Command::Sweep { family, bounds, jobs, out, format } => {
            sweep::run(*family, bounds, *jobs, out, *format, cap)
        }
        Command::Conjecture { a_max, b_max, format } => {
            conjecture::run(*a_max, *b_max, *format)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify_error(&err))
        }
    }
}

/// Resource exhaustion gets its own exit code so sweeps can distinguish
/// "raise the cap" from "something is wrong".
fn classify_error(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<EngineError>().is_some() {
            return EXIT_CAP;
        }
        if let Some(DetectError::KLimitExhausted { .. }) = cause.downcast_ref::<DetectError>() {
            return EXIT_CAP;
        }
    }
    EXIT_FAIL
}
