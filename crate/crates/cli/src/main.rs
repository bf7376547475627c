//! `fibideal`: tables of λ_n and C_n(q), identity verification, series dumps.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use log::LevelFilter;

use args::{Cli, Command};
use commands::Status;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn init_logging() {
    let level = match std::env::var("FIBIDEAL_LOG").as_deref() {
        Ok("debug") => LevelFilter::Debug,
        Ok("quiet") => LevelFilter::Off,
        _ => LevelFilter::Info,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_logging();

    let result = match &cli.command {
        Command::Lambda(a) => commands::lambda(a),
        Command::Cn(a) => commands::cn(a),
        Command::Verify(a) => commands::verify(a),
        Command::Series(a) => commands::series(a),
    };
    match result {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::Failure) => ExitCode::from(EXIT_FAILURE),
        Err(e) => {
            log::error!("{e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
