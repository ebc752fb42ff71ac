//! `numsgps` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors and on
//! failed verification.

mod args;
mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{ignore_broken_pipe, Failure};
use config::{FileConfig, Settings, GENUS_CAP_ENV};

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path).map_err(Failure::Usage)?,
        None => FileConfig::default(),
    };
    let env = std::env::var(GENUS_CAP_ENV).ok();
    Settings::resolve(cli.genus_cap, cli.jobs, env.as_deref(), &file).map_err(Failure::Usage)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let settings = settings(&cli)?;
    if let Some(n) = settings.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {n} workers: {e}")))?;
    }
    let json = cli.json;
    let Some(out) = commands::run(cli.command, &settings, json)? else {
        return Ok(true);
    };
    let body = if json { out.json.to_string() } else { out.text };
    ignore_broken_pipe(writeln!(std::io::stdout().lock(), "{body}"))?;
    Ok(out.ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
