//! `antilinear` command-line front end.

mod args;
mod commands;
mod config;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser};

use crate::{
    args::{Cli, Command},
    commands::{Options, RunOutput},
    error::{CliError, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION},
};

/// Environment variable naming the default report directory.
pub const REPORT_DIR_ENV: &str = "ANTILINEAR_REPORT_DIR";

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("antilinear: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn report_path(cli: &Cli) -> Option<PathBuf> {
    cli.report.clone().or_else(|| {
        std::env::var_os(REPORT_DIR_ENV)
            .filter(|d| !d.is_empty())
            .map(|dir| PathBuf::from(dir).join(format!("{}.json", cli.command.name())))
    })
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let options = Options { tol: cli.tol, seed: cli.seed };
    let RunOutput { report, csv, sidecar } = match &cli.command {
        Command::Twolevel(a) => commands::twolevel::run(a, &options)?,
        Command::Periodic(a) => commands::periodic::run(a, &options)?,
        Command::Fock(a) => commands::fock::run(a, &options)?,
        Command::Scan(a) => commands::scan::run(a, &options)?,
    };
    let json = report.to_json();
    let path = report_path(cli);
    match &path {
        Some(p) => report::write_atomic(p, json.as_bytes())?,
        None => std::io::stdout().write_all(json.as_bytes()).map_err(|e| CliError::io("<stdout>".as_ref(), e))?,
    }
    let csv_path = cli.csv.clone().or_else(|| path.filter(|_| sidecar).map(|p| p.with_extension("csv")));
    if let Some(p) = csv_path {
        report::write_atomic(&p, &csv)?;
    }
    for v in &report.violations {
        eprintln!("violation: {v}");
    }
    for c in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("check failed: {} = {:?} (tol {:e})", c.name, c.value, c.tol);
    }
    Ok(if report.verified() { EXIT_OK } else { EXIT_VERIFICATION })
}
