//! Front end for the `polybergman` binary.
//!
//! Exit codes: 0 pass, 1 tolerance failure, 2 usage or configuration error.

pub mod args;
pub mod commands;
pub mod expr;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use args::{Cli, Command, Format};
use clap::Parser;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] polybergman::Error),
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub const EXIT_PASS: u8 = 0;
pub const EXIT_TOLERANCE: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_PASS
            };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_CONFIG
        }
    }
}

fn execute(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let (text, passed, default_out) = match &cli.command {
        Command::Ledger => {
            let l = polybergman::ledger::build_ledger();
            let text = match g.format {
                Format::Json => l.to_json_pretty() + "\n",
                Format::Csv => report::render_csv(&commands::ledger_table(&l)),
            };
            let name = match g.format {
                Format::Json => "derivation_ledger.json",
                Format::Csv => "derivation_ledger.csv",
            };
            (text, true, Some(PathBuf::from(name)))
        }
        other => {
            let r = match other {
                Command::Eval(a) => commands::eval(g, a)?,
                Command::Gram(a) => commands::gram(g, a)?,
                Command::Kernel(a) => commands::kernel(g, a)?,
                Command::Project(a) => commands::project(g, a)?,
                Command::Ledger => unreachable!(),
            };
            (r.render(g), r.passed, None)
        }
    };
    match g.out.clone().or(default_out) {
        Some(path) => {
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?
        }
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(if passed { EXIT_PASS } else { EXIT_TOLERANCE })
}
