//! `gtg`: command-line front end of gtg-core.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match commands::run(&cli.command, &cli.global) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = report.write(cli.global.format, &mut out).and_then(|_| Ok(out.flush()?)) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if report.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
