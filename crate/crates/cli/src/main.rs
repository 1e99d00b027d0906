//! `ampdist`: characteristic functions, densities, Monte Carlo histograms,
//! oracle checks and figure data for billiard eigenstate amplitudes.
//!
//! Exit status is 0 on success, 2 for invalid input or a failed `verify`
//! check, and 3 when a numerical method does not converge. Errors are
//! reported on stderr as a one-line JSON record.

mod args;
mod commands;
mod error;
mod figure;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::{error_record, Outcome, EXIT_INVALID};

fn run(cli: &Cli) -> Outcome<bool> {
    let (table, out, stem_name, ok) = match &cli.command {
        Command::Cf(a) => {
            let (t, s) = commands::cf(a)?;
            (t, &a.out, commands::stem("cf", &s), true)
        }
        Command::Pdf(a) => {
            let (t, s) = commands::pdf(a)?;
            (t, &a.out, commands::stem("pdf", &s), true)
        }
        Command::Sample(a) => {
            let (t, s) = commands::sample(a)?;
            (t, &a.out, commands::stem("sample", &s), true)
        }
        Command::Moments(a) => {
            let (t, s) = commands::moments(a)?;
            (t, &a.out, commands::stem("moments", &s), true)
        }
        Command::Verify(a) => {
            let (t, s, ok) = verify::verify(a)?;
            (t, &a.out, commands::stem("verify", &s), ok)
        }
        Command::Figure(a) => {
            let t = figure::figure(a)?;
            (t, &a.out, format!("{:?}", a.name).to_lowercase(), true)
        }
    };
    output::emit(&table, out, &stem_name)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", error_record("usage", &e.to_string()));
            return ExitCode::from(EXIT_INVALID);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("{}", error_record("verification_failed", &format!("{} reported failing checks", cli.command.name())));
            ExitCode::from(EXIT_INVALID)
        }
        Err(e) => {
            eprintln!("{}", error_record(e.kind(), &e.to_string()));
            e.exit_code()
        }
    }
}
