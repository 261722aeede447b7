mod args;
mod commands;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Rho(a) => commands::rho(&a, &mut out),
        Command::James(a) => commands::james(&a, &mut out),
        Command::Table(a) => commands::table(&a, &mut out),
        Command::Verify(a) => commands::verify(&a, &mut out),
        Command::Construct(a) => commands::construct(&a, &mut out),
        Command::CheckFamily(a) => commands::check_family(&a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Counterexample(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
