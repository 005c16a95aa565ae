use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hyperlift::commands::{error_outcome, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("hyperlift: {e}");
            error_outcome(&e, cli.format)
        }
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(outcome.status as u8)
}
