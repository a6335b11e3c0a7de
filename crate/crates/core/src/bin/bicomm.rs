use std::process::ExitCode;

use bicomm::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bicomm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
