use std::process::ExitCode;

use clap::Parser;

use dytri_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Parse(_)) | Err(e @ CliError::Domain(_)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
