use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = chaoscrypt::cli::Cli::parse();
    match chaoscrypt::cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
