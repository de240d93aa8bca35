use clap::Parser;

use gridmatch_cli::app::{self, AppError, Cli};

/// Exit status: 0 when every executed check matched its expected status,
/// 1 when a check deviated or the command failed, 2 for usage errors.
fn main() {
    let cli = Cli::parse();
    match app::run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if !outcome.all_matched {
                std::process::exit(1);
            }
        }
        Err(AppError::Usage(message)) => {
            eprintln!("gridmatch: {message}");
            std::process::exit(2);
        }
        Err(AppError::Failed(message)) => {
            eprintln!("gridmatch: {message}");
            std::process::exit(1);
        }
    }
}
