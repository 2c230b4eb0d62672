use std::process::ExitCode;

use clap::Parser;
use nonstd_cones::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = std::panic::catch_unwind(|| run(&cli));
    match outcome {
        Ok(Ok(report)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).unwrap());
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.status as u8)
        }
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        Err(_) => {
            eprintln!("error: internal invariant failure");
            ExitCode::from(2)
        }
    }
}
