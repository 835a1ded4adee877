use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use planemap::cli::{report::error_json, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match cli.execute() {
        Ok(r) => r,
        Err(e) => {
            if cli.wants_json() {
                print!("{}", error_json(&e));
            } else {
                eprintln!("error [{}]: {}", e.code(), e);
            }
            return ExitCode::FAILURE;
        }
    };
    let written = match &rendered.out {
        Some(path) => std::fs::write(path, &rendered.body),
        None => std::io::stdout().write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error [Io]: {}", e);
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
