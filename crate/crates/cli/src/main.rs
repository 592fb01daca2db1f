mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Caps the rayon pool when `HIROTA_SEEDS_THREADS` is a positive integer.
fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("HIROTA_SEEDS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("HIROTA_SEEDS_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    let report = match commands::run(&cli.command) {
        Ok(report) => report,
        Err(commands::ConfigError(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let common = cli.command.common();
    let rendered = report.render(common.format);
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
