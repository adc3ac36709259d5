mod cli;
mod commands;
mod error;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxeter_core::GraphConfig;
use serde_json::json;

use cli::{Cli, Format};
use commands::Report;
use error::CliError;

const SCHEMA: &str = "coxeter-cli/1";

fn config(cli: &Cli) -> Result<GraphConfig, CliError> {
    let mut config = GraphConfig::new();
    if let Some(max) = cli.global.max_n {
        config = config
            .with_max_n(max)
            .map_err(|e| CliError::Usage(format!("--max-n: {e}")))?;
    }
    if let Some(workers) = cli.global.workers {
        config = config.with_workers(workers);
    }
    Ok(config)
}

fn render(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.global.format {
        Format::Human => out.write_all(report.human.as_bytes())?,
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": cli.command.name(),
                "inputs": report.inputs,
                "result": report.result,
                "details": report.details,
            });
            serde_json::to_writer_pretty(&mut out, &doc).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let config = config(cli)?;
    let report = commands::run(&cli.command, cli.global.format, &config)?;
    render(cli, &report)?;
    report.failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
