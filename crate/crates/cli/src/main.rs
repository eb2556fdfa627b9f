//! `sepgraph`: command-line access to separation profiles, balanced cuts,
//! expander families and cover-based separators.

mod cli;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use cli::{Cli, Format};
use report::{key_value_csv, ReportDocument, Timing};
use sepgraph_core::Error;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 10,
        Error::Precondition(_) => 11,
        Error::BudgetExceeded { .. } => 12,
        Error::Degenerate(_) => 13,
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => 1,
    }
}

fn run(cli: &Cli) -> sepgraph_core::Result<()> {
    let started = Instant::now();
    let out = cli.command.output();
    let outcome = commands::run(&cli.command)?;
    let text = match out.format {
        Format::Csv => match outcome.csv {
            Some(csv) => csv,
            None => key_value_csv(&outcome.payload)?,
        },
        Format::Json => {
            let doc = ReportDocument {
                tool: env!("CARGO_PKG_NAME").to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                command: cli.command.name().to_string(),
                config: serde_json::to_value(&cli.command)?,
                seed: out.seed,
                payload: outcome.payload,
                methods: outcome.methods,
                timing: Timing {
                    elapsed_ms: started.elapsed().as_millis(),
                },
            };
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s
        }
    };
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
        {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sepgraph {}: {e}", cli.command.name());
            ExitCode::from(exit_code(&e))
        }
    }
}
