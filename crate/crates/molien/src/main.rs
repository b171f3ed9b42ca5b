//! Command line front end: argument parsing and report emission only;
//! all computation lives in the library's `cli` module.

use clap::{Args, Parser, Subcommand, ValueEnum};
use molien::cli::{
    decompose_run, invariants_run, reproduce_run, resolve_order, JobConfig, ORDER_ENV_VAR,
};
use molien::{json, Error};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "molien",
    version,
    about = "Hilbert series of classical-group invariants in graded algebras",
    after_help = format!(
        "The truncation order defaults to 16 and can also be set through the \
         {ORDER_ENV_VAR} environment variable; --order wins over the config, \
         which wins over the environment."
    )
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute dual-checked invariant series for the groups in a job config.
    Invariants(JobArgs),
    /// Decompose a source series into its Schur multiplicity table.
    Decompose(JobArgs),
    /// Recompute the bundled catalog of reference series and report agreement.
    #[command(name = "reproduce-paper")]
    ReproducePaper(RunArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Path to a JSON job config.
    #[arg(long)]
    config: PathBuf,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Truncation order for all series.
    #[arg(long)]
    order: Option<usize>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn read_config(path: &Path) -> molien::Result<JobConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    JobConfig::from_json(&text)
}

fn emit<T: Serialize>(report: &T, text: String, run: &RunArgs) -> molien::Result<()> {
    let payload = match run.format {
        Format::Text => text,
        Format::Json => json::to_pretty_string(report)?,
    };
    match &run.out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> molien::Result<bool> {
    match cli.command {
        Command::Invariants(args) => {
            let config = read_config(&args.config)?;
            let order = resolve_order(args.run.order, config.order)?;
            let report = invariants_run(&config, order)?;
            emit(&report, report.render_text(), &args.run)?;
            Ok(report.passed())
        }
        Command::Decompose(args) => {
            let config = read_config(&args.config)?;
            let order = resolve_order(args.run.order, config.order)?;
            let report = decompose_run(&config, order)?;
            emit(&report, report.render_text(), &args.run)?;
            Ok(report.passed())
        }
        Command::ReproducePaper(args) => {
            let order = resolve_order(args.order, None)?;
            let report = reproduce_run(order);
            emit(&report, report.render_text(), &args)?;
            Ok(report.passed())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(if e.is_config() { 2 } else { 1 });
        }
    }
}
