mod args;
mod config;
mod error;
mod output;
mod run;

use std::process::ExitCode;

use clap::Parser;
use voidcrack::KernelContext;

use crate::args::{Cli, Command, SolveArgs};
use crate::config::{Problem, SolveFile, SweepFile};
use crate::error::{CliError, Result};
use crate::output::{with_output, write_columns, write_rows};

const THREADS_VAR: &str = "VOIDCRACK_THREADS";

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::validation(THREADS_VAR, format!("{THREADS_VAR}={value} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::validation(THREADS_VAR, e.to_string()))
}

fn solve(problem: Problem, args: SolveArgs, size: Option<usize>) -> Result<()> {
    let mut file = match &args.config {
        Some(path) => SolveFile::load(path)?,
        None => SolveFile::default(),
    };
    match problem {
        Problem::Plane => file.n = size.or(file.n),
        Problem::Penny => file.m = size.or(file.m),
    }
    let config = args.merge(file).resolve(problem)?;
    let (row, profile) = run::run_single(&config)?;
    if let (Some(path), Some(profile)) = (config.profile_path.as_deref(), profile) {
        with_output(Some(path), |out| write_columns(out, &profile.columns, &profile.rows, config.format))?;
    }
    with_output(config.output_path.as_deref(), |out| write_rows(out, &[row], config.format))
}

fn sweep(args: args::SweepArgs) -> Result<()> {
    let file = match (&args.preset, &args.config) {
        (Some(preset), _) => SweepFile::preset(*preset),
        (None, Some(path)) => SweepFile::load(path)?,
        (None, None) => SweepFile::default(),
    };
    let config = args.merge(file).resolve()?;
    let rows = run::run_sweep(&config);
    with_output(config.output_path.as_deref(), |out| write_rows(out, &rows, config.format))?;
    let failed = rows.iter().filter(|r| r.outcome.is_err()).count();
    if failed > 0 {
        return Err(CliError::Numerical(format!("{failed} of {} rows failed", rows.len())));
    }
    Ok(())
}

fn kernel(args: args::KernelArgs) -> Result<()> {
    if !(args.xmin.is_finite() && args.xmax.is_finite() && args.xmin <= args.xmax) {
        return Err(CliError::validation("xmin", "require finite xmin ≤ xmax"));
    }
    let ctx = KernelContext::from_c2_n(args.c2, args.coupling)?;
    let table = run::kernel_table(args.mode, &ctx, args.xmin, args.xmax, args.points)?;
    with_output(args.output.as_deref(), |out| write_columns(out, &table.columns, &table.rows, args.format))
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Plane(a) => solve(Problem::Plane, a.common, a.n),
        Command::Penny(a) => solve(Problem::Penny, a.common, a.m),
        Command::Sweep(a) => sweep(a),
        Command::Kernel(a) => kernel(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
