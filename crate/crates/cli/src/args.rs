use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Format, Preset, Problem, SolveFile, SweepFile};

/// Stress concentration at cracks in elastic materials with voids.
#[derive(Debug, Parser)]
#[command(name = "voidcrack", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a plane-strain crack and report its stress concentration factor.
    Plane(PlaneArgs),
    /// Solve a penny-shaped crack and report its stress concentration factor.
    Penny(PennyArgs),
    /// Run a parameter sweep (one row per grid point).
    Sweep(SweepArgs),
    /// Tabulate a kernel on a uniform grid.
    Kernel(KernelArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// TOML file with any of the options below; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Stiffness ratio μ/(λ+2μ), in (0, 1).
    #[arg(long)]
    pub c2: Option<f64>,
    /// Coupling number, in [0, 1).
    #[arg(long = "N")]
    pub coupling: Option<f64>,
    /// Crack half-length or radius.
    #[arg(long)]
    pub b: Option<f64>,
    /// Applied tension [default: 1].
    #[arg(long)]
    pub sigma0: Option<f64>,
    /// Shear modulus [default: 1].
    #[arg(long)]
    pub mu: Option<f64>,
    /// Result file; standard output when omitted.
    #[arg(long)]
    pub output: Option<String>,
    /// Also write the node-wise solution to this file.
    #[arg(long)]
    pub profile: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PlaneArgs {
    #[command(flatten)]
    pub common: SolveArgs,
    /// Number of mesh cells (even, ≥ 8) [default: 800].
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PennyArgs {
    #[command(flatten)]
    pub common: SolveArgs,
    /// Number of quadrature intervals (≥ 8) [default: 128].
    #[arg(long)]
    pub m: Option<usize>,
}

impl SolveArgs {
    /// Overlay the flags on `file`.
    pub fn merge(self, mut file: SolveFile) -> SolveFile {
        file.c2 = self.c2.or(file.c2);
        file.coupling = self.coupling.or(file.coupling);
        file.b = self.b.or(file.b);
        file.sigma0 = self.sigma0.or(file.sigma0);
        file.mu = self.mu.or(file.mu);
        file.output_path = self.output.or(file.output_path);
        file.profile_path = self.profile.or(file.profile_path);
        file.format = self.format.or(file.format);
        file
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    /// Built-in figure grid.
    #[arg(long, value_enum, conflicts_with = "config")]
    pub preset: Option<Preset>,
    /// TOML sweep file; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub problem: Option<Problem>,
    /// Comma-separated c² values.
    #[arg(long, value_delimiter = ',')]
    pub c2: Option<Vec<f64>>,
    /// Comma-separated crack sizes.
    #[arg(long, value_delimiter = ',')]
    pub b: Option<Vec<f64>>,
    #[arg(long = "N-start")]
    pub n_start: Option<f64>,
    #[arg(long = "N-stop")]
    pub n_stop: Option<f64>,
    #[arg(long = "N-step")]
    pub n_step: Option<f64>,
    /// Mesh cells (plane) or quadrature intervals (penny).
    #[arg(long, visible_aliases = ["n", "m"])]
    pub size: Option<usize>,
    #[arg(long)]
    pub output: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl SweepArgs {
    pub fn merge(self, mut file: SweepFile) -> SweepFile {
        file.problem = self.problem.or(file.problem);
        file.c2_list = self.c2.or(file.c2_list);
        file.b_list = self.b.or(file.b_list);
        if self.n_start.is_some() || self.n_stop.is_some() || self.n_step.is_some() {
            let mut grid = file.n_grid.unwrap_or(crate::config::NGrid {
                start: 0.0,
                stop: 0.0,
                step: 0.025,
            });
            grid.start = self.n_start.unwrap_or(grid.start);
            grid.stop = self.n_stop.unwrap_or(grid.stop);
            grid.step = self.n_step.unwrap_or(grid.step);
            file.n_grid = Some(grid);
        }
        file.n_or_m = self.size.or(file.n_or_m);
        file.output_path = self.output.or(file.output_path);
        file.format = self.format.or(file.format);
        file
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct KernelArgs {
    #[arg(long, value_enum)]
    pub mode: Problem,
    #[arg(long)]
    pub c2: f64,
    #[arg(long = "N")]
    pub coupling: f64,
    #[arg(long)]
    pub xmin: f64,
    #[arg(long)]
    pub xmax: f64,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    #[arg(long)]
    pub output: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
