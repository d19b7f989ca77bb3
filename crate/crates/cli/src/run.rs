//! Solver drivers behind the subcommands.

use rayon::prelude::*;
use voidcrack::kernels::{penny_kernel_regular, plane_kernel, plane_kernel_regular};
use voidcrack::penny::{opening_from_gamma, scf_penny, solve_penny};
use voidcrack::plane::{scf_plane, solve_plane};
use voidcrack::{CrackConfig, KernelContext, ScfResult};

use crate::config::{Problem, SolveConfig, SweepConfig};
use crate::error::Result;

/// One line of a result table.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub problem: Problem,
    pub c2: f64,
    pub coupling: f64,
    pub b: f64,
    /// Requested discretisation size.
    pub size: usize,
    pub outcome: std::result::Result<ScfResult, String>,
}

impl SweepRow {
    pub fn status(&self) -> String {
        match &self.outcome {
            Ok(scf) if scf.is_suspect() => "suspect".to_string(),
            Ok(_) => "ok".to_string(),
            Err(message) => format!("failed: {message}"),
        }
    }
}

/// Node-wise solution: column names and rows.
pub struct Profile {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

fn solve_point(
    problem: Problem,
    cfg: &CrackConfig,
    ctx: &KernelContext,
    size: usize,
    with_profile: bool,
) -> voidcrack::Result<(ScfResult, Option<Profile>)> {
    match problem {
        Problem::Plane => {
            let opening = solve_plane(cfg, ctx, size)?;
            let scf = scf_plane(&opening, cfg, ctx)?;
            let profile = with_profile.then(|| Profile {
                columns: vec!["x", "g"],
                rows: (0..size).map(|i| vec![opening.mesh.x(i + 1), opening.g[i]]).collect(),
            });
            Ok((scf, profile))
        }
        Problem::Penny => {
            let gamma = solve_penny(cfg, ctx, size)?;
            let scf = scf_penny(&gamma, cfg, ctx.params.c2);
            let profile = if with_profile {
                let rows = gamma
                    .nodes
                    .iter()
                    .zip(&gamma.gamma)
                    .map(|(&r, &g)| {
                        let opening = opening_from_gamma(&gamma, r)?;
                        Ok(vec![r, g, opening, opening.abs()])
                    })
                    .collect::<voidcrack::Result<Vec<_>>>()?;
                Some(Profile {
                    columns: vec!["r", "gamma", "g", "abs_g"],
                    rows,
                })
            } else {
                None
            };
            Ok((scf, profile))
        }
    }
}

/// Solve one configuration. Invalid input and numerical failures are
/// returned as errors rather than recorded in the row.
pub fn run_single(config: &SolveConfig) -> Result<(SweepRow, Option<Profile>)> {
    let cfg = CrackConfig::new(config.b, config.sigma0, config.mu)?;
    let ctx = KernelContext::from_c2_n(config.c2, config.coupling)?;
    let (scf, profile) = solve_point(config.problem, &cfg, &ctx, config.size, config.profile_path.is_some())?;
    let row = SweepRow {
        problem: config.problem,
        c2: config.c2,
        coupling: config.coupling,
        b: config.b,
        size: config.size,
        outcome: Ok(scf),
    };
    Ok((row, profile))
}

/// Solve every grid point in parallel. Failures are kept in their rows;
/// the order of the result is that of [`SweepConfig::points`].
pub fn run_sweep(config: &SweepConfig) -> Vec<SweepRow> {
    config
        .points()
        .into_par_iter()
        .map(|(c2, b, coupling)| {
            let outcome = CrackConfig::normalized(b)
                .and_then(|cfg| {
                    let ctx = KernelContext::from_c2_n(c2, coupling)?;
                    solve_point(config.problem, &cfg, &ctx, config.n_or_m, false)
                })
                .map(|(scf, _)| scf)
                .map_err(|e| e.to_string());
            SweepRow {
                problem: config.problem,
                c2,
                coupling,
                b,
                size: config.n_or_m,
                outcome,
            }
        })
        .collect()
}

/// Kernel values on `points` equally spaced abscissae in `[xmin, xmax]`.
pub fn kernel_table(problem: Problem, ctx: &KernelContext, xmin: f64, xmax: f64, points: usize) -> Result<Profile> {
    let xs: Vec<f64> = match points {
        0 => Vec::new(),
        1 => vec![xmin],
        _ => (0..points)
            .map(|i| xmin + (xmax - xmin) * i as f64 / (points - 1) as f64)
            .collect(),
    };
    let rows = xs
        .par_iter()
        .map(|&x| match problem {
            Problem::Plane => Ok(vec![x, plane_kernel(x, ctx)?, plane_kernel_regular(x, ctx)?]),
            Problem::Penny => Ok(vec![x, penny_kernel_regular(x, ctx)?]),
        })
        .collect::<voidcrack::Result<Vec<_>>>()?;
    let columns = match problem {
        Problem::Plane => vec!["x", "K", "K_regular"],
        Problem::Penny => vec!["x", "K_star"],
    };
    Ok(Profile { columns, rows })
}
