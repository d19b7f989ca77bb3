//! Plane-strain line crack: collocation for the hypersingular equation
//! and extraction of the edge stress concentration factor.
//!
//! After dividing the governing equation by `−norm/π` the unknown opening
//! satisfies
//!
//! ```text
//! ⨍ g(t) [1/(x−t)² + K̂(x−t)] dt = π σ₀ / (2μ(1−c²)),   |x| < b,
//! ```
//!
//! with the hypersingular integral taken as a finite part. With this
//! orientation the finite part of a positive √-shaped opening is negative,
//! so the physical (positive) opening is minus the solution of the
//! assembled system.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels::{plane_kernel_regular, KernelContext};
use crate::material::{CrackConfig, PorousParams};
use crate::numerics::{least_squares, solve_dense, DenseSystem};
use crate::scf::ScfResult;

/// Uniform collocation mesh on `[−b, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneMesh {
    pub n: usize,
    pub b: f64,
    pub h: f64,
}

impl PlaneMesh {
    pub fn new(b: f64, n: usize) -> Result<Self> {
        if n < 8 || n % 2 != 0 {
            return Err(Error::Usage(format!("plane mesh needs an even n >= 8, got {n}")));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::Parameter { name: "b", value: b, reason: "must be positive and finite" });
        }
        Ok(Self { n, b, h: 2.0 * b / n as f64 })
    }

    /// Collocation point `x_i = −b + (i − ½)h`, `i = 1..=n`.
    pub fn x(&self, i: usize) -> f64 {
        -self.b + (i as f64 - 0.5) * self.h
    }

    /// Cell boundary `t_j = −b + jh`, `j = 0..=n`.
    pub fn t(&self, j: usize) -> f64 {
        -self.b + j as f64 * self.h
    }

    pub fn x_nodes(&self) -> Vec<f64> {
        (1..=self.n).map(|i| self.x(i)).collect()
    }

    pub fn t_nodes(&self) -> Vec<f64> {
        (0..=self.n).map(|j| self.t(j)).collect()
    }
}

/// Piecewise-constant opening, one value per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct OpeningProfile {
    pub mesh: PlaneMesh,
    pub g: Vec<f64>,
}

impl OpeningProfile {
    /// `∫ g(ξ)/(x−ξ)² dξ` for a point `x` outside the crack, using the exact
    /// cell primitives of the piecewise-constant opening.
    pub fn outer_stress_integral(&self, x: f64) -> f64 {
        let m = &self.mesh;
        self.g
            .iter()
            .enumerate()
            .map(|(j, g)| g * (1.0 / (x - m.t(j + 1)) - 1.0 / (x - m.t(j))))
            .sum()
    }
}

/// Right-hand side of the normalised collocation system.
pub fn plane_rhs(cfg: &CrackConfig, c2: f64) -> f64 {
    PI * cfg.sigma0 / (2.0 * cfg.mu * (1.0 - c2))
}

/// Collocation matrix and right-hand side.
///
/// The regular part of each cell is integrated with the trapezoid rule on
/// the cell edges, `h/2 [K̂(x_i − t_{j−1}) + K̂(x_i − t_j)]`, which keeps the
/// matrix centrosymmetric.
pub fn assemble_plane_system(cfg: &CrackConfig, ctx: &KernelContext, n: usize) -> Result<DenseSystem> {
    let mesh = PlaneMesh::new(cfg.b, n)?;
    let h = mesh.h;
    // x_i − t_j = (i − j − ½)h, so K̂ is needed only at (k + ½)h.
    let regular: Vec<f64> = (0..=n)
        .into_par_iter()
        .map(|k| plane_kernel_regular((k as f64 + 0.5) * h, ctx).map(|v| 0.5 * h * v))
        .collect::<Result<_>>()?;
    let offset = |i: usize, j: usize| if i > j { i - j - 1 } else { j - i };

    let mut matrix = vec![0.0; n * n];
    matrix.par_chunks_mut(n).enumerate().for_each(|(row, out)| {
        let i = row + 1;
        let xi = mesh.x(i);
        for (col, a) in out.iter_mut().enumerate() {
            let j = col + 1;
            *a = 1.0 / (xi - mesh.t(j)) - 1.0 / (xi - mesh.t(j - 1))
                + regular[offset(i, j)]
                + regular[offset(i, j - 1)];
        }
    });
    let rhs = vec![plane_rhs(cfg, ctx.params.c2); n];
    DenseSystem::new(n, matrix, rhs)
}

/// Solve the collocation system; the returned opening is positive inside
/// the crack.
///
/// The matrix is centrosymmetric and the load even, so the system is
/// folded onto the left half `g_j = g_{n+1−j}` before factorisation.
pub fn solve_plane(cfg: &CrackConfig, ctx: &KernelContext, n: usize) -> Result<OpeningProfile> {
    let sys = assemble_plane_system(cfg, ctx, n)?;
    let half = n / 2;
    let mut folded = vec![0.0; half * half];
    for i in 0..half {
        let row = sys.row(i);
        for k in 0..half {
            folded[i * half + k] = row[k] + row[n - 1 - k];
        }
    }
    let reduced = DenseSystem::new(half, folded, sys.rhs()[..half].to_vec())?;
    let left = solve_dense(&reduced)?;
    let g = (0..n)
        .map(|j| -left[if j < half { j } else { n - 1 - j }])
        .collect();
    Ok(OpeningProfile { mesh: PlaneMesh::new(cfg.b, n)?, g })
}

/// Classical opening `σ₀√(b²−x²)/(2μ(1−c²))`.
pub fn classical_plane_opening(b: f64, c2: f64, x: f64, sigma0: f64, mu: f64) -> Result<f64> {
    if x.abs() > b || !x.is_finite() {
        return Err(Error::Domain { function: "classical_plane_opening", value: x });
    }
    Ok(sigma0 * (b * b - x * x).max(0.0).sqrt() / (2.0 * mu * (1.0 - c2)))
}

/// Classical factor `σ₀/(μ(1−c²))`.
pub fn classical_plane_scf(cfg: &CrackConfig, c2: f64) -> f64 {
    cfg.sigma0 / (cfg.mu * (1.0 - c2))
}

const OUTER_OFFSET: f64 = 0.4;
const MIN_OFFSET_CELLS: f64 = 4.0;
const MIN_SAMPLES: usize = 7;
const MAX_SAMPLES: usize = 16;

/// Edge offsets `δ_m = 0.4 b · 2^{−m/2}` down to about four cells.
pub fn edge_offsets(mesh: &PlaneMesh) -> Vec<f64> {
    let floor = MIN_OFFSET_CELLS * mesh.h;
    (0..MAX_SAMPLES)
        .map(|m| OUTER_OFFSET * mesh.b * 2f64.powf(-0.5 * m as f64))
        .enumerate()
        .take_while(|&(m, d)| d >= floor || m < MIN_SAMPLES)
        .map(|(_, d)| d)
        .collect()
}

/// Scaled outer stress `F(δ) = (2/π)|∫ g/(x−ξ)²|√(x²−b²)/b` at `x = b + δ`.
pub fn edge_stress_sample(profile: &OpeningProfile, delta: f64) -> f64 {
    let b = profile.mesh.b;
    let x = b + delta;
    2.0 / PI * profile.outer_stress_integral(x).abs() * (x * x - b * b).sqrt() / b
}

/// Limit of [`edge_stress_sample`] as `δ → 0`.
///
/// The samples behave like `F∞ + c₁δ^½ + c₂δ + c₃δ^{3/2} + e·h/δ`; the last
/// term is the footprint of the piecewise-constant edge cells. The model is
/// fitted by least squares and `F∞` returned with the relative change
/// caused by dropping the `δ^{3/2}` column as consistency estimate.
pub fn extract_edge_limit(profile: &OpeningProfile) -> Result<(f64, f64)> {
    let mesh = &profile.mesh;
    let offsets = edge_offsets(mesh);
    let values: Vec<f64> = offsets
        .iter()
        .map(|&d| edge_stress_sample(profile, d))
        .collect();
    let fit = |powers: &[f64]| -> Result<f64> {
        let rows: Vec<Vec<f64>> = offsets
            .iter()
            .map(|&d| {
                let r = d / mesh.b;
                let mut row = vec![1.0];
                row.extend(powers.iter().map(|p| r.powf(*p)));
                row.push(mesh.h / d);
                row
            })
            .collect();
        Ok(least_squares(&rows, &values)?[0])
    };
    let full = fit(&[0.5, 1.0, 1.5])?;
    let reduced = fit(&[0.5, 1.0])?;
    Ok((full, ((full - reduced) / full).abs()))
}

fn classical_reference_cache() -> &'static Mutex<HashMap<usize, f64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, f64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `k·(1−c²)μ/σ₀` of the discrete N = 0 problem on an n-cell mesh. At N = 0
/// the discrete problem is independent of b and c² after this scaling.
pub fn discrete_classical_factor(n: usize) -> Result<f64> {
    if let Some(v) = classical_reference_cache().lock().unwrap().get(&n) {
        return Ok(*v);
    }
    let cfg = CrackConfig::normalized(1.0)?;
    let ctx = KernelContext::new(PorousParams::new(0.5, 0.0)?);
    let profile = solve_plane(&cfg, &ctx, n)?;
    let (limit, _) = extract_edge_limit(&profile)?;
    let factor = limit * 0.5;
    classical_reference_cache().lock().unwrap().insert(n, factor);
    Ok(factor)
}

/// Stress concentration factor of a solved plane problem.
///
/// `k0` is the N = 0 factor computed with the same mesh, so that the ratio
/// is free of the common discretisation error.
pub fn scf_plane(profile: &OpeningProfile, cfg: &CrackConfig, ctx: &KernelContext) -> Result<ScfResult> {
    let (k, consistency) = extract_edge_limit(profile)?;
    let k0 = discrete_classical_factor(profile.mesh.n)? * classical_plane_scf(cfg, ctx.params.c2);
    Ok(ScfResult::new(k, k0, profile.mesh.n, consistency))
}
