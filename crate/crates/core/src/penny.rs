//! Penny-shaped crack: Nyström solution of the second-kind equation for
//! the auxiliary density γ, the opening recovered from γ, and the edge
//! stress concentration factor `|γ(b)|/b`.
//!
//! γ is odd on `(−b, b)`, so the convolution over `(−b, b)` folds onto
//! `[0, b]` with kernel `K*(t−ξ) − K*(t+ξ)`. Trapezoid weights on the
//! uniform nodes `ξ_j = jb/m` keep `γ(b)` as an unknown.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels::{penny_kernel_regular, KernelContext};
use crate::material::CrackConfig;
use crate::numerics::{integrate_adaptive, solve_dense, DenseSystem};
use crate::scf::ScfResult;

/// γ on the nodes `ξ_j = jb/m`, `j = 0..=m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaProfile {
    pub b: f64,
    pub nodes: Vec<f64>,
    pub gamma: Vec<f64>,
}

impl GammaProfile {
    pub fn m(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn edge_value(&self) -> f64 {
        self.gamma[self.m()]
    }

    /// γ(t) for `0 ≤ t ≤ b` by four-point Lagrange interpolation, using the
    /// odd extension of γ for stencils that reach below zero.
    pub fn interpolate(&self, t: f64) -> f64 {
        let m = self.m();
        let step = self.b / m as f64;
        let u = (t / step).clamp(0.0, m as f64);
        let base = (u.floor() as isize - 1).clamp(-1, m as isize - 3);
        let value_at = |j: isize| {
            if j < 0 {
                -self.gamma[(-j) as usize]
            } else {
                self.gamma[j as usize]
            }
        };
        (0..4)
            .map(|p| {
                let jp = base + p;
                let weight: f64 = (0..4)
                    .filter(|&q| q != p)
                    .map(|q| {
                        let jq = (base + q) as f64;
                        (u - jq) / (jp as f64 - jq)
                    })
                    .product();
                weight * value_at(jp)
            })
            .sum()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 8 {
        Err(Error::Usage(format!("penny discretisation needs m >= 8, got {m}")))
    } else {
        Ok(())
    }
}

/// `K*(k b/m)` for `k = 0..=2m`; every difference and sum of nodes is one
/// of these.
fn tabulate_kernel(b: f64, ctx: &KernelContext, m: usize) -> Result<Vec<f64>> {
    let step = b / m as f64;
    (0..=2 * m)
        .into_par_iter()
        .map(|k| penny_kernel_regular(k as f64 * step, ctx))
        .collect()
}

/// Right-hand side `−2σ₀t/((1−c²)μ)`.
pub fn penny_rhs(cfg: &CrackConfig, c2: f64, t: f64) -> f64 {
    -2.0 * cfg.sigma0 * t / ((1.0 - c2) * cfg.mu)
}

/// Folded Nyström system for `γ(ξ_1) … γ(ξ_m)`.
pub fn assemble_penny_system(cfg: &CrackConfig, ctx: &KernelContext, m: usize) -> Result<DenseSystem> {
    check_m(m)?;
    let table = tabulate_kernel(cfg.b, ctx, m)?;
    let step = cfg.b / m as f64;
    let mut matrix = vec![0.0; m * m];
    for i in 1..=m {
        for j in 1..=m {
            let w = if j == m { 0.5 * step } else { step };
            let folded = table[i.abs_diff(j)] - table[i + j];
            let diag = if i == j { PI } else { 0.0 };
            matrix[(i - 1) * m + (j - 1)] = diag + w * folded;
        }
    }
    let rhs = (1..=m)
        .map(|i| penny_rhs(cfg, ctx.params.c2, i as f64 * step))
        .collect();
    DenseSystem::new(m, matrix, rhs)
}

pub fn solve_penny(cfg: &CrackConfig, ctx: &KernelContext, m: usize) -> Result<GammaProfile> {
    let sys = assemble_penny_system(cfg, ctx, m)?;
    let solution = solve_dense(&sys)?;
    let step = cfg.b / m as f64;
    let mut gamma = Vec::with_capacity(m + 1);
    gamma.push(0.0);
    gamma.extend(solution);
    Ok(GammaProfile {
        b: cfg.b,
        nodes: (0..=m).map(|j| j as f64 * step).collect(),
        gamma,
    })
}

/// Classical factor `2σ₀/(πμ(1−c²))`.
pub fn classical_penny_scf(cfg: &CrackConfig, c2: f64) -> f64 {
    2.0 * cfg.sigma0 / (PI * cfg.mu * (1.0 - c2))
}

pub fn scf_penny(gamma: &GammaProfile, cfg: &CrackConfig, c2: f64) -> ScfResult {
    let k = gamma.edge_value().abs() / gamma.b;
    ScfResult::new(k, classical_penny_scf(cfg, c2), gamma.m(), 0.0)
}

/// Opening `g(r) = ∫_r^b γ(ξ)/√(ξ²−r²) dξ` (zero for `r ≥ b`). The
/// substitution `ξ = √(r²+u²)` removes the endpoint singularity.
pub fn opening_from_gamma(gamma: &GammaProfile, r: f64) -> Result<f64> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::Domain { function: "opening_from_gamma", value: r });
    }
    let b = gamma.b;
    if r >= b {
        return Ok(0.0);
    }
    let upper = (b * b - r * r).sqrt();
    let f = |u: f64| {
        let xi = (r * r + u * u).sqrt().min(b);
        if xi == 0.0 {
            // γ is odd, so γ(ξ)/ξ → γ'(0)
            let step = b / gamma.m() as f64;
            gamma.interpolate(step) / step
        } else {
            gamma.interpolate(xi) / xi
        }
    };
    let width = b / gamma.m() as f64;
    Ok(integrate_adaptive(f, 0.0, upper, width, 1e-10 * (1.0 + b))?.value)
}

/// Classical density `−2σ₀t/(π(1−c²)μ)`.
pub fn classical_penny_gamma(b: f64, c2: f64, t: f64, sigma0: f64, mu: f64) -> Result<f64> {
    if !(0.0..=b).contains(&t) {
        return Err(Error::Domain { function: "classical_penny_gamma", value: t });
    }
    Ok(-2.0 * sigma0 * t / (PI * (1.0 - c2) * mu))
}
