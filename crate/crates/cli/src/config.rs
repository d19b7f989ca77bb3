//! Run configuration: TOML files, built-in presets and flag overrides.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Plane,
    Penny,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Plane => "plane",
            Problem::Penny => "penny",
        }
    }

    /// Default mesh cells (plane) or quadrature intervals (penny).
    pub fn default_size(self) -> usize {
        match self {
            Problem::Plane => 800,
            Problem::Penny => 128,
        }
    }

    fn check_size(self, size: usize) -> Result<()> {
        let ok = match self {
            Problem::Plane => size >= 8 && size % 2 == 0,
            Problem::Penny => size >= 8,
        };
        if ok {
            Ok(())
        } else {
            let (name, rule) = match self {
                Problem::Plane => ("n", "an even count of at least 8"),
                Problem::Penny => ("m", "a count of at least 8"),
            };
            Err(CliError::validation(name, format!("{name} = {size} must be {rule}")))
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl Preset {
    fn source(self) -> &'static str {
        match self {
            Preset::Fig1 => include_str!("../presets/fig1.toml"),
            Preset::Fig2 => include_str!("../presets/fig2.toml"),
            Preset::Fig3 => include_str!("../presets/fig3.toml"),
            Preset::Fig4 => include_str!("../presets/fig4.toml"),
        }
    }
}

fn read_toml<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    parse_toml(&text, &path.display().to_string())
}

fn parse_toml<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    toml::from_str(text).map_err(|e| CliError::Validation {
        parameter: None,
        message: format!("{origin}: {e}"),
    })
}

/// Inclusive grid `start, start+step, …, stop` of coupling numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl NGrid {
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| self.start + i as f64 * self.step).collect()
    }

    fn validate(&self) -> Result<()> {
        let ok = self.start >= 0.0 && self.stop < 1.0 && self.start <= self.stop;
        if !ok || !self.start.is_finite() || !self.stop.is_finite() {
            return Err(CliError::validation(
                "N",
                format!("N grid {}..{} must lie in [0, 1) with start ≤ stop", self.start, self.stop),
            ));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(CliError::validation("N", format!("N grid step {} must be positive", self.step)));
        }
        Ok(())
    }
}

/// Sweep settings as read from a file; every field may be overridden.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub problem: Option<Problem>,
    pub c2_list: Option<Vec<f64>>,
    #[serde(rename = "N_grid")]
    pub n_grid: Option<NGrid>,
    pub b_list: Option<Vec<f64>>,
    pub n_or_m: Option<usize>,
    pub output_path: Option<String>,
    pub format: Option<Format>,
}

impl SweepFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_toml(path)
    }

    pub fn preset(preset: Preset) -> Self {
        parse_toml(preset.source(), "preset").expect("built-in presets are valid")
    }

    /// Fill the remaining fields and validate.
    pub fn resolve(self) -> Result<SweepConfig> {
        let problem = self.problem.ok_or_else(|| missing("problem"))?;
        let config = SweepConfig {
            problem,
            c2_list: self.c2_list.ok_or_else(|| missing("c2"))?,
            n_grid: self.n_grid.ok_or_else(|| missing("N"))?,
            b_list: self.b_list.ok_or_else(|| missing("b"))?,
            n_or_m: self.n_or_m.unwrap_or_else(|| problem.default_size()),
            output_path: self.output_path,
            format: self.format.unwrap_or_default(),
        };
        config.validate()?;
        Ok(config)
    }
}

fn missing(name: &str) -> CliError {
    CliError::validation(name, format!("missing required parameter {name}"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub problem: Problem,
    pub c2_list: Vec<f64>,
    pub n_grid: NGrid,
    pub b_list: Vec<f64>,
    pub n_or_m: usize,
    pub output_path: Option<String>,
    pub format: Format,
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.c2_list.is_empty() {
            return Err(CliError::validation("c2", "c2 list is empty"));
        }
        if self.b_list.is_empty() {
            return Err(CliError::validation("b", "b list is empty"));
        }
        self.n_grid.validate()?;
        for &c2 in &self.c2_list {
            voidcrack::PorousParams::new(c2, self.n_grid.start)?;
        }
        for &b in &self.b_list {
            voidcrack::CrackConfig::normalized(b)?;
        }
        self.problem.check_size(self.n_or_m)
    }

    /// Grid points `(c2, b, N)` in output order: c² outer, b middle, N inner.
    pub fn points(&self) -> Vec<(f64, f64, f64)> {
        let ns = self.n_grid.values();
        self.c2_list
            .iter()
            .flat_map(|&c2| {
                let ns = &ns;
                self.b_list
                    .iter()
                    .flat_map(move |&b| ns.iter().map(move |&n| (c2, b, n)))
            })
            .collect()
    }
}

/// Single-solve settings as read from a file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveFile {
    pub c2: Option<f64>,
    #[serde(rename = "N")]
    pub coupling: Option<f64>,
    pub b: Option<f64>,
    pub sigma0: Option<f64>,
    pub mu: Option<f64>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub output_path: Option<String>,
    pub profile_path: Option<String>,
    pub format: Option<Format>,
}

impl SolveFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_toml(path)
    }

    pub fn resolve(self, problem: Problem) -> Result<SolveConfig> {
        let size = match problem {
            Problem::Plane => self.n,
            Problem::Penny => self.m,
        };
        let config = SolveConfig {
            problem,
            c2: self.c2.ok_or_else(|| missing("c2"))?,
            coupling: self.coupling.ok_or_else(|| missing("N"))?,
            b: self.b.ok_or_else(|| missing("b"))?,
            sigma0: self.sigma0.unwrap_or(1.0),
            mu: self.mu.unwrap_or(1.0),
            size: size.unwrap_or_else(|| problem.default_size()),
            output_path: self.output_path,
            profile_path: self.profile_path,
            format: self.format.unwrap_or_default(),
        };
        problem.check_size(config.size)?;
        Ok(config)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub problem: Problem,
    pub c2: f64,
    pub coupling: f64,
    pub b: f64,
    pub sigma0: f64,
    pub mu: f64,
    pub size: usize,
    pub output_path: Option<String>,
    pub profile_path: Option<String>,
    pub format: Format,
}
