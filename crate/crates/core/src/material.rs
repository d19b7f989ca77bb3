//! Material and geometry parameters in dimensionless form.

use crate::error::{Error, Result};

/// Below this value of β the elastic and void-fraction fields are treated
/// as fully decoupled and N is set to exactly zero.
pub const DECOUPLED_BETA: f64 = 1e-12;

/// Dimensionless state of a Cowin–Nunziato medium.
///
/// Only `c2` and `n` enter the solvers. `h`, `l1` and `l2` are kept when
/// the parameters come from physical constants and are `None` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PorousParams {
    /// μ/(λ+2μ)
    pub c2: f64,
    /// Coupling number.
    pub n: f64,
    /// β/(λ+2μ)
    pub h: Option<f64>,
    pub l1: Option<f64>,
    pub l2: Option<f64>,
}

impl PorousParams {
    /// Build directly from the stiffness ratio and the coupling number.
    pub fn new(c2: f64, n: f64) -> Result<Self> {
        validate_c2(c2)?;
        validate_n(n)?;
        Ok(Self {
            c2,
            n,
            h: None,
            l1: None,
            l2: None,
        })
    }
}

fn validate_c2(c2: f64) -> Result<()> {
    if c2.is_finite() && c2 > 0.0 && c2 < 1.0 {
        Ok(())
    } else {
        Err(Error::Parameter {
            name: "c2",
            value: c2,
            reason: "must lie in (0, 1)",
        })
    }
}

fn validate_n(n: f64) -> Result<()> {
    if n.is_finite() && (0.0..1.0).contains(&n) {
        Ok(())
    } else {
        Err(Error::Coupling { n })
    }
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

/// Convert the physical constants (λ, μ, α, β, ξ) to the dimensionless set.
///
/// λ may be negative as long as λ + 2μ stays positive. A β below
/// [`DECOUPLED_BETA`] yields N = 0 exactly, with l₁ left undefined.
pub fn derive_dimensionless(
    lambda: f64,
    mu: f64,
    alpha: f64,
    beta: f64,
    xi: f64,
) -> Result<PorousParams> {
    positive("mu", mu)?;
    if !lambda.is_finite() {
        return Err(Error::Parameter {
            name: "lambda",
            value: lambda,
            reason: "must be finite",
        });
    }
    let modulus = lambda + 2.0 * mu;
    if modulus <= 0.0 {
        return Err(Error::Parameter {
            name: "lambda",
            value: lambda,
            reason: "lambda + 2 mu must be positive",
        });
    }
    positive("alpha", alpha)?;
    positive("xi", xi)?;
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::Parameter {
            name: "beta",
            value: beta,
            reason: "must be positive and finite",
        });
    }

    let c2 = mu / modulus;
    validate_c2(c2)?;
    let l2 = (alpha / xi).sqrt();

    if beta < DECOUPLED_BETA {
        return Ok(PorousParams {
            c2,
            n: 0.0,
            h: Some(0.0),
            l1: None,
            l2: Some(l2),
        });
    }

    let h = beta / modulus;
    let l1 = (alpha / beta).sqrt();
    let n = beta * beta / (xi * modulus);
    validate_n(n)?;
    Ok(PorousParams {
        c2,
        n,
        h: Some(h),
        l1: Some(l1),
        l2: Some(l2),
    })
}

/// Crack geometry and loading. `b` is the half-length (or radius) in
/// units of l₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrackConfig {
    pub b: f64,
    pub sigma0: f64,
    pub mu: f64,
}

impl CrackConfig {
    pub fn new(b: f64, sigma0: f64, mu: f64) -> Result<Self> {
        positive("b", b)?;
        positive("sigma0", sigma0)?;
        positive("mu", mu)?;
        Ok(Self { b, sigma0, mu })
    }

    /// Unit load and unit shear modulus.
    pub fn normalized(b: f64) -> Result<Self> {
        Self::new(b, 1.0, 1.0)
    }
}
