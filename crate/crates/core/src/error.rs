use thiserror::Error;

/// Errors raised by the solvers and their building blocks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {value} outside the domain of {function}")]
    Domain { function: &'static str, value: f64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    Parameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("coupling number N = {n} is outside the admissible range [0, 1)")]
    Coupling { n: f64 },

    #[error("kernel {kernel} is singular at x = 0")]
    Singularity { kernel: &'static str },

    #[error("matrix is numerically singular at pivot {pivot}")]
    SingularMatrix { pivot: usize },

    #[error("{0}")]
    Usage(String),

    #[error("quadrature did not converge: achieved error {achieved:e}, requested {requested:e}")]
    Convergence { achieved: f64, requested: f64 },
}

impl Error {
    /// True for failures of a numerical procedure as opposed to invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::SingularMatrix { .. } | Error::Convergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
