//! Dense linear algebra, adaptive quadrature and limit extrapolation.

mod dense;
mod extrapolate;
mod quadrature;

pub use dense::{least_squares, solve_dense, DenseSystem};
pub use extrapolate::{extrapolate_limit, Extrapolation};
pub use quadrature::{gauss_kronrod15, integrate_adaptive, QuadResult};
