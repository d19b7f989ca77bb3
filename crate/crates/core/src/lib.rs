//! Static crack problems in a linear elastic medium with voids.
//!
//! Two geometries are covered: a plane-strain line crack, whose opening
//! solves a hypersingular equation discretised by collocation, and a
//! penny-shaped crack, reduced to a second-kind Fredholm equation and
//! solved by the Nyström method. Both yield the stress concentration
//! factor at the crack edge as a function of the coupling number N, the
//! stiffness ratio c² and the crack size b measured in units of l₂.

pub mod error;
pub mod kernels;
pub mod material;
pub mod numerics;
pub mod penny;
pub mod plane;
pub mod scf;
pub mod specfun;

pub use error::{Error, Result};
pub use kernels::KernelContext;
pub use material::{CrackConfig, PorousParams};
pub use scf::ScfResult;
