//! Complex special-function kernel.
//!
//! Everything downstream (spectrum residuals, orthonormality quadrature,
//! limit studies) bottlenecks on the accuracy of this layer, so the gamma
//! evaluator targets ~1e-15 relative on the working strip and all gamma
//! ratios are assembled in log space and exponentiated once.

mod cdh;
mod gamma;
mod laguerre;
mod weight;

pub use cdh::cdh_poly;
pub use gamma::{generalized_degree, log_gamma, log_generalized_degree, log_m_factor, m_factor};
pub use laguerre::laguerre;
pub use weight::weight_function;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    /// Gamma pole hit exactly (z a non-positive integer).
    #[error("gamma pole at z = {z}")]
    Pole { z: Complex64 },
    /// A Pochhammer denominator vanished before the terminating sum ended.
    #[error("invalid parameter: {what} (offending value {value})")]
    Parameter { what: &'static str, value: f64 },
    /// Argument outside the function's real domain.
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },
}

pub type SpecFunResult<T> = Result<T, SpecFunError>;

/// Exact pole test for the gamma function: non-positive real integers.
pub(crate) fn is_gamma_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}
