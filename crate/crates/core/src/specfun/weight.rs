//! Configurational-space weight function w(rho) = (1/rho) |(-rho)^(1/2)|^2.
//!
//! Computed from the gamma-ratio definition of the generalized degree; the
//! closed form tanh(pi rho) it collapses to serves as an independent oracle
//! in the tests, not as the implementation.

use num_complex::Complex64;

use super::gamma::log_gamma;
use super::{SpecFunError, SpecFunResult};

pub fn weight_function(rho: f64) -> SpecFunResult<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(SpecFunError::Domain {
            what: "weight_function requires rho > 0",
            value: rho,
        });
    }
    // |(-rho)^(1/2)|^2 = |Gamma(1/2 + i rho)|^2 / |Gamma(i rho)|^2
    let num = log_gamma(Complex64::new(0.5, rho))?;
    let den = log_gamma(Complex64::new(0.0, rho))?;
    Ok((2.0 * (num.re - den.re)).exp() / rho)
}
