//! Finite-difference operators realised by analytic continuation.
//!
//! The shift operator e^{i lambda_bar d/dr} is *defined* as
//! f(r) -> f(r + i lambda_bar): every eigenfunction in play (products of
//! gammas, generalized powers, polynomials) is analytic on the required
//! strip, and evaluators declare the strip they guarantee. All appliers work
//! in the dimensionless variable rho = r / lambda_bar and return values in
//! the config's energy unit, together with the largest summand magnitude so
//! callers can form cancellation-safe relative residuals.

mod appliers;
mod functions;
mod omega;
mod plane_wave;

pub use appliers::{
    free_hamiltonian_apply, hamiltonian_apply, momentum_apply, potential_apply,
    radial_hamiltonian_apply, Applied, AppliedMomentum,
};
pub(crate) use appliers::{d2_phi_at, d_phi_at};
pub use functions::{Closure1d, Closure2d, GaussianHarmonic, OmegaPoly, SeparatedState};
pub use omega::{omega_equation_residual, omega_equation_terms};
pub use plane_wave::{plane_wave, MomentumVector, PlaneWave};

use num_complex::Complex64;
use thiserror::Error;

use crate::model::ModelError;
use crate::specfun::SpecFunError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FdOpsError {
    /// A shift would leave the evaluator's declared analyticity strip.
    #[error("strip violation: requested point {requested} outside |Im| <= {halfwidth}")]
    StripViolation {
        requested: Complex64,
        halfwidth: f64,
    },
    /// The finite-difference phi-derivative fallback failed its two-step
    /// cross-check.
    #[error("phi-derivative fallback disagreement {disagreement} exceeds 1e-8")]
    DerivativeAccuracy { disagreement: f64 },
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type FdResult<T> = Result<T, FdOpsError>;

/// One-dimensional analytic evaluator on a strip |Im rho| <= strip_halfwidth.
pub trait AnalyticFn1d: Sync {
    fn strip_halfwidth(&self) -> f64;
    fn eval(&self, rho: Complex64) -> FdResult<Complex64>;
}

/// Two-dimensional analytic evaluator; the radial argument is dimensionless
/// (units of lambda_bar). Exact phi-derivatives may be attached; when the
/// function is a pure angular harmonic e^{i m phi}, declaring `m` lets
/// appliers resolve d^2/dphi^2 exactly as -m^2.
pub trait AnalyticFn2d: Sync {
    fn strip_halfwidth(&self) -> f64;
    fn eval(&self, rho: Complex64, phi: f64) -> FdResult<Complex64>;
    fn d_phi(&self, _rho: Complex64, _phi: f64) -> Option<FdResult<Complex64>> {
        None
    }
    fn d2_phi(&self, _rho: Complex64, _phi: f64) -> Option<FdResult<Complex64>> {
        None
    }
    fn angular_harmonic(&self) -> Option<i32> {
        None
    }
}

/// e^{i k d/drho} f (rho) = f(rho + i k).
pub fn shift(f: &dyn AnalyticFn1d, rho: Complex64, k: i32) -> FdResult<Complex64> {
    let target = rho + Complex64::new(0.0, k as f64);
    if target.im.abs() > f.strip_halfwidth() {
        return Err(FdOpsError::StripViolation {
            requested: target,
            halfwidth: f.strip_halfwidth(),
        });
    }
    f.eval(target)
}

pub(crate) fn shift_2d(
    f: &dyn AnalyticFn2d,
    rho: Complex64,
    phi: f64,
    k: i32,
) -> FdResult<Complex64> {
    let target = rho + Complex64::new(0.0, k as f64);
    if target.im.abs() > f.strip_halfwidth() {
        return Err(FdOpsError::StripViolation {
            requested: target,
            halfwidth: f.strip_halfwidth(),
        });
    }
    f.eval(target, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_moves_the_argument() {
        let f = Closure1d::new(2.0, |z| Ok(z));
        let v = shift(&f, Complex64::new(2.0, 0.0), 1).unwrap();
        assert_eq!(v, Complex64::new(2.0, 1.0));
        let c = Closure1d::new(5.0, |_| Ok(Complex64::new(4.0, -1.0)));
        for k in [-3, 0, 2] {
            assert_eq!(
                shift(&c, Complex64::new(0.3, 0.0), k).unwrap(),
                Complex64::new(4.0, -1.0)
            );
        }
    }

    #[test]
    fn shift_is_an_exponential_eigenoperation() {
        // f = exp(i q rho): e^{i d} f = e^{-q} f
        let q = 0.7;
        let f = Closure1d::new(f64::INFINITY, move |z| {
            Ok((Complex64::new(0.0, q) * z).exp())
        });
        let rho = Complex64::new(1.3, 0.0);
        let shifted = shift(&f, rho, 1).unwrap();
        let expected = (-q).exp() * f.eval(rho).unwrap();
        assert!((shifted - expected).norm() <= 1e-15);
    }

    #[test]
    fn shift_homomorphism_on_a_gamma_evaluator() {
        // two single shifts equal one double shift, on a gamma-based evaluator
        let f = Closure1d::new(4.0, |z| {
            Ok(crate::specfun::log_gamma(z + Complex64::new(3.0, 0.0))?.exp())
        });
        let rho = Complex64::new(1.7, 0.0);
        let once_then_once = shift(&f, rho + Complex64::new(0.0, 1.0), 1).unwrap();
        let twice = shift(&f, rho, 2).unwrap();
        assert_eq!(once_then_once, twice);
    }

    #[test]
    fn strip_violation_is_reported() {
        let f = Closure1d::new(1.0, |z| Ok(z));
        let err = shift(&f, Complex64::new(0.0, 0.5), 1).unwrap_err();
        assert!(matches!(err, FdOpsError::StripViolation { .. }));
    }
}
