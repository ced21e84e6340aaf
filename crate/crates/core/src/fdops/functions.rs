//! Concrete analytic evaluators: closures, the radial eigenfunction, the
//! separated full wavefunction, the polynomial factor, and the Gaussian
//! used by the operator limit studies.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{AnalyticFn1d, AnalyticFn2d, FdResult};
use crate::model::{self, OscillatorConfig, QuantumNumbers, RadialEigenfunction};
use crate::specfun::{cdh_poly, log_generalized_degree};

/// Closure-backed 1D evaluator with a declared strip, mostly for tests.
pub struct Closure1d<F> {
    strip: f64,
    f: F,
}

impl<F> Closure1d<F>
where
    F: Fn(Complex64) -> FdResult<Complex64> + Sync,
{
    pub fn new(strip: f64, f: F) -> Self {
        Self { strip, f }
    }
}

impl<F> AnalyticFn1d for Closure1d<F>
where
    F: Fn(Complex64) -> FdResult<Complex64> + Sync,
{
    fn strip_halfwidth(&self) -> f64 {
        self.strip
    }
    fn eval(&self, rho: Complex64) -> FdResult<Complex64> {
        (self.f)(rho)
    }
}

/// Closure-backed 2D evaluator (no exact derivatives attached).
pub struct Closure2d<F> {
    strip: f64,
    f: F,
}

impl<F> Closure2d<F>
where
    F: Fn(Complex64, f64) -> FdResult<Complex64> + Sync,
{
    pub fn new(strip: f64, f: F) -> Self {
        Self { strip, f }
    }
}

impl<F> AnalyticFn2d for Closure2d<F>
where
    F: Fn(Complex64, f64) -> FdResult<Complex64> + Sync,
{
    fn strip_halfwidth(&self) -> f64 {
        self.strip
    }
    fn eval(&self, rho: Complex64, phi: f64) -> FdResult<Complex64> {
        (self.f)(rho, phi)
    }
}

impl AnalyticFn1d for RadialEigenfunction {
    /// Gamma products, a generalized power and a polynomial: analytic well
    /// past the +-1 shifts the residual checks request.
    fn strip_halfwidth(&self) -> f64 {
        2.0
    }
    fn eval(&self, rho: Complex64) -> FdResult<Complex64> {
        Ok(RadialEigenfunction::eval(self, rho)?)
    }
}

/// Omega_n(rho) = S_n(rho^2; alpha, nu, 1/2): entire, shifts exact.
#[derive(Debug, Clone, Copy)]
pub struct OmegaPoly {
    pub n: u32,
    pub alpha: f64,
    pub nu: f64,
}

impl AnalyticFn1d for OmegaPoly {
    fn strip_halfwidth(&self) -> f64 {
        f64::INFINITY
    }
    fn eval(&self, rho: Complex64) -> FdResult<Complex64> {
        Ok(cdh_poly(self.n, rho * rho, self.alpha, self.nu, 0.5)?)
    }
}

/// The separated eigenstate psi_{nm} as a 2D evaluator declaring its
/// angular harmonic, so d^2/dphi^2 resolves to -m^2 exactly.
pub struct SeparatedState {
    qn: QuantumNumbers,
    radial: RadialEigenfunction,
}

impl SeparatedState {
    pub fn new(config: &OscillatorConfig, qn: &QuantumNumbers) -> crate::model::ModelResult<Self> {
        Ok(Self {
            qn: *qn,
            radial: model::radial_eigenfunction(config, qn)?,
        })
    }
    pub fn radial(&self) -> &RadialEigenfunction {
        &self.radial
    }
}

impl AnalyticFn2d for SeparatedState {
    fn strip_halfwidth(&self) -> f64 {
        2.0
    }
    fn eval(&self, rho: Complex64, phi: f64) -> FdResult<Complex64> {
        let log_pref = -log_generalized_degree(-rho, Complex64::new(0.5, 0.0))?;
        let angular = Complex64::new(0.0, self.qn.m_ang as f64 * phi).exp() / (2.0 * PI).sqrt();
        Ok(log_pref.exp() * self.radial.eval(rho)? * angular)
    }
    fn angular_harmonic(&self) -> Option<i32> {
        Some(self.qn.m_ang)
    }
}

/// f(r) = e^{-r^2} e^{i m phi} expressed in lambda_bar units, the built-in
/// test function of the operator limit studies (r physical, rho = r/lambda_bar).
#[derive(Debug, Clone, Copy)]
pub struct GaussianHarmonic {
    pub m: i32,
    pub lambda_bar: f64,
}

impl GaussianHarmonic {
    pub fn new(m: i32, lambda_bar: f64) -> Self {
        Self { m, lambda_bar }
    }
    /// Value at physical (r, phi).
    pub fn eval_real(&self, r: f64, phi: f64) -> Complex64 {
        (-r * r).exp() * Complex64::new(0.0, self.m as f64 * phi).exp()
    }
}

impl AnalyticFn2d for GaussianHarmonic {
    fn strip_halfwidth(&self) -> f64 {
        f64::INFINITY
    }
    fn eval(&self, rho: Complex64, phi: f64) -> FdResult<Complex64> {
        let r = rho * self.lambda_bar;
        Ok((-(r * r)).exp() * Complex64::new(0.0, self.m as f64 * phi).exp())
    }
    fn angular_harmonic(&self) -> Option<i32> {
        Some(self.m)
    }
}
