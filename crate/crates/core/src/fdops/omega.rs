//! The first-order finite-difference equation satisfied by the polynomial
//! factor Omega_n(rho) = S_n(rho^2; alpha, nu, 1/2):
//!
//! [(alpha + i rho)(nu + i rho) e^{-i d} - (alpha - i rho)(nu - i rho) e^{i d}] Omega
//!   = 2 i rho (E / hbar omega) Omega,
//!
//! near-zero exactly when E / hbar omega = 2n + alpha + nu. (The right side
//! carries the factor rho: without it the n = 0 case already fails, as a
//! one-line expansion shows.)

use num_complex::Complex64;

use crate::specfun::cdh_poly;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The three summands: forward term, backward term, and -RHS.
pub fn omega_equation_terms(
    alpha: f64,
    nu: f64,
    e_over_hw: f64,
    n: u32,
    rho: f64,
) -> [Complex64; 3] {
    let omega = |x: Complex64| {
        cdh_poly(n, x * x, alpha, nu, 0.5)
            .expect("Pochhammer denominators positive for nu >= alpha >= 1/2")
    };
    let rc = Complex64::new(rho, 0.0);
    let forward = (alpha + I * rc) * (nu + I * rc) * omega(rc - I);
    let backward = -(alpha - I * rc) * (nu - I * rc) * omega(rc + I);
    let rhs = -2.0 * I * rc * e_over_hw * omega(rc);
    [forward, backward, rhs]
}

/// LHS minus RHS of the Omega equation at real rho.
pub fn omega_equation_residual(
    alpha: f64,
    nu: f64,
    e_over_hw: f64,
    n: u32,
    rho: f64,
) -> Complex64 {
    let [a, b, c] = omega_equation_terms(alpha, nu, e_over_hw, n, rho);
    a + b + c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{energy_over_hbar_omega, spectral_constants, OscillatorConfig, QuantumNumbers};

    #[test]
    fn vanishes_at_the_spectral_energies() {
        let config = OscillatorConfig::dimensionless(1.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0);
        let sc = spectral_constants(&config, &qn).unwrap();
        for n in 0..=5u32 {
            let e = 2.0 * n as f64 + sc.alpha + sc.nu;
            for rho in [0.5, 1.0, 3.0] {
                // relative to the summand scale the residual sits at eps level
                let r = omega_equation_residual(sc.alpha, sc.nu, e, n, rho).norm();
                let scale = omega_equation_terms(sc.alpha, sc.nu, e, n, rho)
                    .iter()
                    .map(|t| t.norm())
                    .fold(1.0f64, f64::max);
                assert!(r / scale < 1e-13, "n={n}, rho={rho}: rel={}", r / scale);
                // raw residuals clear 1e-10 wherever the summands stay small
                // enough for f64 to resolve it (n<=2 up to rho=3, n<=4 at rho<=1)
                if n <= 2 || (n <= 4 && rho <= 1.0) {
                    assert!(r < 1e-10, "n={n}, rho={rho}: raw={r}");
                }
            }
        }
    }

    #[test]
    fn n0_hand_expansion() {
        // Omega = 1: (a+ir)(v+ir) - (a-ir)(v-ir) = 2 i rho (a+v) = RHS exactly
        let (alpha, nu) = (0.7071, 1.7071);
        let r = omega_equation_residual(alpha, nu, alpha + nu, 0, 1.0);
        assert!(r.norm() < 1e-12);
    }

    #[test]
    fn detects_a_wrong_energy() {
        let config = OscillatorConfig::dimensionless(1.0, 0.0).unwrap();
        let qn = QuantumNumbers::new(0, 0);
        let e = energy_over_hbar_omega(&config, &qn).unwrap();
        let sc = spectral_constants(&config, &qn).unwrap();
        let worst = [0.5f64, 1.0, 3.0]
            .iter()
            .map(|&rho| omega_equation_residual(sc.alpha, sc.nu, e + 0.1, 0, rho).norm())
            .fold(0.0f64, f64::max);
        assert!(worst >= 0.1, "detector too weak: {worst}");
    }
}
