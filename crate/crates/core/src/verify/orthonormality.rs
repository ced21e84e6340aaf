//! Orthonormality integrals: the radial inner products of the bound states,
//! the factorized full-wavefunction condition, and the measure-collapse
//! identity that reduces the weighted 2D integral to the plain radial one.

use num_complex::Complex64;

use super::quadrature::{integrate, QuadratureSpec, VerifyResult};
use crate::model::{
    nr_norm_const, radial_eigenfunction, spectral_constants, OscillatorConfig, QuantumNumbers,
};
use crate::specfun::{laguerre, log_generalized_degree, weight_function};

/// Truncation point for integrands with envelope rho^p e^{-pi rho}: the
/// first point past the peak where the envelope falls to 1e-16 of it.
/// The power p comes from the gamma modulus asymptotics
/// |Gamma(a+ir)Gamma(v+ir)/Gamma(ir)|^2 ~ 2 pi rho^(2a+2v-1) e^(-pi rho)
/// times the polynomial degrees.
pub fn envelope_truncation(power: f64) -> f64 {
    use std::f64::consts::PI;
    let p = power.max(1.0);
    let peak = p / PI;
    let target = -16.0 * std::f64::consts::LN_10;
    let g = |rho: f64| p * (rho / peak).ln() - PI * (rho - peak);
    let (mut lo, mut hi) = (peak, peak + 400.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.max(20.0).min(120.0)
}

/// integral_0^inf Rbar_{n1} Rbar_{n2} d rho with the phase-free modulus form
/// (sign of the polynomial kept). Expected: delta_{n1 n2}.
pub fn radial_orthonormality(
    config: &OscillatorConfig,
    m_ang: i32,
    n1: u32,
    n2: u32,
    spec: &QuadratureSpec,
) -> VerifyResult<f64> {
    let f1 = radial_eigenfunction(config, &QuantumNumbers::new(n1, m_ang))?;
    let f2 = radial_eigenfunction(config, &QuantumNumbers::new(n2, m_ang))?;
    let sc = f1.constants();
    let power = 2.0 * (sc.alpha + sc.nu) - 1.0 + 2.0 * (n1 + n2) as f64;
    let spec = spec.with_truncation(spec.truncation.unwrap_or_else(|| envelope_truncation(power)));
    integrate(
        |rho| {
            f1.modulus(rho).expect("modulus finite on rho > 0")
                * f2.modulus(rho).expect("modulus finite on rho > 0")
        },
        0.0,
        f64::INFINITY,
        &spec,
    )
}

/// Full-wavefunction inner product, factorized: the angular integral gives
/// exactly delta_{m1 m2}; the radial factor reduces to the plain d rho
/// integral through the measure-collapse identity.
pub fn full_orthonormality(
    config: &OscillatorConfig,
    qn1: &QuantumNumbers,
    qn2: &QuantumNumbers,
    spec: &QuadratureSpec,
) -> VerifyResult<Complex64> {
    spectral_constants(config, qn1)?;
    spectral_constants(config, qn2)?;
    if qn1.m_ang != qn2.m_ang {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let v = radial_orthonormality(config, qn1.m_ang, qn1.n, qn2.n, spec)?;
    Ok(Complex64::new(v, 0.0))
}

/// w(rho) rho |(-rho)^(1/2)|^{-2} - 1, the identity that makes the weighted
/// 2D measure collapse onto d rho; asserted numerically, never assumed.
pub fn measure_collapse_residual(rho: f64) -> VerifyResult<f64> {
    let w = weight_function(rho)?;
    let log_degree = log_generalized_degree(
        Complex64::new(-rho, 0.0),
        Complex64::new(0.5, 0.0),
    )?;
    let inv_mod_sq = (-2.0 * log_degree.re).exp();
    Ok((w * rho * inv_mod_sq - 1.0).abs())
}

/// integral |psi^NR|^2 d^2r for the nonrelativistic state, radial part by
/// quadrature (the angular factor is exactly 1).
pub fn nr_normalization(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
    spec: &QuadratureSpec,
) -> VerifyResult<f64> {
    let scale = (config.mass() * config.omega() / config.hbar()).sqrt();
    let c = nr_norm_const(config, qn);
    let am = qn.abs_m();
    let radial = move |r: f64| {
        let xi = r * scale;
        let l = laguerre(qn.n, am as f64, xi * xi).expect("|m| >= 0");
        let v = c * xi.powi(am as i32) * (-0.5 * xi * xi).exp() * l;
        v * v * r
    };
    // envelope e^{-xi^2}: truncate where xi ~ sqrt(40 ln 10)
    let cutoff = 10.0 / scale * (1.0 + (qn.n + am) as f64).sqrt();
    integrate(radial, 0.0, f64::INFINITY, &spec.with_truncation(cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(omega0: f64, b: f64) -> OscillatorConfig {
        OscillatorConfig::dimensionless(omega0, b).unwrap()
    }

    #[test]
    fn radial_states_are_orthonormal() {
        let spec = QuadratureSpec::default();
        let config = cfg(1.0, 0.0);
        for (n1, n2, want) in [(0, 0, 1.0), (0, 1, 0.0), (2, 2, 1.0), (2, 3, 0.0)] {
            let v = radial_orthonormality(&config, 0, n1, n2, &spec).unwrap();
            assert!((v - want).abs() <= 1e-6, "({n1},{n2}): {v}");
        }
        // a deep nonrelativistic cell with |m| = 2
        let config = cfg(0.05, 1.0);
        let v = radial_orthonormality(&config, 2, 2, 2, &spec).unwrap();
        assert!((v - 1.0).abs() <= 1e-6, "got {v}");
    }

    #[test]
    fn cross_m_inner_products_vanish_exactly() {
        let spec = QuadratureSpec::default();
        let config = cfg(0.2, 1.0);
        let v = full_orthonormality(
            &config,
            &QuantumNumbers::new(0, 1),
            &QuantumNumbers::new(0, -1),
            &spec,
        )
        .unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
        let diag = full_orthonormality(
            &config,
            &QuantumNumbers::new(1, 2),
            &QuantumNumbers::new(1, 2),
            &spec,
        )
        .unwrap();
        assert!((diag.re - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn measure_collapse_holds() {
        for rho in [0.1, 0.7, 2.37, 9.0] {
            assert!(measure_collapse_residual(rho).unwrap() <= 1e-12, "rho={rho}");
        }
    }

    #[test]
    fn nr_states_are_normalized() {
        let spec = QuadratureSpec::default();
        for (n, m) in [(0, 0), (1, 1), (2, 3)] {
            let v = nr_normalization(&cfg(0.3, 0.0), &QuantumNumbers::new(n, m), &spec).unwrap();
            assert!((v - 1.0).abs() <= 1e-8, "({n},{m}): {v}");
        }
    }
}
