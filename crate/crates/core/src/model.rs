//! The oscillator model: configuration, spectral constants, energy spectrum,
//! radial and full wavefunctions, and their nonrelativistic counterparts.
//!
//! All internal math runs in natural units (hbar = mass = c = 1) with the
//! dimensionless oscillator strength omega0 = hbar omega / (m c^2) as the
//! single physical knob; physical-unit configurations convert at the API
//! boundary only.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::specfun::{
    cdh_poly, laguerre, log_gamma, log_generalized_degree, log_m_factor, SpecFunError,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// The parameters left the exactly solvable regime: a radicand of the
    /// spectral-constant formulas went negative.
    #[error("complex exponent: {which} radicand is negative ({radicand})")]
    ComplexExponent { which: &'static str, radicand: f64 },
    #[error("invalid configuration: {what} (got {value})")]
    Config { what: &'static str, value: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type ModelResult<T> = Result<T, ModelError>;

/// Physical constants of the oscillator plus the potential parameter `b`.
///
/// `lambda_bar` (the Compton wavelength, the imaginary shift step of every
/// finite-difference operator) and `omega0` are derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    mass: f64,
    omega: f64,
    c: f64,
    hbar: f64,
    b: f64,
}

impl OscillatorConfig {
    pub fn physical(mass: f64, omega: f64, c: f64, hbar: f64, b: f64) -> ModelResult<Self> {
        for (what, value) in [
            ("mass must be positive and finite", mass),
            ("omega must be positive and finite", omega),
            ("c must be positive and finite", c),
            ("hbar must be positive and finite", hbar),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ModelError::Config { what, value });
            }
        }
        if !b.is_finite() {
            return Err(ModelError::Config {
                what: "b must be finite",
                value: b,
            });
        }
        Ok(Self {
            mass,
            omega,
            c,
            hbar,
            b,
        })
    }

    /// Natural units hbar = mass = c = 1; omega0 is then the angular frequency.
    pub fn dimensionless(omega0: f64, b: f64) -> ModelResult<Self> {
        Self::physical(1.0, omega0, 1.0, 1.0, b)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    /// Compton wavelength hbar/(m c).
    pub fn lambda_bar(&self) -> f64 {
        self.hbar / (self.mass * self.c)
    }
    /// Dimensionless oscillator strength hbar omega / (m c^2).
    pub fn omega0(&self) -> f64 {
        self.hbar * self.omega / (self.mass * self.c * self.c)
    }
    pub fn mc2(&self) -> f64 {
        self.mass * self.c * self.c
    }
    pub fn hbar_omega(&self) -> f64 {
        self.hbar * self.omega
    }
}

/// Radial and angular quantum numbers (n, m) with m entering through
/// a = m^2 - 1/4 and gamma = b m^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub m_ang: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, m_ang: i32) -> Self {
        Self { n, m_ang }
    }
    pub fn abs_m(&self) -> u32 {
        self.m_ang.unsigned_abs()
    }
    /// a = m^2 - 1/4 (never below -1/4).
    pub fn a(&self) -> f64 {
        let m = self.m_ang as f64;
        m * m - 0.25
    }
    /// gamma = b m^2.
    pub fn gamma(&self, b: f64) -> f64 {
        let m = self.m_ang as f64;
        b * m * m
    }
}

/// The exponents (alpha, nu) controlling the rho -> 0 and rho -> infinity
/// behaviour of the radial wavefunction; real only inside the exactly
/// solvable regime (nu >= alpha >= 1/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConstants {
    pub alpha: f64,
    pub nu: f64,
}

/// alpha = 1/2 + (1/2) sqrt(1 + 2(gamma + 1/omega0^2 - D)),
/// nu    = 1/2 + (1/2) sqrt(1 + 2(gamma + 1/omega0^2 + D)),
/// D = sqrt((gamma + 1/omega0^2)^2 - 4a/omega0^2).
///
/// This is the single validity gate: every downstream quantity requires it.
pub fn spectral_constants(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
) -> ModelResult<SpectralConstants> {
    let omega0 = config.omega0();
    let a = qn.a();
    let gamma = qn.gamma(config.b());
    let s = 1.0 / (omega0 * omega0);
    let outer = (gamma + s) * (gamma + s) - 4.0 * a * s;
    if outer < 0.0 {
        return Err(ModelError::ComplexExponent {
            which: "outer",
            radicand: outer,
        });
    }
    let d = outer.sqrt();
    let r_alpha = 1.0 + 2.0 * (gamma + s - d);
    if r_alpha < 0.0 {
        return Err(ModelError::ComplexExponent {
            which: "alpha",
            radicand: r_alpha,
        });
    }
    let r_nu = 1.0 + 2.0 * (gamma + s + d);
    if r_nu < 0.0 {
        return Err(ModelError::ComplexExponent {
            which: "nu",
            radicand: r_nu,
        });
    }
    Ok(SpectralConstants {
        alpha: 0.5 + 0.5 * r_alpha.sqrt(),
        nu: 0.5 + 0.5 * r_nu.sqrt(),
    })
}

/// E / (hbar omega) = 2n + alpha + nu.
pub fn energy_over_hbar_omega(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
) -> ModelResult<f64> {
    let sc = spectral_constants(config, qn)?;
    Ok(2.0 * qn.n as f64 + sc.alpha + sc.nu)
}

/// E_{n|m|} = hbar omega (2n + alpha + nu), in the config's energy unit.
pub fn energy(config: &OscillatorConfig, qn: &QuantumNumbers) -> ModelResult<f64> {
    Ok(config.hbar_omega() * energy_over_hbar_omega(config, qn)?)
}

/// The analytic radial eigenfunction
/// R(rho) = C (-rho)^(alpha) M_nu(rho) S_n(rho^2; alpha, nu, 1/2),
/// with the normalization constant held in log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialEigenfunction {
    config: OscillatorConfig,
    qn: QuantumNumbers,
    constants: SpectralConstants,
    log_norm_const: f64,
}

/// C_{n|m|} = sqrt(2 / (n! Gamma(n+alpha+nu) Gamma(n+alpha+1/2) Gamma(n+nu+1/2)))
fn log_norm_const(n: u32, sc: &SpectralConstants) -> f64 {
    let nf = n as f64;
    let mut log_fact = 0.0;
    for k in 2..=n {
        log_fact += (k as f64).ln();
    }
    let lg = |x: f64| {
        log_gamma(Complex64::new(x, 0.0))
            .expect("gamma argument positive for nu >= alpha >= 1/2")
            .re
    };
    0.5 * (2.0f64.ln()
        - log_fact
        - lg(nf + sc.alpha + sc.nu)
        - lg(nf + sc.alpha + 0.5)
        - lg(nf + sc.nu + 0.5))
}

pub fn radial_eigenfunction(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
) -> ModelResult<RadialEigenfunction> {
    let constants = spectral_constants(config, qn)?;
    Ok(RadialEigenfunction {
        config: *config,
        qn: *qn,
        constants,
        log_norm_const: log_norm_const(qn.n, &constants),
    })
}

impl RadialEigenfunction {
    pub fn config(&self) -> &OscillatorConfig {
        &self.config
    }
    pub fn qn(&self) -> &QuantumNumbers {
        &self.qn
    }
    pub fn constants(&self) -> &SpectralConstants {
        &self.constants
    }
    pub fn log_norm_const(&self) -> f64 {
        self.log_norm_const
    }
    /// C_{n|m|}; may underflow to 0 deep in the nonrelativistic regime,
    /// where only the log-space value is meaningful.
    pub fn norm_const(&self) -> f64 {
        self.log_norm_const.exp()
    }

    /// S_n(x2; alpha, nu, 1/2), the polynomial factor (entire, shifts exact).
    pub fn omega_poly(&self, x2: Complex64) -> Complex64 {
        cdh_poly(self.qn.n, x2, self.constants.alpha, self.constants.nu, 0.5)
            .expect("Pochhammer denominators positive for nu >= alpha >= 1/2")
    }

    /// R(rho) at a complex point of the analyticity strip |Im rho| <= 2.
    ///
    /// The whole gamma content (C, generalized degree, M_nu) is assembled in
    /// log space and exponentiated once, then multiplied by the polynomial.
    pub fn eval(&self, rho: Complex64) -> ModelResult<Complex64> {
        let sc = &self.constants;
        let log_degree = log_generalized_degree(-rho, Complex64::new(sc.alpha, 0.0))?;
        let log_m = log_m_factor(rho, sc.nu, self.config.omega0())?;
        let log_all = Complex64::new(self.log_norm_const, 0.0) + log_degree + log_m;
        Ok(log_all.exp() * self.omega_poly(rho * rho))
    }

    /// Phase-free form used by the orthogonality integrals:
    /// C |(-rho)^(alpha)| |M_nu(rho)| S_n(rho^2), real, carrying the sign
    /// of the polynomial. Equals |eval| up to that sign for real rho > 0.
    pub fn modulus(&self, rho: f64) -> ModelResult<f64> {
        if !(rho > 0.0) {
            return Err(ModelError::Config {
                what: "radial modulus requires rho > 0",
                value: rho,
            });
        }
        let sc = &self.constants;
        let z = Complex64::new(0.0, rho); // i rho
        let log_deg_re = log_gamma(z + sc.alpha)?.re - log_gamma(z)?.re;
        let log_m_re = log_gamma(z + sc.nu)?.re;
        let s = self.omega_poly(Complex64::new(rho * rho, 0.0));
        debug_assert!(s.im.abs() <= 1e-10 * s.re.abs().max(1.0));
        Ok((self.log_norm_const + log_deg_re + log_m_re).exp() * s.re)
    }
}

/// psi_{nm}(r, phi) = [(-rho)^(1/2)]^{-1} R_{n|m|}(rho) e^{i m phi} / sqrt(2 pi),
/// rho = r / lambda_bar.
pub fn full_wavefunction(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
    r: f64,
    phi: f64,
) -> ModelResult<Complex64> {
    if !(r > 0.0) {
        return Err(ModelError::Config {
            what: "full_wavefunction requires r > 0",
            value: r,
        });
    }
    let rho = Complex64::new(r / config.lambda_bar(), 0.0);
    full_wavefunction_at(config, qn, rho, phi)
}

/// Same as [`full_wavefunction`] but at a complex dimensionless rho (needed
/// by the shift-operator residual checks).
pub fn full_wavefunction_at(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
    rho: Complex64,
    phi: f64,
) -> ModelResult<Complex64> {
    let radial = radial_eigenfunction(config, qn)?;
    let log_prefactor = -log_generalized_degree(-rho, Complex64::new(0.5, 0.0))?;
    let angular = Complex64::new(0.0, qn.m_ang as f64 * phi).exp() / (2.0 * PI).sqrt();
    Ok(log_prefactor.exp() * radial.eval(rho)? * angular)
}

/// E^NR = hbar omega (2n + |m| + 1).
pub fn nr_energy(config: &OscillatorConfig, qn: &QuantumNumbers) -> f64 {
    config.hbar_omega() * (2.0 * qn.n as f64 + qn.abs_m() as f64 + 1.0)
}

/// C^NR = sqrt(2 m omega n! / (hbar Gamma(n + |m| + 1))).
pub fn nr_norm_const(config: &OscillatorConfig, qn: &QuantumNumbers) -> f64 {
    let n = qn.n;
    let am = qn.abs_m() as f64;
    let mut log_fact = 0.0;
    for k in 2..=n {
        log_fact += (k as f64).ln();
    }
    let lg = log_gamma(Complex64::new(n as f64 + am + 1.0, 0.0))
        .expect("positive argument")
        .re;
    let scale = 2.0 * config.mass() * config.omega() / config.hbar();
    (0.5 * (scale.ln() + log_fact - lg)).exp()
}

/// psi^NR = C^NR xi^|m| e^{-xi^2/2} L_n^{|m|}(xi^2) e^{i m phi} / sqrt(2 pi),
/// xi = r sqrt(m omega / hbar).
pub fn nr_wavefunction(
    config: &OscillatorConfig,
    qn: &QuantumNumbers,
    r: f64,
    phi: f64,
) -> Complex64 {
    let xi = r * (config.mass() * config.omega() / config.hbar()).sqrt();
    let am = qn.abs_m();
    let radial = nr_norm_const(config, qn)
        * xi.powi(am as i32)
        * (-0.5 * xi * xi).exp()
        * laguerre(qn.n, am as f64, xi * xi).expect("|m| >= 0 keeps (mu+1)_k positive");
    radial * Complex64::new(0.0, qn.m_ang as f64 * phi).exp() / (2.0 * PI).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT_2: f64 = std::f64::consts::SQRT_2;

    fn cfg(omega0: f64, b: f64) -> OscillatorConfig {
        OscillatorConfig::dimensionless(omega0, b).unwrap()
    }

    #[test]
    fn closed_form_spot_values() {
        // omega0=1, b=0, m=0: radicands reduce to 3 -+ 2 sqrt2 = (sqrt2 -+ 1)^2
        let sc = spectral_constants(&cfg(1.0, 0.0), &QuantumNumbers::new(0, 0)).unwrap();
        assert!((sc.alpha - SQRT_2 / 2.0).abs() <= 1e-12);
        assert!((sc.nu - (1.0 + SQRT_2 / 2.0)).abs() <= 1e-12);
        let e = energy_over_hbar_omega(&cfg(1.0, 0.0), &QuantumNumbers::new(0, 0)).unwrap();
        assert!((e - (1.0 + SQRT_2)).abs() <= 1e-12);
    }

    #[test]
    fn validity_gate_rejects_complex_exponents() {
        // omega0=1, b=0, m=1: outer discriminant 1 - 3 < 0
        let err = spectral_constants(&cfg(1.0, 0.0), &QuantumNumbers::new(0, 1)).unwrap_err();
        match err {
            ModelError::ComplexExponent { radicand, .. } => {
                assert!((radicand + 2.0).abs() <= 1e-12)
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn alpha_limit_as_omega0_shrinks() {
        // alpha -> 1/2 + |m| monotonically
        for m in [0i32, 1, 2] {
            let target = 0.5 + m.abs() as f64;
            let mut prev = f64::INFINITY;
            for omega0 in [1e-1, 1e-2, 1e-3] {
                let sc = spectral_constants(&cfg(omega0, 1.0), &QuantumNumbers::new(0, m)).unwrap();
                let err = (sc.alpha - target).abs();
                assert!(err < prev, "m={m}, omega0={omega0}");
                prev = err;
            }
            assert!(prev < 1e-2);
        }
    }

    #[test]
    fn energy_shift_matches_nr_spectrum() {
        // (E - mc^2)/(hbar omega) -> 2n + |m| + 1
        let config = cfg(1e-3, 0.0);
        for n in 0..3u32 {
            let e = energy_over_hbar_omega(&config, &QuantumNumbers::new(n, 0)).unwrap()
                - 1.0 / config.omega0();
            assert!((e - (2.0 * n as f64 + 1.0)).abs() < 1e-2, "n={n}");
        }
    }

    #[test]
    fn norm_const_closed_form_at_n0() {
        // C_0 = sqrt(2/(Gamma(a+v) Gamma(a+1/2) Gamma(v+1/2))), frozen from a
        // 40-digit evaluation at omega0=1, b=0, m=0.
        let f = radial_eigenfunction(&cfg(1.0, 0.0), &QuantumNumbers::new(0, 0)).unwrap();
        assert!((f.norm_const() - 1.254_530_074_405_802_1).abs() <= 1e-12);
    }

    #[test]
    fn radial_boundary_behaviour() {
        let f = radial_eigenfunction(&cfg(0.2, 0.0), &QuantumNumbers::new(0, 0)).unwrap();
        assert!(f.modulus(1e-6).unwrap().abs() < 1e-3);
        assert!(f.modulus(60.0).unwrap().abs() < 1e-12);
        // finite at a shifted point rho + i
        let v = f.eval(Complex64::new(1.5, 1.0)).unwrap();
        assert!(v.norm().is_finite() && v.norm() > 0.0);
    }

    #[test]
    fn modulus_matches_eval_up_to_polynomial_sign() {
        let f = radial_eigenfunction(&cfg(0.2, 1.0), &QuantumNumbers::new(3, 2)).unwrap();
        for rho in [0.3, 1.1, 4.2] {
            let m = f.modulus(rho).unwrap();
            let e = f.eval(Complex64::new(rho, 0.0)).unwrap().norm();
            assert!((m.abs() - e).abs() <= 1e-12 * e.max(1e-300), "rho={rho}");
        }
    }

    #[test]
    fn full_wavefunction_angular_structure() {
        let config = cfg(0.2, 0.0);
        let qn = QuantumNumbers::new(1, 2);
        let a = full_wavefunction(&config, &qn, 1.3, 0.7).unwrap();
        let b = full_wavefunction(&config, &qn, 1.3, 0.7 + 2.0 * PI).unwrap();
        assert!((a - b).norm() <= 1e-12 * a.norm());
        // m = 0: phi-independent
        let qn0 = QuantumNumbers::new(1, 0);
        let a0 = full_wavefunction(&config, &qn0, 1.3, 0.4).unwrap();
        let b0 = full_wavefunction(&config, &qn0, 1.3, 2.9).unwrap();
        assert!((a0 - b0).norm() <= 1e-13 * a0.norm());
    }

    #[test]
    fn nr_spot_values() {
        let config = cfg(0.5, 0.0);
        let qn = QuantumNumbers::new(0, 0);
        assert!((nr_energy(&config, &qn) - config.hbar_omega()).abs() <= 1e-15);
        // C^NR_{0,0} = sqrt(2 m omega / hbar)
        let want = (2.0 * config.mass() * config.omega() / config.hbar()).sqrt();
        assert!((nr_norm_const(&config, &qn) - want).abs() <= 1e-14 * want);
    }

    #[test]
    fn physical_units_consistency() {
        let config = OscillatorConfig::physical(2.0, 3.0, 10.0, 0.5, 0.0).unwrap();
        assert!((config.lambda_bar() - 0.5 / 20.0).abs() <= 1e-16);
        assert!((config.omega0() - 0.5 * 3.0 / 200.0).abs() <= 1e-16);
        let qn = QuantumNumbers::new(1, 0);
        let e = energy(&config, &qn).unwrap();
        let e_hw = energy_over_hbar_omega(&config, &qn).unwrap();
        assert!((e - config.hbar_omega() * e_hw).abs() <= 1e-12 * e.abs());
    }

    #[test]
    fn config_rejects_bad_parameters() {
        assert!(OscillatorConfig::dimensionless(0.0, 0.0).is_err());
        assert!(OscillatorConfig::dimensionless(-1.0, 0.0).is_err());
        assert!(OscillatorConfig::dimensionless(f64::NAN, 0.0).is_err());
        assert!(OscillatorConfig::physical(1.0, 1.0, 1.0, 1.0, f64::INFINITY).is_err());
    }

    proptest! {
        /// Level spacing is exactly 2 hbar omega and the spectrum is even in m.
        #[test]
        fn spectrum_spacing_and_m_evenness(
            n in 0u32..5,
            m in -3i32..=3,
            omega0 in prop::sample::select(vec![0.05f64, 0.2]),
            b in prop::sample::select(vec![0.0f64, 1.0]),
        ) {
            let config = cfg(omega0, b);
            if let Ok(e_n) = energy_over_hbar_omega(&config, &QuantumNumbers::new(n, m)) {
                let e_n1 = energy_over_hbar_omega(&config, &QuantumNumbers::new(n + 1, m)).unwrap();
                prop_assert!((e_n1 - e_n - 2.0).abs() <= 1e-12);
                let e_neg = energy_over_hbar_omega(&config, &QuantumNumbers::new(n, -m)).unwrap();
                prop_assert!((e_neg - e_n).abs() == 0.0);
            }
        }

        /// Branch order nu >= alpha >= 1/2, and the inversion derived from the
        /// two radical equations reproduces (a, gamma):
        /// a = omega0^2 alpha (alpha-1) nu (nu-1),
        /// gamma = ((2a-1)^2 + (2v-1)^2 - 2)/4 - 1/omega0^2.
        #[test]
        fn spectral_constants_invert(
            m in -3i32..=3,
            omega0 in prop::sample::select(vec![0.05f64, 0.2, 1.0]),
            b in prop::sample::select(vec![0.0f64, 1.0]),
        ) {
            let config = cfg(omega0, b);
            let qn = QuantumNumbers::new(0, m);
            if let Ok(sc) = spectral_constants(&config, &qn) {
                prop_assert!(sc.nu >= sc.alpha && sc.alpha >= 0.5);
                let w2 = omega0 * omega0;
                let a_back = w2 * sc.alpha * (sc.alpha - 1.0) * sc.nu * (sc.nu - 1.0);
                let ta = 2.0 * sc.alpha - 1.0;
                let tv = 2.0 * sc.nu - 1.0;
                let gamma_back = (ta * ta + tv * tv - 2.0) / 4.0 - 1.0 / w2;
                let a = qn.a();
                let gamma = qn.gamma(b);
                prop_assert!((a_back - a).abs() <= 1e-10 * a.abs().max(1.0));
                prop_assert!((gamma_back - gamma).abs() <= 1e-10 * gamma.abs().max(1.0));
            }
        }
    }
}
