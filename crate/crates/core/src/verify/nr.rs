//! Nonrelativistic limit studies: the closed-form limit families of the
//! spectral constants, weight, polynomials, energies and wavefunctions over
//! a shrinking omega0 sequence, and the operator limits of the free
//! Hamiltonian and momentum under Compton-wavelength halving.

use num_complex::Complex64;

use super::quadrature::VerifyResult;
use crate::fdops::{free_hamiltonian_apply, momentum_apply, GaussianHarmonic};
use crate::model::{
    nr_wavefunction, spectral_constants, OscillatorConfig, QuantumNumbers,
};
use crate::specfun::{cdh_poly, laguerre, weight_function};

/// One convergence-table row: value against its limit target.
#[derive(Debug, Clone)]
pub struct LimitRow {
    /// The shrinking parameter (omega0, or lambda_bar for operator rows).
    pub parameter: f64,
    pub quantity: String,
    pub value: f64,
    pub target: f64,
}

impl LimitRow {
    pub fn error(&self) -> f64 {
        (self.value - self.target).abs()
    }
}

pub const OMEGA0_SEQUENCE: [f64; 3] = [1e-1, 1e-2, 1e-3];

/// alpha(omega0) -> 1/2 + |m|.
pub fn alpha_rows(m: i32, b: f64, seq: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    let qn = QuantumNumbers::new(0, m);
    let target = 0.5 + qn.abs_m() as f64;
    seq.iter()
        .map(|&w0| {
            let sc = spectral_constants(&OscillatorConfig::dimensionless(w0, b)?, &qn)?;
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("alpha[m={m}]"),
                value: sc.alpha,
                target,
            })
        })
        .collect()
}

/// nu(omega0) - 1/omega0 -> 1/2.
pub fn nu_rows(m: i32, b: f64, seq: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    let qn = QuantumNumbers::new(0, m);
    seq.iter()
        .map(|&w0| {
            let sc = spectral_constants(&OscillatorConfig::dimensionless(w0, b)?, &qn)?;
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("nu-1/omega0[m={m}]"),
                value: sc.nu - 1.0 / w0,
                target: 0.5,
            })
        })
        .collect()
}

/// w(xi/sqrt(omega0)) -> 1 at fixed xi (lambda_bar tracking omega0).
pub fn weight_rows(xi: f64, seq: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    seq.iter()
        .map(|&w0| {
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("weight[xi={xi}]"),
                value: weight_function(xi / w0.sqrt())?,
                target: 1.0,
            })
        })
        .collect()
}

/// (omega0^n / n!) S_n(xi^2/omega0; alpha, nu, 1/2) -> L_n^{|m|}(xi^2).
pub fn cdh_laguerre_rows(n: u32, m: i32, b: f64, xi: f64, seq: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    let qn = QuantumNumbers::new(n, m);
    let target = laguerre(n, qn.abs_m() as f64, xi * xi)?;
    let mut factorial = 1.0;
    for k in 2..=n {
        factorial *= k as f64;
    }
    seq.iter()
        .map(|&w0| {
            let sc = spectral_constants(&OscillatorConfig::dimensionless(w0, b)?, &qn)?;
            let s = cdh_poly(
                n,
                Complex64::new(xi * xi / w0, 0.0),
                sc.alpha,
                sc.nu,
                0.5,
            )?;
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("cdh-laguerre[n={n},m={m},xi={xi}]"),
                value: w0.powi(n as i32) / factorial * s.re,
                target,
            })
        })
        .collect()
}

/// (E - mc^2)/(hbar omega) -> 2n + |m| + 1.
pub fn energy_rows(n: u32, m: i32, b: f64, seq: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    let qn = QuantumNumbers::new(n, m);
    let target = 2.0 * n as f64 + qn.abs_m() as f64 + 1.0;
    seq.iter()
        .map(|&w0| {
            let config = OscillatorConfig::dimensionless(w0, b)?;
            let sc = spectral_constants(&config, &qn)?;
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("energy-shift[n={n},m={m}]"),
                value: 2.0 * n as f64 + sc.alpha + sc.nu - 1.0 / w0,
                target,
            })
        })
        .collect()
}

/// Pointwise |psi - (-1)^{|m|} psi^NR| -> 0 at fixed (xi, phi).
///
/// Under the fixed branch i^delta = e^{+i pi delta/2} the relativistic
/// wavefunction converges to (-1)^{|m|} times the (real, positive-normalized)
/// nonrelativistic one; the sign is a pure phase-convention artifact, common
/// to every n at fixed |m|, so the comparison aligns it explicitly.
pub fn psi_pointwise_rows(
    n: u32,
    m: i32,
    b: f64,
    xi: f64,
    phi: f64,
    seq: &[f64],
) -> VerifyResult<Vec<LimitRow>> {
    let qn = QuantumNumbers::new(n, m);
    let sign = if qn.abs_m() % 2 == 0 { 1.0 } else { -1.0 };
    seq.iter()
        .map(|&w0| {
            let config = OscillatorConfig::dimensionless(w0, b)?;
            let r = xi / w0.sqrt(); // lambda_bar = 1 in natural units
            let psi = crate::model::full_wavefunction(&config, &qn, r, phi)?;
            let nr = nr_wavefunction(&config, &qn, r, phi);
            Ok(LimitRow {
                parameter: w0,
                quantity: format!("psi-pointwise[n={n},m={m},xi={xi}]"),
                value: (psi - sign * nr).norm(),
                target: 0.0,
            })
        })
        .collect()
}

/// Sample points for the operator limit studies.
const OPERATOR_POINTS: [(f64, f64); 4] = [(0.7, 0.4), (1.3, 0.4), (0.7, 2.1), (1.3, 2.1)];

/// (H0 - mc^2) f against -(hbar^2/2m)(f'' + f'/r + f_phiphi/r^2) on the
/// Gaussian e^{-r^2} e^{i m phi}, at physical hbar = mass = 1, c = 1/lambda.
pub fn h0_gaussian_residual(m: i32, lambda_bar: f64) -> VerifyResult<f64> {
    let c = 1.0 / lambda_bar;
    let config = OscillatorConfig::physical(1.0, 1.0, c, 1.0, 0.0)?;
    let f = GaussianHarmonic::new(m, config.lambda_bar());
    let mf = m as f64;
    let mut worst = 0.0f64;
    for (r, phi) in OPERATOR_POINTS {
        let gauss = (-r * r).exp();
        let angular = Complex64::new(0.0, mf * phi).exp();
        let applied = free_hamiltonian_apply(&f, r, phi, &config)?;
        let value = applied.value - config.mc2() * f.eval_real(r, phi);
        let nr = -0.5 * (4.0 * r * r - 4.0 - mf * mf / (r * r)) * gauss;
        worst = worst.max((value - nr * angular).norm());
    }
    Ok(worst)
}

/// p f against -hbar(i n d_r + m_vec/r) f on the same Gaussian.
pub fn momentum_gaussian_residual(m: i32, lambda_bar: f64) -> VerifyResult<f64> {
    let c = 1.0 / lambda_bar;
    let config = OscillatorConfig::physical(1.0, 1.0, c, 1.0, 0.0)?;
    let f = GaussianHarmonic::new(m, config.lambda_bar());
    let mf = m as f64;
    let mut worst = 0.0f64;
    for (r, phi) in OPERATOR_POINTS {
        let fv = f.eval_real(r, phi);
        let applied = momentum_apply(&f, r, phi, &config)?;
        let i = Complex64::new(0.0, 1.0);
        let nr_x = (2.0 * i * r * phi.cos() - mf * phi.sin() / r) * fv;
        let nr_y = (2.0 * i * r * phi.sin() + mf * phi.cos() / r) * fv;
        let dx = (applied.x - nr_x).norm_sqr();
        let dy = (applied.y - nr_y).norm_sqr();
        worst = worst.max((dx + dy).sqrt());
    }
    Ok(worst)
}

/// Residual sequences under lambda_bar halvings, starting from 1/16.
pub fn operator_rate_rows(
    m: i32,
    halvings: usize,
    residual: impl Fn(i32, f64) -> VerifyResult<f64>,
    quantity: &str,
) -> VerifyResult<Vec<LimitRow>> {
    let mut rows = Vec::new();
    for k in 0..=halvings {
        let lambda_bar = 1.0 / 16.0 / (1 << k) as f64;
        rows.push(LimitRow {
            parameter: lambda_bar,
            quantity: format!("{quantity}[m={m}]"),
            value: residual(m, lambda_bar)?,
            target: 0.0,
        });
    }
    Ok(rows)
}

/// Successive-residual ratios of a row sequence (previous / current).
pub fn halving_ratios(rows: &[LimitRow]) -> Vec<f64> {
    rows.windows(2).map(|w| w[0].value / w[1].value).collect()
}

/// xi(p, r) -> e^{i p.r / hbar} pointwise as c grows (p, r physical).
pub fn plane_wave_limit_rows(seq_c: &[f64]) -> Vec<LimitRow> {
    let (px, py) = (0.6, -0.3);
    let (r, phi): (f64, f64) = (1.2, 0.9);
    let target = (Complex64::new(0.0, 1.0) * (px * r * phi.cos() + py * r * phi.sin())).exp();
    seq_c
        .iter()
        .map(|&c| {
            let p = crate::fdops::MomentumVector::new(px / c, py / c);
            let xi = crate::fdops::plane_wave(p, Complex64::new(r * c, 0.0), phi);
            LimitRow {
                parameter: 1.0 / c,
                quantity: "plane-wave".to_string(),
                value: (xi - target).norm(),
                target: 0.0,
            }
        })
        .collect()
}

/// V f -> (1/2) m omega^2 r^2 f on the Gaussian as lambda_bar -> 0.
pub fn potential_limit_rows(m: i32, b: f64, seq_c: &[f64]) -> VerifyResult<Vec<LimitRow>> {
    let (r, phi): (f64, f64) = (1.1, 0.7);
    let mut rows = Vec::new();
    for &c in seq_c {
        let config = OscillatorConfig::physical(1.0, 1.0, c, 1.0, b)?;
        let f = GaussianHarmonic::new(m, config.lambda_bar());
        let applied = crate::fdops::potential_apply(&f, r, phi, &config)?;
        let target = 0.5 * r * r * f.eval_real(r, phi);
        rows.push(LimitRow {
            parameter: 1.0 / c,
            quantity: format!("potential[m={m}]"),
            value: (applied.value - target).norm(),
            target: 0.0,
        });
    }
    Ok(rows)
}

/// Count of non-decreasing steps in the error sequence (0 when the
/// convergence is monotone).
pub fn monotonicity_violations(rows: &[LimitRow]) -> usize {
    rows.windows(2)
        .filter(|w| w[1].error() >= w[0].error())
        .count()
}
