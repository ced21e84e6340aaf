//! Operator appliers: free Hamiltonian, momentum, interaction potential,
//! full Hamiltonian, and the dimensionless radial Hamiltonian.
//!
//! Each applier returns the applied value together with the largest summand
//! magnitude of the defining expression; relative residuals divide by that
//! scale so cancellation near zeros of the test function cannot inflate
//! them.

use num_complex::Complex64;

use super::{shift_2d, AnalyticFn1d, AnalyticFn2d, FdOpsError, FdResult};
use crate::model::{OscillatorConfig, QuantumNumbers};
use crate::specfun::generalized_degree;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Result of applying a scalar operator at one point.
#[derive(Debug, Clone, Copy)]
pub struct Applied {
    pub value: Complex64,
    /// max |summand| of the applied expression, for relative residuals.
    pub term_scale: f64,
}

/// Result of applying the vector momentum operator at one point.
#[derive(Debug, Clone, Copy)]
pub struct AppliedMomentum {
    pub x: Complex64,
    pub y: Complex64,
    pub term_scale: f64,
}

/// Sixth-order central differences in phi with a halved-step cross-check.
/// Step 2e-3 keeps truncation ~1e-13 and rounding ~1e-10 for O(1) functions.
fn fd_phi(
    f: &dyn AnalyticFn2d,
    rho: Complex64,
    phi: f64,
    order: u8,
    h: f64,
) -> FdResult<Complex64> {
    let v = |k: f64| f.eval(rho, phi + k * h);
    match order {
        1 => Ok((45.0 * (v(1.0)? - v(-1.0)?) - 9.0 * (v(2.0)? - v(-2.0)?) + (v(3.0)? - v(-3.0)?))
            / (60.0 * h)),
        _ => {
            // written as deviations from the center so the constant mode
            // cancels exactly instead of leaving an eps/h^2 residue
            let center = v(0.0)?;
            let pair = |k: f64, c: f64| -> FdResult<Complex64> {
                Ok(c * ((v(k)? - center) + (v(-k)? - center)))
            };
            Ok((pair(1.0, 1.5)? + pair(2.0, -0.15)? + pair(3.0, 1.0 / 90.0)?) / (h * h))
        }
    }
}

fn fd_phi_checked(
    f: &dyn AnalyticFn2d,
    rho: Complex64,
    phi: f64,
    order: u8,
) -> FdResult<Complex64> {
    let coarse = fd_phi(f, rho, phi, order, 2e-3)?;
    let fine = fd_phi(f, rho, phi, order, 1e-3)?;
    let disagreement = (coarse - fine).norm();
    if disagreement > 1e-8 {
        return Err(FdOpsError::DerivativeAccuracy { disagreement });
    }
    Ok(coarse)
}

/// d/dphi at a (possibly shifted) point: exact when attached, else the
/// checked finite-difference fallback.
pub(crate) fn d_phi_at(f: &dyn AnalyticFn2d, rho: Complex64, phi: f64) -> FdResult<Complex64> {
    if let Some(m) = f.angular_harmonic() {
        return Ok(Complex64::new(0.0, m as f64) * f.eval(rho, phi)?);
    }
    if let Some(v) = f.d_phi(rho, phi) {
        return v;
    }
    fd_phi_checked(f, rho, phi, 1)
}

/// d^2/dphi^2 at a (possibly shifted) point.
pub(crate) fn d2_phi_at(f: &dyn AnalyticFn2d, rho: Complex64, phi: f64) -> FdResult<Complex64> {
    if let Some(m) = f.angular_harmonic() {
        let mf = m as f64;
        return Ok(-mf * mf * f.eval(rho, phi)?);
    }
    if let Some(v) = f.d2_phi(rho, phi) {
        return v;
    }
    fd_phi_checked(f, rho, phi, 2)
}

fn dimensionless_radius(config: &OscillatorConfig, r: f64) -> FdResult<Complex64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(FdOpsError::Domain {
            what: "appliers require r > 0",
            value: r,
        });
    }
    Ok(Complex64::new(r / config.lambda_bar(), 0.0))
}

/// H0 f = mc^2 [cosh(i d) + (i/(2 rho)) sinh(i d) - (1/(rho(2 rho + i))) d_phi^2 e^{i d}] f,
/// shifts acting first in the ordered d_phi^2 e^{i d} term.
pub fn free_hamiltonian_apply(
    f: &dyn AnalyticFn2d,
    r: f64,
    phi: f64,
    config: &OscillatorConfig,
) -> FdResult<Applied> {
    let rho = dimensionless_radius(config, r)?;
    let mc2 = config.mc2();
    let fp = shift_2d(f, rho, phi, 1)?;
    let fm = shift_2d(f, rho, phi, -1)?;
    let d2 = d2_phi_at(f, rho + I, phi)?;
    let t_cosh = (fp + fm) / 2.0;
    let t_sinh = I / (2.0 * rho) * (fp - fm) / 2.0;
    let t_phi = -d2 / (rho * (2.0 * rho + I));
    Ok(Applied {
        value: mc2 * (t_cosh + t_sinh + t_phi),
        term_scale: mc2 * t_cosh.norm().max(t_sinh.norm()).max(t_phi.norm()),
    })
}

/// p f = mc n (H0/mc^2 - e^{i d}) f - m_vec (hbar / (r + i lambda/2)) e^{i d} f.
pub fn momentum_apply(
    f: &dyn AnalyticFn2d,
    r: f64,
    phi: f64,
    config: &OscillatorConfig,
) -> FdResult<AppliedMomentum> {
    let rho = dimensionless_radius(config, r)?;
    let mc = config.mass() * config.c();
    let h0 = free_hamiltonian_apply(f, r, phi, config)?;
    let h0_red = h0.value / config.mc2();
    let fp = shift_2d(f, rho, phi, 1)?;
    let dp = d_phi_at(f, rho + I, phi)?;
    let radial_part = h0_red - fp;
    let angular_part = dp / (rho + I / 2.0);
    let (sin, cos) = phi.sin_cos();
    Ok(AppliedMomentum {
        x: mc * (cos * radial_part + I * sin * angular_part),
        y: mc * (sin * radial_part - I * cos * angular_part),
        term_scale: mc * h0_red.norm().max(fp.norm()).max(angular_part.norm()),
    })
}

/// V f = (m omega^2/2) ((r + i lambda)/(r + i lambda/2))
///        [r(r + i lambda) - lambda^2 b d_phi^2] e^{i lambda d_r} f.
pub fn potential_apply(
    f: &dyn AnalyticFn2d,
    r: f64,
    phi: f64,
    config: &OscillatorConfig,
) -> FdResult<Applied> {
    let rho = dimensionless_radius(config, r)?;
    let mc2 = config.mc2();
    let w0 = config.omega0();
    let fp = shift_2d(f, rho, phi, 1)?;
    let d2 = d2_phi_at(f, rho + I, phi)?;
    let prefactor = (w0 * w0 / 2.0) * ((rho + I) / (rho + I / 2.0));
    let t_r = prefactor * (rho * (rho + I)) * fp;
    let t_b = -prefactor * config.b() * d2;
    Ok(Applied {
        value: mc2 * (t_r + t_b),
        term_scale: mc2 * t_r.norm().max(t_b.norm()),
    })
}

/// (H0 + V) f.
pub fn hamiltonian_apply(
    f: &dyn AnalyticFn2d,
    r: f64,
    phi: f64,
    config: &OscillatorConfig,
) -> FdResult<Applied> {
    let h0 = free_hamiltonian_apply(f, r, phi, config)?;
    let v = potential_apply(f, r, phi, config)?;
    Ok(Applied {
        value: h0.value + v.value,
        term_scale: h0.term_scale.max(v.term_scale),
    })
}

/// Dimensionless radial Hamiltonian of the separated problem:
/// [cosh(i d) + (a / (2 rho^(2))) e^{i d} + (omega0^2/2)(rho^(2) + gamma) e^{i d}] g,
/// eigenvalue E/mc^2. The generalized degree rho^(2) comes from the gamma
/// ratio and is cross-checked against rho(rho + i).
pub fn radial_hamiltonian_apply(
    g: &dyn AnalyticFn1d,
    rho: f64,
    qn: &QuantumNumbers,
    config: &OscillatorConfig,
) -> FdResult<Applied> {
    if !(rho > 0.0) {
        return Err(FdOpsError::Domain {
            what: "radial Hamiltonian requires rho > 0",
            value: rho,
        });
    }
    let rc = Complex64::new(rho, 0.0);
    let deg2 = generalized_degree(rho, Complex64::new(2.0, 0.0))?;
    debug_assert!(
        (deg2 - rc * (rc + I)).norm() <= 1e-10 * deg2.norm(),
        "generalized degree disagrees with rho(rho+i)"
    );
    let gp = super::shift(g, rc, 1)?;
    let gm = super::shift(g, rc, -1)?;
    let a = qn.a();
    let gamma = qn.gamma(config.b());
    let w0 = config.omega0();
    let t_cosh = (gp + gm) / 2.0;
    let t_a = a / (2.0 * deg2) * gp;
    let t_pot = w0 * w0 / 2.0 * (deg2 + gamma) * gp;
    Ok(Applied {
        value: t_cosh + t_a + t_pot,
        term_scale: t_cosh.norm().max(t_a.norm()).max(t_pot.norm()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdops::{Closure1d, Closure2d, GaussianHarmonic, PlaneWave, SeparatedState};
    use crate::fdops::plane_wave::MomentumVector;
    use crate::model::{self, QuantumNumbers};

    fn dimensionless(omega0: f64, b: f64) -> OscillatorConfig {
        OscillatorConfig::dimensionless(omega0, b).unwrap()
    }

    #[test]
    fn free_hamiltonian_on_a_constant_is_mc2() {
        let config = dimensionless(0.3, 0.0);
        let one = Closure2d::new(f64::INFINITY, |_, _| Ok(Complex64::new(1.0, 0.0)));
        let h = free_hamiltonian_apply(&one, 1.7, 0.4, &config).unwrap();
        assert!((h.value - config.mc2()).norm() <= 1e-12);
    }

    #[test]
    fn momentum_annihilates_a_constant() {
        let config = dimensionless(0.3, 0.0);
        let one = Closure2d::new(f64::INFINITY, |_, _| Ok(Complex64::new(1.0, 0.0)));
        let p = momentum_apply(&one, 1.7, 0.4, &config).unwrap();
        assert!(p.x.norm() <= 1e-12 && p.y.norm() <= 1e-12);
    }

    #[test]
    fn plane_wave_is_a_common_eigenfunction() {
        let config = dimensionless(0.3, 0.0);
        for (px, py) in [(0.5, 0.0), (0.0, 1.2), (0.7, -0.7)] {
            let p = MomentumVector::new(px, py);
            let wave = PlaneWave::new(p);
            for rho in [0.3, 1.0, 2.5] {
                for phi in [0.25, 1.9, 4.0] {
                    let xi = wave.eval(Complex64::new(rho, 0.0), phi).unwrap();
                    let h = free_hamiltonian_apply(&wave, rho, phi, &config).unwrap();
                    let eh = p.energy(&config) * xi;
                    let res_h = (h.value - eh).norm() / h.term_scale.max(eh.norm());
                    assert!(res_h < 1e-12, "H0 residual {res_h} at p=({px},{py})");
                    let pv = momentum_apply(&wave, rho, phi, &config).unwrap();
                    let res_p = ((pv.x - px * xi).norm() + (pv.y - py * xi).norm())
                        / pv.term_scale.max(xi.norm());
                    assert!(res_p < 1e-12, "p residual {res_p} at p=({px},{py})");
                }
            }
        }
    }

    #[test]
    fn exact_and_finite_difference_phi_derivatives_agree() {
        let p = MomentumVector::new(0.7, -0.7);
        let wave = PlaneWave::new(p);
        // same function without attached derivatives: forces the fallback
        let bare = Closure2d::new(f64::INFINITY, move |rho, phi| {
            PlaneWave::new(p).eval(rho, phi)
        });
        for rho in [0.3, 1.0, 2.5] {
            for phi in [0.25, 1.9, 4.0] {
                let z = Complex64::new(rho, 1.0);
                let exact1 = wave.d_phi(z, phi).unwrap().unwrap();
                let fd1 = d_phi_at(&bare, z, phi).unwrap();
                assert!((exact1 - fd1).norm() <= 1e-9, "d1 at rho={rho}, phi={phi}");
                let exact2 = wave.d2_phi(z, phi).unwrap().unwrap();
                let fd2 = d2_phi_at(&bare, z, phi).unwrap();
                assert!((exact2 - fd2).norm() <= 1e-9, "d2 at rho={rho}, phi={phi}");
            }
        }
    }

    #[test]
    fn radial_hamiltonian_hand_value_on_unit_function() {
        // g = 1 at rho=1, a=-1/4, gamma=0, omega0=1:
        // 1 + (-1/4)/(2(1+i)) + (1/2)(1+i) = 1.4375 + 0.5625 i
        let config = dimensionless(1.0, 0.0);
        let qn = QuantumNumbers::new(0, 0);
        let one = Closure1d::new(f64::INFINITY, |_| Ok(Complex64::new(1.0, 0.0)));
        let h = radial_hamiltonian_apply(&one, 1.0, &qn, &config).unwrap();
        assert!((h.value - Complex64::new(1.4375, 0.5625)).norm() <= 1e-12);
    }

    #[test]
    fn radial_eigenfunction_satisfies_the_radial_equation() {
        for (omega0, b, m, n) in [(1.0, 0.0, 0, 0), (0.2, 1.0, 2, 3), (0.05, 1.0, 3, 5)] {
            let config = dimensionless(omega0, b);
            let qn = QuantumNumbers::new(n, m);
            let f = model::radial_eigenfunction(&config, &qn).unwrap();
            let e = config.omega0() * model::energy_over_hbar_omega(&config, &qn).unwrap();
            for rho in [0.1, 0.5, 1.0, 2.0, 5.0] {
                let h = radial_hamiltonian_apply(&f, rho, &qn, &config).unwrap();
                let rhs = e * f.eval(Complex64::new(rho, 0.0)).unwrap();
                let res = (h.value - rhs).norm() / h.term_scale.max(rhs.norm());
                assert!(res < 1e-10, "residual {res} at rho={rho}, cell ({omega0},{b},{m},{n})");
            }
        }
    }

    #[test]
    fn residual_is_phase_invariant_and_linear() {
        let config = dimensionless(0.2, 1.0);
        let qn = QuantumNumbers::new(2, 1);
        let f = model::radial_eigenfunction(&config, &qn).unwrap();
        let phase = Complex64::from_polar(1.0, 1.1);
        let scaled = Closure1d::new(2.0, move |z| Ok(phase * f.eval(z)?));
        let plain = model::radial_eigenfunction(&config, &qn).unwrap();
        for rho in [0.5, 2.0] {
            let a = radial_hamiltonian_apply(&scaled, rho, &qn, &config).unwrap();
            let b = radial_hamiltonian_apply(&plain, rho, &qn, &config).unwrap();
            assert!((a.value - phase * b.value).norm() <= 1e-12 * a.value.norm());
        }
    }

    #[test]
    fn full_hamiltonian_reproduces_the_spectrum() {
        // four cells, one with b=1 and m != 0 exercising the b d_phi^2 term
        for (omega0, b, m, n) in [(0.2, 0.0, 0, 0), (0.2, 1.0, 1, 3), (0.05, 1.0, 2, 1), (0.05, 0.0, 1, 2)] {
            let config = dimensionless(omega0, b);
            let qn = QuantumNumbers::new(n, m);
            let psi = SeparatedState::new(&config, &qn).unwrap();
            let e = model::energy(&config, &qn).unwrap();
            for rho in [0.4, 1.1, 2.3] {
                for phi in [0.3, 2.0, 5.1] {
                    let h = hamiltonian_apply(&psi, rho, phi, &config).unwrap();
                    let rhs = e * psi.eval(Complex64::new(rho, 0.0), phi).unwrap();
                    let res = (h.value - rhs).norm() / h.term_scale.max(rhs.norm());
                    assert!(res < 1e-10, "residual {res} at cell ({omega0},{b},{m},{n})");
                }
            }
        }
    }

    #[test]
    fn potential_b_term_vanishes_without_phi_dependence() {
        let with_b = dimensionless(0.3, 5.0);
        let without_b = dimensionless(0.3, 0.0);
        let g = GaussianHarmonic::new(0, with_b.lambda_bar());
        let a = potential_apply(&g, 1.2, 0.8, &with_b).unwrap();
        let b = potential_apply(&g, 1.2, 0.8, &without_b).unwrap();
        assert_eq!(a.value, b.value);
    }
}
