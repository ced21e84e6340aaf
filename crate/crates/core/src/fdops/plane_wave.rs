//! The relativistic plane wave xi(p, r) = ((p0 - p.n)/mc)^{-1/2 - i rho},
//! the common eigenfunction of the free Hamiltonian and momentum operator.

use num_complex::Complex64;

use super::{AnalyticFn2d, FdResult};

/// Momentum in units of mc; p0 = sqrt(px^2 + py^2 + 1) is on the mass shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumVector {
    pub px: f64,
    pub py: f64,
}

impl MomentumVector {
    pub fn new(px: f64, py: f64) -> Self {
        Self { px, py }
    }
    pub fn p0(&self) -> f64 {
        (self.px * self.px + self.py * self.py + 1.0).sqrt()
    }
    /// E_p = p0 mc^2 for the given config.
    pub fn energy(&self, config: &crate::model::OscillatorConfig) -> f64 {
        self.p0() * config.mc2()
    }
}

/// xi as an analytic evaluator with exact phi-derivatives. Entire in rho:
/// A = p0 - px cos(phi) - py sin(phi) > 0 on the mass shell, so A^s with
/// the principal power is analytic for every complex exponent.
#[derive(Debug, Clone, Copy)]
pub struct PlaneWave {
    pub p: MomentumVector,
}

impl PlaneWave {
    pub fn new(p: MomentumVector) -> Self {
        Self { p }
    }

    fn base(&self, phi: f64) -> (f64, f64, f64) {
        let a = self.p.p0() - self.p.px * phi.cos() - self.p.py * phi.sin();
        let da = self.p.px * phi.sin() - self.p.py * phi.cos();
        let dda = self.p.px * phi.cos() + self.p.py * phi.sin();
        (a, da, dda)
    }

    fn exponent(rho: Complex64) -> Complex64 {
        // s = -1/2 - i rho
        Complex64::new(-0.5 + rho.im, -rho.re)
    }
}

impl AnalyticFn2d for PlaneWave {
    fn strip_halfwidth(&self) -> f64 {
        f64::INFINITY
    }

    fn eval(&self, rho: Complex64, phi: f64) -> FdResult<Complex64> {
        let (a, _, _) = self.base(phi);
        Ok((Self::exponent(rho) * a.ln()).exp())
    }

    fn d_phi(&self, rho: Complex64, phi: f64) -> Option<FdResult<Complex64>> {
        let (a, da, _) = self.base(phi);
        let s = Self::exponent(rho);
        let xi = (s * a.ln()).exp();
        Some(Ok(s * (da / a) * xi))
    }

    fn d2_phi(&self, rho: Complex64, phi: f64) -> Option<FdResult<Complex64>> {
        let (a, da, dda) = self.base(phi);
        let s = Self::exponent(rho);
        let xi = (s * a.ln()).exp();
        let ratio = da / a;
        Some(Ok((s * (dda / a) + s * (s - 1.0) * ratio * ratio) * xi))
    }
}

/// Pointwise evaluation of the plane wave (dimensionless rho = r/lambda_bar).
pub fn plane_wave(p: MomentumVector, rho: Complex64, phi: f64) -> Complex64 {
    PlaneWave::new(p)
        .eval(rho, phi)
        .expect("plane wave is entire")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_momentum_is_unity() {
        let p = MomentumVector::new(0.0, 0.0);
        for (rho, phi) in [(0.3, 0.25), (1.0, 1.9), (2.5, 4.0)] {
            assert_eq!(
                plane_wave(p, Complex64::new(rho, 0.0), phi),
                Complex64::new(1.0, 0.0)
            );
        }
    }

    #[test]
    fn shift_multiplies_in_the_base() {
        // s(rho + i) = s(rho) + 1, so xi(rho + i) = A xi(rho)
        let p = MomentumVector::new(0.7, -0.7);
        let w = PlaneWave::new(p);
        let (rho, phi) = (Complex64::new(1.2, 0.0), 2.1);
        let (a, _, _) = w.base(phi);
        let lhs = w.eval(rho + Complex64::new(0.0, 1.0), phi).unwrap();
        let rhs = a * w.eval(rho, phi).unwrap();
        assert!((lhs - rhs).norm() <= 1e-14 * rhs.norm());
    }

    #[test]
    fn nonrelativistic_limit_is_the_flat_plane_wave() {
        // fixed physical p and r, growing c: xi -> e^{i p.r / hbar}
        let (px, py) = (0.6, -0.3);
        let (r, phi) = (1.2f64, 0.9f64);
        let target =
            (Complex64::new(0.0, 1.0) * (px * r * phi.cos() + py * r * phi.sin())).exp();
        let mut prev = f64::INFINITY;
        for c in [4.0, 8.0, 16.0, 32.0] {
            let p = MomentumVector::new(px / c, py / c);
            let rho = Complex64::new(r * c, 0.0);
            let err = (plane_wave(p, rho, phi) - target).norm();
            assert!(err < prev, "c={c}");
            prev = err;
        }
        assert!(prev < 1e-2);
    }
}
