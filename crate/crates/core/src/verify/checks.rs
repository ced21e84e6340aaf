//! The named verification checks, grouped into suites. Every check pins its
//! tolerance here; grid-driven checks embed their cell parameters in the
//! check name so report ordering is deterministic.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::nr::{self, LimitRow, OMEGA0_SEQUENCE};
use super::orthonormality::{
    full_orthonormality, measure_collapse_residual, nr_normalization, radial_orthonormality,
};
use super::quadrature::{integrate, QuadratureSpec};
use super::report::Check;
use crate::angular::{adjoint_identities, appendix_identities, scalar_product_identities};
use crate::fdops::{
    free_hamiltonian_apply, hamiltonian_apply, momentum_apply, omega_equation_residual,
    omega_equation_terms, plane_wave, radial_hamiltonian_apply, Closure1d, MomentumVector,
    PlaneWave, SeparatedState,
};
use crate::fdops::{AnalyticFn1d, AnalyticFn2d};
use crate::model::{
    self, energy_over_hbar_omega, radial_eigenfunction, spectral_constants, ModelError,
    OscillatorConfig, QuantumNumbers,
};
use crate::specfun::{
    cdh_poly, generalized_degree, laguerre, log_gamma, weight_function,
};

/// Parameter grid for the sweeps. Invalid cells are reported through the
/// validity gate, never skipped silently.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub n_max: u32,
    pub m_max: u32,
    pub omega0: Vec<f64>,
    pub b: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_max: 5,
            m_max: 3,
            omega0: vec![0.05, 0.2],
            b: vec![0.0, 1.0],
        }
    }
}

impl GridSpec {
    pub fn is_empty(&self) -> bool {
        self.omega0.is_empty() || self.b.is_empty()
    }
    pub fn cells(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &w0 in &self.omega0 {
            for &b in &self.b {
                out.push((w0, b));
            }
        }
        out
    }
}

pub(super) type CheckJob = Box<dyn FnOnce() -> Check + Send>;

fn job(f: impl FnOnce() -> Check + Send + 'static) -> CheckJob {
    Box::new(f)
}

fn dimensionless(omega0: f64, b: f64) -> OscillatorConfig {
    OscillatorConfig::dimensionless(omega0, b).expect("grid parameters are positive")
}

// ---------------------------------------------------------------------
// specfun

pub(super) fn specfun_jobs() -> Vec<CheckJob> {
    vec![
        job(|| {
            // Gamma(1) = 1, Gamma(1/2) = sqrt(pi), |Gamma(1/2+i)|^2 = pi/cosh(pi)
            let z1 = log_gamma(Complex64::new(1.0, 0.0)).unwrap().norm();
            let zh = (log_gamma(Complex64::new(0.5, 0.0)).unwrap().re
                - 0.572_364_942_924_700_087)
                .abs();
            let refl = ((2.0 * log_gamma(Complex64::new(0.5, 1.0)).unwrap().re).exp()
                - PI / PI.cosh())
            .abs();
            Check::new("specfun/log-gamma-spot", z1.max(zh).max(refl), 1e-13)
        }),
        job(|| {
            // exp(lnG(z+1) - lnG(z)) = z over the working strip
            let mut worst = 0.0f64;
            for re in [-19.3, -7.6, -0.4, 0.3, 1.7, 8.2, 24.9, 49.5] {
                for im in [0.0, 0.04, 1.3, 11.7, 49.0] {
                    let z = Complex64::new(re, im);
                    let lhs = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
                    worst = worst.max((lhs - z).norm() / z.norm());
                }
            }
            Check::new("specfun/log-gamma-recurrence", worst, 1e-12)
        }),
        job(|| {
            // x^(k) = x(x+i)...(x+(k-1)i) for integer k
            let mut worst = 0.0f64;
            for k in 1..=6u32 {
                for x in [-27.0, -4.2, -0.7, 0.9, 3.0, 18.5] {
                    let got = generalized_degree(x, Complex64::new(k as f64, 0.0)).unwrap();
                    let mut product = Complex64::new(1.0, 0.0);
                    for j in 0..k {
                        product *= Complex64::new(x, j as f64);
                    }
                    worst = worst.max((got - product).norm() / product.norm());
                }
            }
            Check::new("specfun/generalized-degree-products", worst, 1e-12)
        }),
        job(|| {
            let mut worst = 0.0f64;
            for n in 0..6u32 {
                for x2 in [0.0, 3.7, 15.0] {
                    let x2 = Complex64::new(x2, 0.0);
                    let v1 = cdh_poly(n, x2, 0.9, 2.3, 0.5).unwrap();
                    let v2 = cdh_poly(n, x2, 0.9, 0.5, 2.3).unwrap();
                    worst = worst.max((v1 - v2).norm() / v1.norm().max(1.0));
                }
            }
            Check::new("specfun/cdh-bc-symmetry", worst, 1e-12)
        }),
        job(|| {
            let mut worst = 0.0f64;
            for n in 0..6u32 {
                let x2 = Complex64::new(2.2, -3.4);
                let v = cdh_poly(n, x2, 0.7, 1.7, 0.5).unwrap();
                let vc = cdh_poly(n, x2.conj(), 0.7, 1.7, 0.5).unwrap();
                worst = worst.max((vc - v.conj()).norm() / v.norm().max(1.0));
            }
            Check::new("specfun/cdh-conjugation", worst, 1e-12)
        }),
        job(|| {
            // sum form against the three-term recurrence oracle
            let (a, b, c) = (0.7, 1.7, 0.5);
            let normalized = |n: u32, x2: f64| {
                let mut norm = 1.0;
                for j in 0..n {
                    norm *= (a + b + j as f64) * (a + c + j as f64);
                }
                cdh_poly(n, Complex64::new(x2, 0.0), a, b, c).unwrap().re / norm
            };
            let mut worst = 0.0f64;
            for x2 in [0.25, 2.0, 9.0] {
                for n in 0..6u32 {
                    let nf = n as f64;
                    let an = (nf + a + b) * (nf + a + c);
                    let cn = nf * (nf + b + c - 1.0);
                    let lhs = -(a * a + x2) * normalized(n, x2);
                    let mut rhs = an * normalized(n + 1, x2) - (an + cn) * normalized(n, x2);
                    if n > 0 {
                        rhs += cn * normalized(n - 1, x2);
                    }
                    worst = worst.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
            Check::new("specfun/cdh-recurrence-oracle", worst, 1e-12)
        }),
        job(|| {
            let mut worst = 0.0f64;
            for n in 1..7u32 {
                for mu in [0.0, 0.8, 2.0] {
                    for x in [0.3, 1.0, 6.5] {
                        let nf = n as f64;
                        let lhs = (nf + 1.0) * laguerre(n + 1, mu, x).unwrap();
                        let rhs = (2.0 * nf + mu + 1.0 - x) * laguerre(n, mu, x).unwrap()
                            - (nf + mu) * laguerre(n - 1, mu, x).unwrap();
                        worst = worst.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                    }
                }
            }
            Check::new("specfun/laguerre-recurrence", worst, 1e-12)
        }),
        job(|| {
            let spot = [
                (laguerre(0, 1.3, 4.0).unwrap() - 1.0).abs(),
                (laguerre(1, 2.0, 1.0).unwrap() - 2.0).abs(),
                (laguerre(2, 0.0, 0.0).unwrap() - 1.0).abs(),
                (laguerre(2, 0.0, 1.0).unwrap() + 0.5).abs(),
            ];
            Check::new(
                "specfun/laguerre-spot",
                spot.into_iter().fold(0.0, f64::max),
                1e-14,
            )
        }),
        job(|| {
            // gamma-ratio weight against the tanh closed form; includes the
            // w(1) = tanh(pi) spot value
            let mut worst = 0.0f64;
            for rho in [0.05, 0.3, 1.0, 2.5, 6.0] {
                let w = weight_function(rho).unwrap();
                worst = worst.max((w - (PI * rho).tanh()).abs());
            }
            Check::new("specfun/weight-tanh-oracle", worst, 1e-10)
                .with("spot", "w(1) = tanh(pi)")
        }),
        job(|| {
            let mut violations = 0usize;
            let mut prev = 0.0f64;
            for k in 1..=60 {
                let w = weight_function(0.05 * k as f64).unwrap();
                if w <= prev && k <= 56 {
                    violations += 1;
                }
                if w > 1.0 + 1e-12 {
                    violations += 1;
                }
                prev = w;
            }
            Check::new("specfun/weight-monotone-bounded", violations as f64, 0.0)
        }),
    ]
}

// ---------------------------------------------------------------------
// model

pub(super) fn model_jobs(grid: &GridSpec) -> Vec<CheckJob> {
    let mut jobs: Vec<CheckJob> = vec![
        job(|| {
            let sqrt2 = std::f64::consts::SQRT_2;
            let config = dimensionless(1.0, 0.0);
            let qn = QuantumNumbers::new(0, 0);
            let sc = spectral_constants(&config, &qn).unwrap();
            let e = energy_over_hbar_omega(&config, &qn).unwrap();
            let worst = (sc.alpha - sqrt2 / 2.0)
                .abs()
                .max((sc.nu - 1.0 - sqrt2 / 2.0).abs())
                .max((e - 1.0 - sqrt2).abs());
            Check::new("model/closed-form-spot", worst, 1e-12)
        }),
        job(|| {
            let f = radial_eigenfunction(&dimensionless(1.0, 0.0), &QuantumNumbers::new(0, 0))
                .unwrap();
            Check::new(
                "model/norm-const-n0",
                (f.norm_const() - 1.254_530_074_405_802_1).abs(),
                1e-12,
            )
        }),
        job(|| {
            let f = radial_eigenfunction(&dimensionless(0.2, 0.0), &QuantumNumbers::new(0, 0))
                .unwrap();
            let near_zero = f.modulus(1e-6).unwrap().abs();
            let far = f.modulus(80.0).unwrap().abs();
            Check::new("model/radial-boundary", near_zero.max(far), 1e-3)
        }),
    ];
    // spectrum structure over the valid cells of the grid
    let cells = grid.cells();
    let (n_max, m_max) = (grid.n_max, grid.m_max);
    jobs.push(job(move || {
        let mut worst = 0.0f64;
        for &(w0, b) in &cells {
            let config = dimensionless(w0, b);
            for m in 0..=m_max as i32 {
                for n in 0..n_max {
                    if let Ok(e) = energy_over_hbar_omega(&config, &QuantumNumbers::new(n, m)) {
                        let e_next =
                            energy_over_hbar_omega(&config, &QuantumNumbers::new(n + 1, m))
                                .unwrap();
                        worst = worst.max((e_next - e - 2.0).abs());
                        let e_neg =
                            energy_over_hbar_omega(&config, &QuantumNumbers::new(n, -m)).unwrap();
                        worst = worst.max((e_neg - e).abs());
                        let sc = spectral_constants(&config, &QuantumNumbers::new(n, m)).unwrap();
                        if !(sc.nu >= sc.alpha && sc.alpha >= 0.5) {
                            worst = worst.max(1.0);
                        }
                    }
                }
            }
        }
        Check::new("model/spectrum-structure", worst, 1e-12)
    }));
    let cells = grid.cells();
    let m_max = grid.m_max;
    jobs.push(job(move || {
        // inversion derived from the radical equations reproduces (a, gamma)
        let mut worst = 0.0f64;
        for &(w0, b) in &cells {
            let config = dimensionless(w0, b);
            for m in 0..=m_max as i32 {
                let qn = QuantumNumbers::new(0, m);
                if let Ok(sc) = spectral_constants(&config, &qn) {
                    let w2 = w0 * w0;
                    let a_back = w2 * sc.alpha * (sc.alpha - 1.0) * sc.nu * (sc.nu - 1.0);
                    let ta = 2.0 * sc.alpha - 1.0;
                    let tv = 2.0 * sc.nu - 1.0;
                    let g_back = (ta * ta + tv * tv - 2.0) / 4.0 - 1.0 / w2;
                    worst = worst
                        .max((a_back - qn.a()).abs() / qn.a().abs().max(1.0))
                        .max((g_back - qn.gamma(b)).abs() / qn.gamma(b).abs().max(1.0));
                }
            }
        }
        Check::new("model/spectral-inversion", worst, 1e-10)
    }));
    // validity gate entries for invalid cells
    for &(w0, b) in &grid.cells() {
        for m in 0..=grid.m_max as i32 {
            let config = dimensionless(w0, b);
            if let Err(ModelError::ComplexExponent { radicand, which }) =
                spectral_constants(&config, &QuantumNumbers::new(0, m))
            {
                jobs.push(job(move || {
                    Check::new(
                        format!("model/validity-gate[omega0={w0},b={b},m={m}]"),
                        0.0,
                        0.0,
                    )
                    .with("radicand", radicand)
                    .with("which", which)
                }));
            }
        }
    }
    jobs
}

// ---------------------------------------------------------------------
// fdops

const PLANE_WAVE_MOMENTA: [(f64, f64); 3] = [(0.5, 0.0), (0.0, 1.2), (0.7, -0.7)];
const PLANE_WAVE_GRID: ([f64; 3], [f64; 3]) = ([0.3, 1.0, 2.5], [0.25, 1.9, 4.0]);
/// Four (omega0, b, m, n) cells for the full 2D Hamiltonian check; the
/// third exercises the b d_phi^2 term with b = 1 and m != 0.
const FULL_2D_CELLS: [(f64, f64, i32, u32); 4] = [
    (0.2, 0.0, 0, 0),
    (0.2, 1.0, 1, 3),
    (0.05, 1.0, 2, 1),
    (0.05, 0.0, 1, 2),
];

pub(super) fn fdops_jobs(grid: &GridSpec) -> Vec<CheckJob> {
    let mut jobs: Vec<CheckJob> = vec![
        job(|| {
            // two unit shifts equal one double shift on a gamma evaluator
            let f = Closure1d::new(4.0, |z| {
                Ok(log_gamma(z + Complex64::new(3.0, 0.0))?.exp())
            });
            let rho = Complex64::new(1.7, 0.0);
            let a = crate::fdops::shift(&f, rho + Complex64::new(0.0, 1.0), 1).unwrap();
            let b = crate::fdops::shift(&f, rho, 2).unwrap();
            Check::new("fdops/shift-homomorphism", (a - b).norm(), 0.0)
        }),
        job(|| {
            let q = 0.7;
            let f = Closure1d::new(f64::INFINITY, move |z| {
                Ok((Complex64::new(0.0, q) * z).exp())
            });
            let rho = Complex64::new(1.3, 0.0);
            let lhs = crate::fdops::shift(&f, rho, 1).unwrap();
            let rhs = (-q).exp() * f.eval(rho).unwrap();
            Check::new("fdops/shift-exponential", (lhs - rhs).norm(), 1e-14)
        }),
        job(|| {
            let p = MomentumVector::new(0.0, 0.0);
            let mut worst = 0.0f64;
            for rho in PLANE_WAVE_GRID.0 {
                for phi in PLANE_WAVE_GRID.1 {
                    let xi = plane_wave(p, Complex64::new(rho, 0.0), phi);
                    worst = worst.max((xi - Complex64::new(1.0, 0.0)).norm());
                }
            }
            Check::new("fdops/plane-wave-zero-momentum", worst, 0.0)
        }),
        job(|| {
            // exact vs finite-difference phi-derivatives of the plane wave
            let p = MomentumVector::new(0.7, -0.7);
            let wave = PlaneWave::new(p);
            let bare = crate::fdops::Closure2d::new(f64::INFINITY, move |rho, phi| {
                PlaneWave::new(p).eval(rho, phi)
            });
            let mut worst = 0.0f64;
            for rho in PLANE_WAVE_GRID.0 {
                for phi in PLANE_WAVE_GRID.1 {
                    let z = Complex64::new(rho, 1.0);
                    let e1 = wave.d_phi(z, phi).unwrap().unwrap();
                    let f1 = crate::fdops::d_phi_at(&bare, z, phi).unwrap();
                    let e2 = wave.d2_phi(z, phi).unwrap().unwrap();
                    let f2 = crate::fdops::d2_phi_at(&bare, z, phi).unwrap();
                    worst = worst.max((e1 - f1).norm()).max((e2 - f2).norm());
                }
            }
            Check::new("fdops/phi-derivative-fallback", worst, 1e-9)
        }),
        job(|| {
            let config = dimensionless(1.0, 0.0);
            let qn = QuantumNumbers::new(0, 0);
            let one = Closure1d::new(f64::INFINITY, |_| Ok(Complex64::new(1.0, 0.0)));
            let h = radial_hamiltonian_apply(&one, 1.0, &qn, &config).unwrap();
            Check::new(
                "fdops/radial-hand-value",
                (h.value - Complex64::new(1.4375, 0.5625)).norm(),
                1e-12,
            )
        }),
        job(|| {
            // rho^(2) = rho(rho+i) across (0, 50]
            let mut worst = 0.0f64;
            for k in 1..=100 {
                let rho = 0.5 * k as f64;
                let deg = generalized_degree(rho, Complex64::new(2.0, 0.0)).unwrap();
                let product = Complex64::new(rho, 0.0) * Complex64::new(rho, 1.0);
                worst = worst.max((deg - product).norm() / product.norm());
            }
            Check::new("fdops/degree-consistency", worst, 1e-12)
        }),
        job(|| {
            // applier linearity: applier(c f) = c applier(f)
            let config = dimensionless(0.2, 1.0);
            let qn = QuantumNumbers::new(2, 1);
            let f = radial_eigenfunction(&config, &qn).unwrap();
            let scale = Complex64::new(0.6, -1.1);
            let scaled = Closure1d::new(2.0, move |z| Ok(scale * f.eval(z)?));
            let plain = radial_eigenfunction(&config, &qn).unwrap();
            let mut worst = 0.0f64;
            for rho in [0.5, 2.0] {
                let a = radial_hamiltonian_apply(&scaled, rho, &qn, &config).unwrap();
                let b = radial_hamiltonian_apply(&plain, rho, &qn, &config).unwrap();
                worst = worst.max((a.value - scale * b.value).norm() / a.term_scale);
            }
            Check::new("fdops/applier-linearity", worst, 1e-12)
        }),
    ];

    // plane-wave eigenrelations, one check per momentum
    for (px, py) in PLANE_WAVE_MOMENTA {
        jobs.push(job(move || {
            let config = dimensionless(0.3, 0.0);
            let p = MomentumVector::new(px, py);
            let wave = PlaneWave::new(p);
            let mut worst = 0.0f64;
            for rho in PLANE_WAVE_GRID.0 {
                for phi in PLANE_WAVE_GRID.1 {
                    let xi = wave.eval(Complex64::new(rho, 0.0), phi).unwrap();
                    let h = free_hamiltonian_apply(&wave, rho, phi, &config).unwrap();
                    let eh = p.energy(&config) * xi;
                    worst = worst.max((h.value - eh).norm() / h.term_scale.max(eh.norm()));
                }
            }
            Check::new(format!("fdops/plane-wave-h0[p=({px},{py})]"), worst, 1e-8)
        }));
        jobs.push(job(move || {
            let config = dimensionless(0.3, 0.0);
            let p = MomentumVector::new(px, py);
            let wave = PlaneWave::new(p);
            let mut worst = 0.0f64;
            for rho in PLANE_WAVE_GRID.0 {
                for phi in PLANE_WAVE_GRID.1 {
                    let xi = wave.eval(Complex64::new(rho, 0.0), phi).unwrap();
                    let pv = momentum_apply(&wave, rho, phi, &config).unwrap();
                    let num = (pv.x - px * xi).norm().max((pv.y - py * xi).norm());
                    worst = worst.max(num / pv.term_scale.max(xi.norm()));
                }
            }
            Check::new(
                format!("fdops/plane-wave-momentum[p=({px},{py})]"),
                worst,
                1e-8,
            )
        }));
    }

    // radial eigen-residual sweep, one check per (omega0, b) cell
    for &(w0, b) in &grid.cells() {
        let (n_max, m_max) = (grid.n_max, grid.m_max);
        jobs.push(job(move || {
            let config = dimensionless(w0, b);
            let mut worst = 0.0f64;
            let mut cells = 0usize;
            for m in 0..=m_max as i32 {
                for n in 0..=n_max {
                    let qn = QuantumNumbers::new(n, m);
                    let f = match radial_eigenfunction(&config, &qn) {
                        Ok(f) => f,
                        Err(_) => continue, // gated cells surface in model/validity-gate
                    };
                    cells += 1;
                    let e = w0 * energy_over_hbar_omega(&config, &qn).unwrap();
                    for rho in [0.1, 0.5, 1.0, 2.0, 5.0] {
                        let h = radial_hamiltonian_apply(&f, rho, &qn, &config).unwrap();
                        let rhs = e * f.eval(Complex64::new(rho, 0.0)).unwrap();
                        worst = worst.max((h.value - rhs).norm() / h.term_scale.max(rhs.norm()));
                    }
                }
            }
            Check::new(format!("fdops/radial-eigen[omega0={w0},b={b}]"), worst, 1e-8)
                .with("valid_cells", cells)
        }));
    }

    jobs.push(job(|| {
        let mut worst = 0.0f64;
        for (w0, b, m, n) in FULL_2D_CELLS {
            let config = dimensionless(w0, b);
            let qn = QuantumNumbers::new(n, m);
            let psi = SeparatedState::new(&config, &qn).unwrap();
            let e = model::energy(&config, &qn).unwrap();
            for rho in [0.4, 1.1, 2.3] {
                for phi in [0.3, 2.0, 5.1] {
                    let h = hamiltonian_apply(&psi, rho, phi, &config).unwrap();
                    let rhs = e * psi.eval(Complex64::new(rho, 0.0), phi).unwrap();
                    worst = worst.max((h.value - rhs).norm() / h.term_scale.max(rhs.norm()));
                }
            }
        }
        Check::new("fdops/full-2d-eigen", worst, 1e-8)
    }));

    jobs.push(job(|| {
        // raw residual at the spectral energies, n <= 4, where f64 can
        // resolve 1e-10 against the summand magnitudes
        let config = dimensionless(1.0, 0.0);
        let sc = spectral_constants(&config, &QuantumNumbers::new(0, 0)).unwrap();
        let mut worst = 0.0f64;
        for n in 0..=4u32 {
            let e = 2.0 * n as f64 + sc.alpha + sc.nu;
            for rho in [0.5, 1.0] {
                worst = worst.max(omega_equation_residual(sc.alpha, sc.nu, e, n, rho).norm());
            }
        }
        Check::new("fdops/omega-equation", worst, 1e-10)
    }));
    jobs.push(job(|| {
        // perturbing E by 0.1 must light up the residual everywhere
        let config = dimensionless(1.0, 0.0);
        let sc = spectral_constants(&config, &QuantumNumbers::new(0, 0)).unwrap();
        let mut weakest = f64::INFINITY;
        for n in 0..=4u32 {
            let e = 2.0 * n as f64 + sc.alpha + sc.nu + 0.1;
            let strongest = [0.5f64, 1.0]
                .iter()
                .map(|&rho| omega_equation_residual(sc.alpha, sc.nu, e, n, rho).norm())
                .fold(0.0f64, f64::max);
            weakest = weakest.min(strongest);
        }
        Check::new(
            "fdops/omega-detector",
            (0.05 - weakest).max(0.0),
            0.0,
        )
        .with("weakest_detector_residual", weakest)
    }));
    for &(w0, b) in &grid.cells() {
        let m_max = grid.m_max;
        jobs.push(job(move || {
            // term-scaled residual across the whole grid, all n <= 5
            let config = dimensionless(w0, b);
            let mut worst = 0.0f64;
            for m in 0..=m_max as i32 {
                let qn0 = QuantumNumbers::new(0, m);
                let sc = match spectral_constants(&config, &qn0) {
                    Ok(sc) => sc,
                    Err(_) => continue,
                };
                for n in 0..=5u32 {
                    let e = 2.0 * n as f64 + sc.alpha + sc.nu;
                    for rho in [0.5, 1.0, 3.0] {
                        let r = omega_equation_residual(sc.alpha, sc.nu, e, n, rho).norm();
                        let scale = omega_equation_terms(sc.alpha, sc.nu, e, n, rho)
                            .iter()
                            .map(|t| t.norm())
                            .fold(1.0f64, f64::max);
                        worst = worst.max(r / scale);
                    }
                }
            }
            Check::new(
                format!("fdops/omega-relative-sweep[omega0={w0},b={b}]"),
                worst,
                1e-10,
            )
        }));
    }
    jobs
}

// ---------------------------------------------------------------------
// orthonormality

/// Gram cells (|m|, omega0, b) spanning nonrelativistic-adjacent and
/// strongly relativistic regimes.
const GRAM_CELLS: [(i32, f64, f64); 4] = [
    (0, 0.2, 0.0),
    (1, 0.05, 1.0),
    (2, 0.05, 0.0),
    (3, 0.05, 1.0),
];

pub(super) fn orthonormality_jobs() -> Vec<CheckJob> {
    let mut jobs: Vec<CheckJob> = vec![
        job(|| {
            let spec = QuadratureSpec::default();
            let v = integrate(|x| (-PI * x).exp(), 0.0, f64::INFINITY, &spec).unwrap();
            Check::new("orthonormality/quadrature-exp", (v - 1.0 / PI).abs(), 1e-10)
        }),
        job(|| {
            let spec = QuadratureSpec::default();
            let v = integrate(|x| x, 0.0, 1.0, &spec).unwrap();
            Check::new("orthonormality/quadrature-poly", (v - 0.5).abs(), 1e-12)
        }),
        job(|| {
            // halving tolerances moves no orthonormality integral
            let config = dimensionless(0.2, 1.0);
            let spec = QuadratureSpec::default();
            let mut worst = 0.0f64;
            for (n1, n2) in [(0, 0), (0, 2), (1, 1)] {
                let v1 = radial_orthonormality(&config, 1, n1, n2, &spec).unwrap();
                let v2 =
                    radial_orthonormality(&config, 1, n1, n2, &spec.halved_tolerances()).unwrap();
                worst = worst.max((v1 - v2).abs());
            }
            Check::new("orthonormality/quadrature-self-consistency", worst, 1e-8)
        }),
        job(|| {
            let mut worst = 0.0f64;
            for rho in [0.08, 0.5, 1.0, 2.37, 5.4, 11.0] {
                worst = worst.max(measure_collapse_residual(rho).unwrap());
            }
            Check::new("orthonormality/measure-collapse", worst, 1e-12)
        }),
        job(|| {
            let config = dimensionless(0.2, 1.0);
            let spec = QuadratureSpec::default();
            let cross = full_orthonormality(
                &config,
                &QuantumNumbers::new(0, 1),
                &QuantumNumbers::new(0, -1),
                &spec,
            )
            .unwrap()
            .norm();
            let diag = (full_orthonormality(
                &config,
                &QuantumNumbers::new(1, 2),
                &QuantumNumbers::new(1, 2),
                &spec,
            )
            .unwrap()
            .re - 1.0)
                .abs();
            let off = full_orthonormality(
                &config,
                &QuantumNumbers::new(1, 2),
                &QuantumNumbers::new(0, 2),
                &spec,
            )
            .unwrap()
            .norm();
            Check::new("orthonormality/full-wavefunction", diag.max(off), 1e-6)
                .with("cross_m_exact", cross)
        }),
        job(|| {
            let spec = QuadratureSpec::default();
            let mut worst = 0.0f64;
            for (n, m) in [(0, 0), (1, 1), (2, 3)] {
                let v =
                    nr_normalization(&dimensionless(0.3, 0.0), &QuantumNumbers::new(n, m), &spec)
                        .unwrap();
                worst = worst.max((v - 1.0).abs());
            }
            Check::new("orthonormality/nr-normalization", worst, 1e-8)
        }),
    ];
    for (m, w0, b) in GRAM_CELLS {
        jobs.push(job(move || {
            let config = dimensionless(w0, b);
            let spec = QuadratureSpec::default();
            let mut worst = 0.0f64;
            for n1 in 0..=4u32 {
                for n2 in n1..=4u32 {
                    let v = radial_orthonormality(&config, m, n1, n2, &spec).unwrap();
                    let want = if n1 == n2 { 1.0 } else { 0.0 };
                    worst = worst.max((v - want).abs());
                }
            }
            Check::new(
                format!("orthonormality/gram[m={m},omega0={w0},b={b}]"),
                worst,
                1e-6,
            )
        }));
    }
    jobs
}

// ---------------------------------------------------------------------
// nonrelativistic limits

fn limit_check(name: String, rows: &[LimitRow], tolerance: f64) -> Check {
    let final_error = rows.last().map(LimitRow::error).unwrap_or(f64::MAX);
    let violations = nr::monotonicity_violations(rows);
    let mut check = Check::new(name, final_error, tolerance)
        .with("monotone", (violations == 0).to_string())
        .with("steps", rows.len());
    if violations > 0 {
        check.pass = false;
        check.max_residual = check.max_residual.max(tolerance * 2.0);
        check = check.with("monotonicity_violations", violations);
    }
    check
}

pub(super) fn nr_jobs() -> Vec<CheckJob> {
    let seq = OMEGA0_SEQUENCE;
    let mut jobs: Vec<CheckJob> = Vec::new();
    for m in [0, 1, 2] {
        jobs.push(job(move || {
            let rows = nr::alpha_rows(m, 1.0, &seq).unwrap();
            limit_check(format!("nr/alpha-limit[m={m}]"), &rows, 1e-2)
        }));
        jobs.push(job(move || {
            let rows = nr::nu_rows(m, 1.0, &seq).unwrap();
            limit_check(format!("nr/nu-limit[m={m}]"), &rows, 1e-2)
        }));
    }
    jobs.push(job(move || {
        let rows = nr::weight_rows(1.0, &seq).unwrap();
        limit_check("nr/weight-limit".to_string(), &rows, 1e-2)
    }));
    for (n, m, xi) in [(2u32, 0i32, 1.0f64), (4, 1, 0.5), (3, 2, 2.0)] {
        jobs.push(job(move || {
            let rows = nr::cdh_laguerre_rows(n, m, 1.0, xi, &seq).unwrap();
            limit_check(
                format!("nr/cdh-laguerre-limit[n={n},m={m},xi={xi}]"),
                &rows,
                1e-2,
            )
        }));
    }
    for (n, m) in [(0u32, 0i32), (1, 1), (2, 0)] {
        jobs.push(job(move || {
            let rows = nr::energy_rows(n, m, 1.0, &seq).unwrap();
            limit_check(format!("nr/energy-limit[n={n},m={m}]"), &rows, 1e-2)
        }));
        jobs.push(job(move || {
            let rows = nr::psi_pointwise_rows(n, m, 1.0, 0.9, 0.8, &seq).unwrap();
            limit_check(
                format!("nr/psi-pointwise-phase-aligned[n={n},m={m}]"),
                &rows,
                1e-2,
            )
        }));
    }
    jobs.push(job(|| {
        // H0 approaches its nonrelativistic form at second order: the
        // residual ratio per lambda_bar halving sits in [3, 5]
        let rows =
            nr::operator_rate_rows(0, 3, nr::h0_gaussian_residual, "h0-gaussian").unwrap();
        let ratios = nr::halving_ratios(&rows);
        let distance = ratios
            .iter()
            .map(|&r| (3.0 - r).max(r - 5.0).max(0.0))
            .fold(0.0f64, f64::max);
        Check::new("nr/h0-operator-rate", distance, 0.0)
            .with("ratios", format!("{ratios:?}"))
    }));
    jobs.push(job(|| {
        // the momentum operator converges at first order (ratio ~ 2); the
        // suite asserts convergence and records the measured ratios
        let rows =
            nr::operator_rate_rows(0, 3, nr::momentum_gaussian_residual, "p-gaussian").unwrap();
        let ratios = nr::halving_ratios(&rows);
        let increases = rows
            .windows(2)
            .filter(|w| w[1].value >= w[0].value)
            .count();
        Check::new("nr/momentum-operator-convergence", increases as f64, 0.0)
            .with("ratios", format!("{ratios:?}"))
    }));
    jobs.push(job(|| {
        let rows = nr::plane_wave_limit_rows(&[4.0, 8.0, 16.0, 32.0]);
        limit_check("nr/plane-wave-limit".to_string(), &rows, 1e-2)
    }));
    jobs.push(job(|| {
        let rows = nr::potential_limit_rows(2, 1.0, &[4.0, 8.0, 16.0, 32.0]).unwrap();
        limit_check("nr/potential-limit".to_string(), &rows, 1e-2)
    }));
    jobs
}

// ---------------------------------------------------------------------
// angular algebra

pub(super) fn algebra_jobs() -> Vec<CheckJob> {
    vec![
        job(|| {
            let reports = appendix_identities();
            let mut unexpected = 0usize;
            let mut check = Check::new("algebra/commutators", 0.0, 0.0);
            for r in &reports {
                if !r.matches && !r.documented_discrepancy {
                    unexpected += 1;
                    check = check.with(&r.name, format!("computed {}", r.computed));
                }
            }
            check.max_residual = unexpected as f64;
            check.pass = unexpected == 0;
            check.with("identities", reports.len())
        }),
        job(|| {
            let reports = scalar_product_identities();
            let failures = reports.iter().filter(|r| !r.matches).count();
            Check::new("algebra/scalar-products", failures as f64, 0.0)
                .with("identities", reports.len())
        }),
        job(|| {
            let reports = adjoint_identities();
            let unexpected = reports
                .iter()
                .filter(|r| !r.matches && !r.documented_discrepancy)
                .count();
            Check::new("algebra/adjoints", unexpected as f64, 0.0)
                .with("identities", reports.len())
        }),
        job(|| {
            // documented open-question lines must indeed disagree as stated,
            // and the computed canonical forms are recorded
            let mut reports = appendix_identities();
            reports.extend(adjoint_identities());
            let mut check = Check::new("algebra/open-questions", 0.0, 0.0);
            let mut wrongly_matching = 0usize;
            for r in reports.iter().filter(|r| r.documented_discrepancy) {
                if r.matches {
                    wrongly_matching += 1;
                }
                check = check.with(&r.name, format!("computed {}", r.computed));
            }
            check.max_residual = wrongly_matching as f64;
            check.pass = wrongly_matching == 0;
            check
        }),
        job(|| {
            use crate::angular::AngularOperator as A;
            let ops = [A::Nx, A::Ny, A::Mx, A::My, A::L, A::Mx.then_after(A::Ny)];
            let failures = ops
                .iter()
                .filter(|op| {
                    let b = op.banded();
                    b.adjoint().adjoint() != b
                })
                .count();
            Check::new("algebra/adjoint-involution", failures as f64, 0.0)
        }),
    ]
}
