//! Adaptive Gauss-Kronrod quadrature (7-15 pair) on finite intervals, with
//! envelope-based truncation for the semi-infinite integrals of the
//! orthonormality checks. Nodes and weights were generated from the
//! Stieltjes polynomial at 50-digit precision.

use thiserror::Error;

use crate::fdops::FdOpsError;
use crate::model::ModelError;
use crate::specfun::SpecFunError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    /// Subdivision budget exhausted; carries the best estimate and bound.
    #[error("quadrature did not converge: estimate {estimate}, error bound {error_bound}")]
    NonConvergence { estimate: f64, error_bound: f64 },
    #[error("invalid quadrature input: {what}")]
    BadInput { what: &'static str },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    FdOps(#[from] FdOpsError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type VerifyResult<T> = Result<T, VerifyError>;

#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Cutoff for infinite upper limits. `None` asks [`integrate`] to find
    /// the point where the sampled envelope drops below 1e-16 of its peak.
    pub truncation: Option<f64>,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            truncation: None,
            max_subdivisions: 400,
        }
    }
}

impl QuadratureSpec {
    pub fn with_truncation(mut self, rho_max: f64) -> Self {
        self.truncation = Some(rho_max);
        self
    }
    pub fn halved_tolerances(mut self) -> Self {
        self.abs_tol /= 2.0;
        self.rel_tol /= 2.0;
        self
    }
}

// Kronrod-15 abscissae (descending), Kronrod weights, Gauss-7 weights.
// Gauss points sit at the odd indices; the centre node is last.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_440_0,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_9,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_1,
    0.209_482_141_084_727_828_1,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// One Gauss-Kronrod 7-15 panel; returns (estimate, error bound).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut lo = [0.0f64; 7];
    let mut hi = [0.0f64; 7];
    let mut res_kronrod = WGK[7] * f_center;
    let mut res_gauss = WG[3] * f_center;
    let mut res_abs = res_kronrod.abs();
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        lo[i] = f(center - half * x);
        hi[i] = f(center + half * x);
        res_kronrod += wk * (lo[i] + hi[i]);
        res_abs += wk * (lo[i].abs() + hi[i].abs());
        if i % 2 == 1 {
            res_gauss += WG[i / 2] * (lo[i] + hi[i]);
        }
    }
    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for (i, &wk) in WGK.iter().take(7).enumerate() {
        res_asc += wk * ((lo[i] - mean).abs() + (hi[i] - mean).abs());
    }
    let estimate = res_kronrod * half;
    let raw_err = ((res_kronrod - res_gauss) * half).abs();
    let res_asc = res_asc * half.abs();
    // QUADPACK-style rescaled error estimate
    let mut err = raw_err;
    if res_asc != 0.0 && raw_err != 0.0 {
        let scale = (200.0 * raw_err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let min_err = 50.0 * f64::EPSILON * res_abs * half.abs();
    (estimate, err.max(min_err))
}

/// Scan for the truncation point of a decaying integrand: the first sample
/// past the envelope peak that falls below 1e-16 of it.
fn auto_truncation<F: Fn(f64) -> f64>(f: &F, a: f64) -> f64 {
    let start = a.max(1e-3);
    let mut peak = 0.0f64;
    let mut t = start;
    let cap = 1e5;
    while t < cap {
        let v = f(t).abs();
        if v > peak {
            peak = v;
        } else if peak > 0.0 && v < 1e-16 * peak {
            return t;
        }
        t *= 1.15;
    }
    cap
}

/// Adaptive integration of `f` over (a, b); `b` may be `f64::INFINITY`,
/// in which case the interval is truncated per the spec.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> VerifyResult<f64> {
    if !a.is_finite() {
        return Err(VerifyError::BadInput {
            what: "lower limit must be finite",
        });
    }
    let upper = if b.is_finite() {
        b
    } else {
        spec.truncation.unwrap_or_else(|| auto_truncation(&f, a))
    };
    if upper <= a {
        return Ok(0.0);
    }

    // worst-first bisection over panels
    struct Panel {
        a: f64,
        b: f64,
        estimate: f64,
        err: f64,
    }
    let (estimate, err) = gk15(&f, a, upper);
    let mut panels = vec![Panel {
        a,
        b: upper,
        estimate,
        err,
    }];
    for _ in 0..spec.max_subdivisions {
        let total: f64 = panels.iter().map(|p| p.estimate).sum();
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok(total);
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let Panel { a: pa, b: pb, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (pa + pb);
        for (lo, hi) in [(pa, mid), (mid, pb)] {
            let (estimate, err) = gk15(&f, lo, hi);
            panels.push(Panel {
                a: lo,
                b: hi,
                estimate,
                err,
            });
        }
    }
    let estimate: f64 = panels.iter().map(|p| p.estimate).sum();
    let error_bound: f64 = panels.iter().map(|p| p.err).sum();
    if error_bound <= spec.abs_tol.max(spec.rel_tol * estimate.abs()) {
        return Ok(estimate);
    }
    Err(VerifyError::NonConvergence {
        estimate,
        error_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn linear_integrand_is_exact() {
        let v = integrate(|x| x, 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((v - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn exponential_tail_to_infinity() {
        let v = integrate(|x| (-PI * x).exp(), 0.0, f64::INFINITY, &QuadratureSpec::default())
            .unwrap();
        assert!((v - 1.0 / PI).abs() <= 1e-10, "got {v}");
    }

    #[test]
    fn oscillatory_smooth_integrand() {
        let v = integrate(|x| x.sin(), 0.0, PI, &QuadratureSpec::default()).unwrap();
        assert!((v - 2.0).abs() <= 1e-12);
    }

    #[test]
    fn self_consistency_under_halved_tolerances() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| (PI * x).tanh() * (-x).exp();
        let v1 = integrate(f, 0.0, f64::INFINITY, &spec).unwrap();
        let v2 = integrate(f, 0.0, f64::INFINITY, &spec.halved_tolerances()).unwrap();
        assert!((v1 - v2).abs() <= 1e-8);
    }

    #[test]
    fn reports_nonconvergence_with_estimate() {
        let spec = QuadratureSpec {
            max_subdivisions: 2,
            abs_tol: 1e-300,
            rel_tol: 1e-300,
            truncation: None,
        };
        match integrate(|x: f64| (10.0 / (x + 1e-3)).sin(), 0.0, 1.0, &spec) {
            Err(VerifyError::NonConvergence { error_bound, .. }) => {
                assert!(error_bound > 0.0)
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }
}
