//! Generalized Laguerre polynomials L_n^mu(x) via the terminating
//! confluent hypergeometric series ((mu+1)_n / n!) 1F1(-n; mu+1; x).

use super::{SpecFunError, SpecFunResult};

pub fn laguerre(n: u32, mu: f64, x: f64) -> SpecFunResult<f64> {
    let mut prefactor = 1.0f64;
    for j in 0..n {
        let d = mu + 1.0 + j as f64;
        if d == 0.0 {
            return Err(SpecFunError::Parameter {
                what: "laguerre: (mu+1)_k hits zero before the sum terminates",
                value: mu,
            });
        }
        prefactor *= d / (j + 1) as f64;
    }
    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    for k in 1..=n {
        let j = (k - 1) as f64;
        term *= (j - n as f64) * x / ((mu + 1.0 + j) * k as f64);
        sum += term;
    }
    Ok(prefactor * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn spot_values() {
        assert_eq!(laguerre(0, 2.7, 13.0).unwrap(), 1.0);
        // L_1^mu(x) = mu + 1 - x
        assert!((laguerre(1, 2.0, 1.0).unwrap() - 2.0).abs() <= 1e-15);
        // L_n^mu(0) = (mu+1)_n / n!
        assert!((laguerre(2, 0.0, 0.0).unwrap() - 1.0).abs() <= 1e-15);
        // L_2^0(1) = 1 - 2 + 1/2
        assert!((laguerre(2, 0.0, 1.0).unwrap() + 0.5).abs() <= 1e-15);
    }

    #[test]
    fn rejects_pochhammer_zero() {
        assert!(laguerre(3, -2.0, 1.0).is_err());
    }

    /// Sum of |term| of the defining series: the conditioning of the
    /// alternating finite sum, which bounds what f64 evaluation can achieve.
    fn conditioning(n: u32, mu: f64, x: f64) -> f64 {
        let mut prefactor = 1.0f64;
        for j in 0..n {
            prefactor *= (mu + 1.0 + j as f64).abs() / (j + 1) as f64;
        }
        let mut sum = 1.0f64;
        let mut term = 1.0f64;
        for k in 1..=n {
            let j = (k - 1) as f64;
            term *= (n as f64 - j) * x / ((mu + 1.0 + j) * k as f64).abs();
            sum += term;
        }
        prefactor * sum
    }

    proptest! {
        /// (n+1) L_{n+1} = (2n+mu+1-x) L_n - (n+mu) L_{n-1}, relative to the
        /// conditioning of the series.
        #[test]
        fn three_term_recurrence(n in 1u32..8, mu in -0.9f64..4.0, x in 0.0f64..20.0) {
            let lm = laguerre(n - 1, mu, x).unwrap();
            let l0 = laguerre(n, mu, x).unwrap();
            let lp = laguerre(n + 1, mu, x).unwrap();
            let nf = n as f64;
            let lhs = (nf + 1.0) * lp;
            let rhs = (2.0 * nf + mu + 1.0 - x) * l0 - (nf + mu) * lm;
            let scale = (nf + 1.0) * conditioning(n + 1, mu, x).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }
    }
}
