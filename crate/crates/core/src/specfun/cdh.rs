//! Continuous dual Hahn polynomials S_n(x^2; a, b, c).
//!
//! Evaluated through the terminating hypergeometric sum with the Pochhammer
//! pair (a + ix)_k (a - ix)_k written as the product of (a+j)^2 + x^2, which
//! makes S_n a manifest polynomial in x^2 and keeps complex x^2 (shifted
//! arguments (rho +- i)^2) exact and branch-free.

use num_complex::Complex64;

use super::{SpecFunError, SpecFunResult};

/// S_n(x^2; a, b, c) = (a+b)_n (a+c)_n *
///   sum_{k=0}^{n} [(-n)_k / ((a+b)_k (a+c)_k k!)] prod_{j<k} ((a+j)^2 + x^2)
pub fn cdh_poly(n: u32, x2: Complex64, a: f64, b: f64, c: f64) -> SpecFunResult<Complex64> {
    let mut prefactor = 1.0f64;
    for j in 0..n {
        let jf = j as f64;
        let pab = a + b + jf;
        let pac = a + c + jf;
        if pab == 0.0 {
            return Err(SpecFunError::Parameter {
                what: "cdh_poly: (a+b)_n hits zero",
                value: a + b,
            });
        }
        if pac == 0.0 {
            return Err(SpecFunError::Parameter {
                what: "cdh_poly: (a+c)_n hits zero",
                value: a + c,
            });
        }
        prefactor *= pab * pac;
    }
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        let j = (k - 1) as f64;
        let aj = a + j;
        term *= (j - n as f64) * (Complex64::new(aj * aj, 0.0) + x2)
            / ((a + b + j) * (a + c + j) * k as f64);
        sum += term;
    }
    Ok(prefactor * sum)
}
