//! Finitely supported Fourier polynomials sum_k c_k e^{i k phi} with exact
//! coefficients, the substrate the angular operators act on.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::ExactComplex;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrigPolynomial {
    coeffs: BTreeMap<i64, ExactComplex>,
}

impl TrigPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// e^{i k phi}
    pub fn basis(k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, ExactComplex::one());
        Self { coeffs }
    }

    pub fn coefficient(&self, k: i64) -> ExactComplex {
        self.coeffs.get(&k).copied().unwrap_or_else(ExactComplex::zero)
    }

    pub fn add_term(&mut self, k: i64, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(ExactComplex::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, ExactComplex)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: ExactComplex) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out.add_term(k, s * c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(-ExactComplex::one()))
    }
}

impl fmt::Display for TrigPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})e^{{{k}i phi}}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut p = TrigPolynomial::basis(2);
        p.add_term(2, -ExactComplex::one());
        assert!(p.is_zero());
        p.add_term(0, ExactComplex::rational(1, 2));
        p.add_term(5, ExactComplex::zero());
        assert_eq!(p.terms().count(), 1);
    }

    #[test]
    fn display_is_readable() {
        let mut p = TrigPolynomial::basis(-1).scale(ExactComplex::imaginary(1, 2));
        p.add_term(1, ExactComplex::rational(3, 4));
        assert_eq!(format!("{p}"), "(1/2i)e^{-1i phi} + (3/4)e^{1i phi}");
    }
}
