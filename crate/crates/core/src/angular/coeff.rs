//! Exact complex numbers with rational real and imaginary parts.

use num_rational::Rational64;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: Rational64,
    pub im: Rational64,
}

impl ExactComplex {
    pub fn new(re: Rational64, im: Rational64) -> Self {
        Self { re, im }
    }
    pub fn from_int(n: i64) -> Self {
        Self::new(Rational64::from_integer(n), Rational64::zero())
    }
    pub fn rational(num: i64, den: i64) -> Self {
        Self::new(Rational64::new(num, den), Rational64::zero())
    }
    pub fn imaginary(num: i64, den: i64) -> Self {
        Self::new(Rational64::zero(), Rational64::new(num, den))
    }
    pub fn zero() -> Self {
        Self::from_int(0)
    }
    pub fn one() -> Self {
        Self::from_int(1)
    }
    pub fn i() -> Self {
        Self::imaginary(1, 1)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }
}

impl Add for ExactComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for ExactComplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for ExactComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ExactComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for ExactComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

fn fmt_rational(r: Rational64) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(self.im)),
            (false, false) => {
                let im = self.im;
                if im < Rational64::zero() {
                    write!(f, "{}-{}i", fmt_rational(self.re), fmt_rational(-im))
                } else {
                    write!(f, "{}+{}i", fmt_rational(self.re), fmt_rational(im))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = ExactComplex::rational(1, 2) + ExactComplex::imaginary(1, 3);
        let b = a * a;
        // (1/2 + i/3)^2 = 1/4 - 1/9 + 2*(1/2)(1/3) i = 5/36 + i/3
        assert_eq!(b.re, Rational64::new(5, 36));
        assert_eq!(b.im, Rational64::new(1, 3));
        assert_eq!(b.conj().im, Rational64::new(-1, 3));
        assert_eq!(format!("{b}"), "5/36+1/3i");
    }
}
