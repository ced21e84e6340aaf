//! Operator expressions, their exact banded canonical form, and the adjoint.
//!
//! Every primitive couples harmonic k to at most k +- 1 with coefficients
//! polynomial in k, so any expression reduces to a finite banded form
//! { d -> P_d(k) }, meaning  Op e^{ikphi} = sum_d P_d(k) e^{i(k+d)phi}.
//! The adjoint with respect to <e^{ij phi}, e^{ik phi}> = 2 pi delta_jk is
//! again banded: band d of Op^+ is conj(P_{-d})(k + d). No truncation is
//! involved, so window growth is structural rather than an error path.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::ExactComplex;
use super::poly::TrigPolynomial;
use super::EQUALITY_WINDOW;

/// Expression tree over the angular primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AngularOperator {
    Id,
    /// cos(phi) .
    Nx,
    /// sin(phi) .
    Ny,
    /// -i sin(phi) d_phi
    Mx,
    /// i cos(phi) d_phi
    My,
    /// -i d_phi
    L,
    Scaled(ExactComplex, Box<AngularOperator>),
    Sum(Box<AngularOperator>, Box<AngularOperator>),
    /// Compose(a, b): apply b first, then a.
    Compose(Box<AngularOperator>, Box<AngularOperator>),
}

impl AngularOperator {
    pub fn scaled(self, s: ExactComplex) -> Self {
        Self::Scaled(s, Box::new(self))
    }
    pub fn plus(self, rhs: Self) -> Self {
        Self::Sum(Box::new(self), Box::new(rhs))
    }
    pub fn then_after(self, inner: Self) -> Self {
        Self::Compose(Box::new(self), Box::new(inner))
    }
    pub fn times_i(self) -> Self {
        self.scaled(ExactComplex::i())
    }
    pub fn negated(self) -> Self {
        self.scaled(-ExactComplex::one())
    }

    pub fn banded(&self) -> BandedForm {
        match self {
            Self::Id => BandedForm::primitive(&[(0, vec![ExactComplex::one()])]),
            // cos: half-sum shift of harmonic indices
            Self::Nx => BandedForm::primitive(&[
                (1, vec![ExactComplex::rational(1, 2)]),
                (-1, vec![ExactComplex::rational(1, 2)]),
            ]),
            // sin: e^{ik} -> (e^{i(k+1)} - e^{i(k-1)})/(2i)
            Self::Ny => BandedForm::primitive(&[
                (1, vec![ExactComplex::imaginary(-1, 2)]),
                (-1, vec![ExactComplex::imaginary(1, 2)]),
            ]),
            // -i sin d_phi: coefficient k times the sin shifts
            Self::Mx => BandedForm::primitive(&[
                (1, vec![ExactComplex::zero(), ExactComplex::imaginary(-1, 2)]),
                (-1, vec![ExactComplex::zero(), ExactComplex::imaginary(1, 2)]),
            ]),
            // i cos d_phi: -k times the cos shifts
            Self::My => BandedForm::primitive(&[
                (1, vec![ExactComplex::zero(), ExactComplex::rational(-1, 2)]),
                (-1, vec![ExactComplex::zero(), ExactComplex::rational(-1, 2)]),
            ]),
            // -i d_phi: multiply by k
            Self::L => BandedForm::primitive(&[(0, vec![ExactComplex::zero(), ExactComplex::one()])]),
            Self::Scaled(s, inner) => inner.banded().scale(*s),
            Self::Sum(a, b) => a.banded().add(&b.banded()),
            Self::Compose(a, b) => a.banded().compose(&b.banded()),
        }
    }
}

/// Polynomial in the harmonic index k, exact coefficients, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KPoly(Vec<ExactComplex>);

impl KPoly {
    fn prune(mut self) -> Self {
        while self.0.last().map_or(false, ExactComplex::is_zero) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = vec![ExactComplex::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += *c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += *c;
        }
        Self(out).prune()
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        let mut out = vec![ExactComplex::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += *a * *b;
            }
        }
        Self(out).prune()
    }
    fn scale(&self, s: ExactComplex) -> Self {
        Self(self.0.iter().map(|c| *c * s).collect()).prune()
    }
    /// Substitute k -> k + d.
    fn shift_var(&self, d: i64) -> Self {
        // Horner in (k + d): p(k+d) built power by power
        let mut out = Self::default();
        for c in self.0.iter().rev() {
            // out = out * (k + d) + c
            let k_plus_d = Self(vec![ExactComplex::from_int(d), ExactComplex::one()]);
            out = out.mul(&k_plus_d).add(&Self(vec![*c]));
        }
        out.prune()
    }
    fn conj(&self) -> Self {
        Self(self.0.iter().map(ExactComplex::conj).collect())
    }
    fn eval(&self, k: i64) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for c in self.0.iter().rev() {
            acc = acc * ExactComplex::from_int(k) + *c;
        }
        acc
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pow, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match pow {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})k")?,
                _ => write!(f, "({c})k^{pow}")?,
            }
        }
        Ok(())
    }
}

/// Exact canonical form: Op e^{ik phi} = sum_d P_d(k) e^{i(k+d) phi}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BandedForm {
    bands: BTreeMap<i64, KPoly>,
}

impl BandedForm {
    fn primitive(bands: &[(i64, Vec<ExactComplex>)]) -> Self {
        let mut out = Self::default();
        for (d, coeffs) in bands {
            out.insert(*d, KPoly(coeffs.clone()).prune());
        }
        out
    }

    fn insert(&mut self, d: i64, p: KPoly) {
        if !p.is_zero() {
            self.bands.insert(d, p);
        }
    }

    fn add_band(&mut self, d: i64, p: &KPoly) {
        let merged = self.bands.remove(&d).unwrap_or_default().add(p);
        self.insert(d, merged);
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, p) in &rhs.bands {
            out.add_band(*d, p);
        }
        out
    }

    pub fn scale(&self, s: ExactComplex) -> Self {
        let mut out = Self::default();
        for (d, p) in &self.bands {
            out.insert(*d, p.scale(s));
        }
        out
    }

    /// self applied after rhs.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (d, q) in &rhs.bands {
            for (e, p) in &self.bands {
                out.add_band(d + e, &p.shift_var(*d).mul(q));
            }
        }
        out
    }

    /// Conjugate transpose with respect to the 2 pi delta_jk inner product.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::default();
        for (d, p) in &self.bands {
            out.add_band(-d, &p.conj().shift_var(-d));
        }
        out
    }

    pub fn apply(&self, f: &TrigPolynomial) -> TrigPolynomial {
        let mut out = TrigPolynomial::zero();
        for (k, c) in f.terms() {
            for (d, p) in &self.bands {
                out.add_term(k + d, p.eval(k) * c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.bands.is_empty()
    }

    /// Rebuild an expression tree: sum_d (e^{i d phi}.) P_d(L), with the
    /// shift written through n_x +- i n_y.
    pub fn to_operator(&self) -> AngularOperator {
        use AngularOperator as A;
        let mut total: Option<A> = None;
        for (d, p) in &self.bands {
            // polynomial in L
            let mut poly: Option<A> = None;
            for (pow, c) in p.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut term = A::Id;
                for _ in 0..pow {
                    term = A::L.then_after(term);
                }
                let term = term.scaled(*c);
                poly = Some(match poly {
                    None => term,
                    Some(acc) => acc.plus(term),
                });
            }
            let poly = poly.unwrap_or_else(|| A::Id.scaled(ExactComplex::zero()));
            // shift by d harmonics
            let step = if *d >= 0 {
                A::Nx.plus(A::Ny.times_i())
            } else {
                A::Nx.plus(A::Ny.times_i().negated())
            };
            let mut shifted = poly;
            for _ in 0..d.unsigned_abs() {
                shifted = step.clone().then_after(shifted);
            }
            total = Some(match total {
                None => shifted,
                Some(acc) => acc.plus(shifted),
            });
        }
        total.unwrap_or_else(|| A::Id.scaled(ExactComplex::zero()))
    }
}

impl fmt::Display for BandedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, p) in &self.bands {
            if !first {
                write!(f, "  ")?;
            }
            first = false;
            write!(f, "[k -> k{d:+}: {p}]")?;
        }
        Ok(())
    }
}

/// Exact application of an operator expression to a Fourier polynomial.
pub fn apply(op: &AngularOperator, f: &TrigPolynomial) -> TrigPolynomial {
    op.banded().apply(f)
}

/// ab - ba as an expression tree.
pub fn commutator(a: &AngularOperator, b: &AngularOperator) -> AngularOperator {
    a.clone()
        .then_after(b.clone())
        .plus(b.clone().then_after(a.clone()).negated())
}

/// Extensional equality on the harmonic window |k| <= EQUALITY_WINDOW.
/// Band coefficients are polynomials of low degree, so agreement on the
/// window is agreement everywhere.
pub fn operators_equal(a: &AngularOperator, b: &AngularOperator) -> bool {
    let (ba, bb) = (a.banded(), b.banded());
    (-EQUALITY_WINDOW..=EQUALITY_WINDOW).all(|k| {
        let basis = TrigPolynomial::basis(k);
        ba.apply(&basis) == bb.apply(&basis)
    })
}

#[cfg(test)]
mod tests {
    use super::AngularOperator as A;
    use super::*;

    #[test]
    fn primitive_actions_on_harmonics() {
        // L e^{ik phi} = k e^{ik phi}
        let out = apply(&A::L, &TrigPolynomial::basis(3));
        assert_eq!(out.coefficient(3), ExactComplex::from_int(3));
        // n_x e^{i0} = (e^{i phi} + e^{-i phi})/2
        let out = apply(&A::Nx, &TrigPolynomial::basis(0));
        assert_eq!(out.coefficient(1), ExactComplex::rational(1, 2));
        assert_eq!(out.coefficient(-1), ExactComplex::rational(1, 2));
        // m_x e^{i phi} = sin(phi) e^{i phi} = (e^{2i phi} - 1)/(2i)
        let out = apply(&A::Mx, &TrigPolynomial::basis(1));
        assert_eq!(out.coefficient(2), ExactComplex::imaginary(-1, 2));
        assert_eq!(out.coefficient(0), ExactComplex::imaginary(1, 2));
    }

    #[test]
    fn composition_matches_sequential_application() {
        let expr = A::Mx.then_after(A::Ny).plus(A::L.scaled(ExactComplex::rational(2, 3)));
        for k in -4..=4 {
            let f = TrigPolynomial::basis(k);
            let direct = expr.banded().apply(&f);
            let seq = apply(&A::Mx, &apply(&A::Ny, &f))
                .add(&apply(&A::L, &f).scale(ExactComplex::rational(2, 3)));
            assert_eq!(direct, seq, "k={k}");
        }
    }

    #[test]
    fn adjoint_is_an_involution_and_respects_matrix_elements() {
        for op in [A::Nx, A::Ny, A::Mx, A::My, A::L, A::Mx.then_after(A::Ny)] {
            let b = op.banded();
            assert_eq!(b.adjoint().adjoint(), b, "{op:?}");
            // <e_j, Op e_k> = conj(<Op^+ e_j, e_k>) on a window
            let adj = b.adjoint();
            for j in -3..=3i64 {
                for k in -3..=3i64 {
                    let lhs = b.apply(&TrigPolynomial::basis(k)).coefficient(j);
                    let rhs = adj.apply(&TrigPolynomial::basis(j)).coefficient(k).conj();
                    assert_eq!(lhs, rhs, "{op:?} at ({j},{k})");
                }
            }
        }
    }

    #[test]
    fn banded_round_trip_through_expression() {
        let op = A::My.then_after(A::Nx).plus(A::L.times_i());
        let rebuilt = op.banded().to_operator();
        assert!(operators_equal(&op, &rebuilt));
    }
}
