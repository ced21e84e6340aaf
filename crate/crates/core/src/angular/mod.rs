//! Exact operator algebra on the circle.
//!
//! The primitives n_x = cos(phi)., n_y = sin(phi)., m_x = -i sin(phi) d_phi,
//! m_y = i cos(phi) d_phi, L = -i d_phi act on finite Fourier polynomials
//! with rational-complex coefficients: cos/sin shift harmonic indices by
//! +-1 with half coefficients, d_phi multiplies coefficient k by ik. Every
//! result is exact, so the commutator, scalar-product and adjoint identities
//! are checked as equalities, never with tolerances.

mod coeff;
mod identities;
mod op;
mod poly;

pub use coeff::ExactComplex;
pub use identities::{adjoint_identities, appendix_identities, scalar_product_identities, IdentityReport};
pub use op::{apply, commutator, operators_equal, AngularOperator, BandedForm};
pub use poly::TrigPolynomial;

/// Harmonic window |k| <= 8 for extensional operator equality. All
/// primitives are banded with polynomial coefficients, so agreement on this
/// window is agreement everywhere.
pub const EQUALITY_WINDOW: i64 = 8;
