//! Exactly solvable finite-difference model of the two-dimensional
//! relativistic harmonic oscillator in relativistic configurational space.
//!
//! The crate is organised around five layers:
//!
//! * [`specfun`] — complex special-function kernel: principal-branch
//!   log-gamma, the generalized degree, continuous dual Hahn and generalized
//!   Laguerre polynomials, and the configurational weight function.
//! * [`model`] — the oscillator proper: configuration, spectral constants
//!   `(alpha, nu)`, energy spectrum, radial and full wavefunctions, and the
//!   nonrelativistic counterparts they reduce to.
//! * [`fdops`] — finite-difference operators realised as analytic
//!   continuation (`f(rho) -> f(rho + i)`): free Hamiltonian, momentum,
//!   interaction potential, the radial Hamiltonian, and the first-order
//!   difference equation satisfied by the polynomial factor.
//! * [`angular`] — exact operator algebra on the circle with
//!   rational-complex coefficients, for the commutator/adjoint identities.
//! * [`verify`] — adaptive Gauss–Kronrod quadrature, orthonormality and
//!   residual sweeps, nonrelativistic limit studies, and the aggregated
//!   machine-readable report.
//!
//! Everything is pure and thread-safe; with the default `parallel` feature
//! the verification sweeps fan out over grid cells via rayon, with a
//! sequential fallback compiled in either way (see `verify::run_all_seq`).

pub mod angular;
pub mod fdops;
pub mod model;
pub mod specfun;
pub mod verify;

pub use num_complex::Complex64;
