//! The commutator, scalar-product and Hermitian-conjugation identities of
//! the angular operators, each checked verbatim as stated. Nothing is
//! corrected: when a stated identity fails, the report carries the engine's
//! computed canonical form alongside, and known-discrepant lines are marked
//! as documented so the suites can distinguish them from regressions.

use super::coeff::ExactComplex;
use super::op::{commutator, operators_equal, AngularOperator, BandedForm};
use super::poly::TrigPolynomial;
use super::EQUALITY_WINDOW;

#[derive(Debug, Clone)]
pub struct IdentityReport {
    /// The identity as stated, e.g. "[m_x, m_y] = -i L".
    pub name: String,
    /// Whether the stated right side matches the exact computation.
    pub matches: bool,
    /// Canonical banded form computed for the left side.
    pub computed: String,
    /// True for the lines whose stated form is known to disagree with the
    /// exact computation; the report still carries both sides.
    pub documented_discrepancy: bool,
}

fn check(
    name: &str,
    lhs: &AngularOperator,
    rhs: &AngularOperator,
    documented_discrepancy: bool,
) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        matches: operators_equal(lhs, rhs),
        computed: lhs.banded().to_string(),
        documented_discrepancy,
    }
}

/// All commutator lines, in the stated order.
pub fn appendix_identities() -> Vec<IdentityReport> {
    use AngularOperator as A;
    let i = ExactComplex::i;
    let l2 = || A::L.then_after(A::L);
    let mut reports = vec![
        check("[n_x, L] = -i n_y", &commutator(&A::Nx, &A::L), &A::Ny.scaled(-i()), false),
        check("[n_y, L] = i n_x", &commutator(&A::Ny, &A::L), &A::Nx.times_i(), false),
        check("[m_x, L] = -i m_y", &commutator(&A::Mx, &A::L), &A::My.scaled(-i()), false),
        check("[m_y, L] = i m_x", &commutator(&A::My, &A::L), &A::Mx.times_i(), false),
        check(
            "[n_x, L^2] = -(n_x + 2i m_x)",
            &commutator(&A::Nx, &l2()),
            &A::Nx.plus(A::Mx.scaled(ExactComplex::imaginary(2, 1))).negated(),
            false,
        ),
        check(
            "[n_y, L^2] = -(n_y + 2i m_y)",
            &commutator(&A::Ny, &l2()),
            &A::Ny.plus(A::My.scaled(ExactComplex::imaginary(2, 1))).negated(),
            false,
        ),
    ];
    // the stated [m_i, L^2] lines disagree with the exact computation in the
    // sign of the second term; both sides are reported
    for (name, op, partner) in [
        ("[m_x, L^2] = -(m_x + 2i n_x L^2)", A::Mx, A::Nx),
        ("[m_y, L^2] = -(m_y + 2i n_y L^2)", A::My, A::Ny),
    ] {
        let stated = op
            .clone()
            .plus(partner.then_after(l2()).scaled(ExactComplex::imaginary(2, 1)))
            .negated();
        reports.push(check(name, &commutator(&op, &l2()), &stated, true));
    }
    reports.extend([
        check(
            "[n_y, m_x] = i n_x n_y",
            &commutator(&A::Ny, &A::Mx),
            &A::Nx.then_after(A::Ny).times_i(),
            false,
        ),
        check(
            "[n_x, m_y] = i n_x n_y",
            &commutator(&A::Nx, &A::My),
            &A::Nx.then_after(A::Ny).times_i(),
            false,
        ),
        check(
            "[m_x, m_y] = -i L",
            &commutator(&A::Mx, &A::My),
            &A::L.scaled(-ExactComplex::i()),
            false,
        ),
        check(
            "[m_x, n_x] = i n_y^2",
            &commutator(&A::Mx, &A::Nx),
            &A::Ny.then_after(A::Ny).times_i(),
            false,
        ),
        // stated right side repeats i n_y^2; the exact computation gives i n_x^2
        check(
            "[m_y, n_y] = i n_y^2",
            &commutator(&A::My, &A::Ny),
            &A::Ny.then_after(A::Ny).times_i(),
            true,
        ),
    ]);
    reports
}

/// n.m = 0, m.n = i, m^2 = L^2.
pub fn scalar_product_identities() -> Vec<IdentityReport> {
    use AngularOperator as A;
    let n_dot_m = A::Nx.then_after(A::Mx).plus(A::Ny.then_after(A::My));
    let m_dot_n = A::Mx.then_after(A::Nx).plus(A::My.then_after(A::Ny));
    let m_sq = A::Mx.then_after(A::Mx).plus(A::My.then_after(A::My));
    vec![
        check(
            "n.m = 0",
            &n_dot_m,
            &A::Id.scaled(ExactComplex::zero()),
            false,
        ),
        check("m.n = i", &m_dot_n, &A::Id.times_i(), false),
        check("m^2 = L^2", &m_sq, &A::L.then_after(A::L), false),
    ]
}

/// n_i^+ = n_i, L^+ = L, and the stated m_i^+ = i n_i - m_i (which differs
/// from the computed adjoint by an overall sign; both are reported).
pub fn adjoint_identities() -> Vec<IdentityReport> {
    use AngularOperator as A;
    let adjoint_check = |name: &str, op: &A, stated: &A, documented: bool| {
        let adj = op.banded().adjoint();
        let matches = banded_equal(&adj, &stated.banded());
        IdentityReport {
            name: name.to_string(),
            matches,
            computed: adj.to_string(),
            documented_discrepancy: documented,
        }
    };
    vec![
        adjoint_check("n_x^+ = n_x", &A::Nx, &A::Nx, false),
        adjoint_check("n_y^+ = n_y", &A::Ny, &A::Ny, false),
        adjoint_check("L^+ = L", &A::L, &A::L, false),
        adjoint_check(
            "m_x^+ = i n_x - m_x",
            &A::Mx,
            &A::Nx.times_i().plus(A::Mx.negated()),
            true,
        ),
        adjoint_check(
            "m_y^+ = i n_y - m_y",
            &A::My,
            &A::Ny.times_i().plus(A::My.negated()),
            true,
        ),
    ]
}

fn banded_equal(a: &BandedForm, b: &BandedForm) -> bool {
    (-EQUALITY_WINDOW..=EQUALITY_WINDOW).all(|k| {
        let basis = TrigPolynomial::basis(k);
        a.apply(&basis) == b.apply(&basis)
    })
}
