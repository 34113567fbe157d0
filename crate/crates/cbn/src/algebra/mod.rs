//! Exact algebraic machinery: sparse rational polynomials, the zeta/Möbius
//! transform pair, and the quadratic invariants that characterize model
//! distributions.

pub mod moebius;
pub mod poly;
pub mod quadrics;

pub use moebius::{inverse_moebius, moebius_transform};
pub use poly::{leading_monomial, SymbolicPolynomial};
pub use quadrics::{
    exact_distribution, hibi_quadrics, p_coordinate_quadrics,
    symbolic_genotype_polynomial, symbolic_sum_check, verify_invariants,
    verify_invariants_exact, QuadricSpec,
};
