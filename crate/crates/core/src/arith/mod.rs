//! Exact arithmetic on factored naturals and rationals.
//!
//! Every product of element orders and every bound lives here as a map from
//! prime to exponent. Comparisons cancel shared primes and fall back to
//! big-integer cross-multiplication, so no verdict depends on floating point.

mod closed_form;
mod factored;

pub use closed_form::{
    bound_main, bound_qq, remark_p_check, remark_p_sides, remark_qp_check, remark_qp_sides,
    rho_cyclic,
};
pub use factored::{
    factor, fr_compare, is_prime, least_prime_divisor, BigNat, FactoredNat, FactoredRat,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division is not exact: exponent of {prime} would go negative")]
    NonDivisible { prime: u64 },
    #[error("{q} does not divide {n}")]
    QNotDividing { n: u64, q: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed factored text {0:?}")]
    BadText(String),
}
