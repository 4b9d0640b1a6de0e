use std::cmp::Ordering;

use super::factored::{factor, fr_compare, is_prime, BigNat, FactoredNat, FactoredRat};
use super::ArithError;

/// Exponent of `p` in the product of element orders of `C_{p^alpha}`:
/// `(alpha p^(alpha+1) - (alpha+1) p^alpha + 1) / (p - 1)`.
fn prime_power_exponent(p: u64, alpha: u64) -> u128 {
    let p = u128::from(p);
    let a = u128::from(alpha);
    let pa = p.pow(u32::try_from(alpha).expect("exponent too large"));
    let numerator = a * pa * p + 1 - (a + 1) * pa;
    debug_assert_eq!(numerator % (p - 1), 0);
    numerator / (p - 1)
}

/// Product of element orders of the cyclic group of order `n`, in closed form.
pub fn rho_cyclic(n: u64) -> FactoredNat {
    let fac = factor(n);
    let pairs = fac.iter().map(|(p, alpha)| {
        let cofactor = u128::from(n / p.pow(alpha as u32));
        let e = prime_power_exponent(p, alpha) * cofactor;
        (p, u64::try_from(e).expect("exponent overflow"))
    });
    FactoredNat::from_pairs(pairs.collect::<Vec<_>>()).expect("keys come from factor")
}

fn check_least_prime(n: u64, q: u64) -> Result<(), ArithError> {
    if n == 0 || q < 2 || n % q != 0 {
        return Err(ArithError::QNotDividing { n, q });
    }
    Ok(())
}

/// `q^{-(n/q)(q-1)} * rho(C_n)`, the bound for non-cyclic supersoluble groups.
pub fn bound_main(n: u64, q: u64) -> Result<FactoredRat, ArithError> {
    check_least_prime(n, q)?;
    let drop = i64::try_from((n / q) * (q - 1)).expect("exponent overflow");
    Ok(rho_cyclic(n).to_rat().scale_prime(q, -drop))
}

/// `q^{-q} * rho(C_n)`.
///
/// # Panics
///
/// Panics if `q` does not divide `n`.
pub fn bound_qq(n: u64, q: u64) -> FactoredRat {
    check_least_prime(n, q).expect("q must divide n");
    rho_cyclic(n).to_rat().scale_prime(q, -(q as i64))
}

/// Decides `(p^(alpha-1))^(p^alpha) <= rho(C_{p^alpha}) * p^-1`, or with `p^-p`
/// on the right when `strong` is set.
pub fn remark_p_check(p: u64, alpha: u64, strong: bool) -> Result<bool, ArithError> {
    let (lhs, rhs) = remark_p_sides(p, alpha, strong)?;
    Ok(fr_compare(&lhs, &rhs) != Ordering::Greater)
}

/// Both sides of the prime-power remark, for reporting.
pub fn remark_p_sides(
    p: u64,
    alpha: u64,
    strong: bool,
) -> Result<(FactoredRat, FactoredRat), ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    if alpha == 0 {
        return Err(ArithError::PreconditionViolation(
            "alpha must be at least 1".into(),
        ));
    }
    if strong && (p == 2 || alpha < 2) {
        return Err(ArithError::PreconditionViolation(format!(
            "strong form needs an odd prime and alpha >= 2 (got p = {p}, alpha = {alpha})"
        )));
    }
    let pa = p
        .checked_pow(u32::try_from(alpha).map_err(|_| overflow())?)
        .ok_or_else(overflow)?;
    let lhs_exp = (alpha - 1).checked_mul(pa).ok_or_else(overflow)?;
    let lhs = FactoredNat::prime_power(p, lhs_exp).to_rat();
    let drop = if strong { p } else { 1 };
    let rhs = rho_cyclic(pa).to_rat().scale_prime(p, -(drop as i64));
    Ok((lhs, rhs))
}

fn overflow() -> ArithError {
    ArithError::PreconditionViolation("arguments too large".into())
}

/// Decides `p^{-(p-1)/p} <= q^{-(q-1)/q}` for `p >= q >= 1` through the
/// equivalent integer comparison `p^{q(p-1)} >= q^{p(q-1)}`.
pub fn remark_qp_check(p: u64, q: u64) -> Result<bool, ArithError> {
    let (small, large) = remark_qp_sides(p, q)?;
    Ok(small <= large)
}

/// Returns `(q^{p(q-1)}, p^{q(p-1)})`.
pub fn remark_qp_sides(p: u64, q: u64) -> Result<(BigNat, BigNat), ArithError> {
    if q == 0 || p < q {
        return Err(ArithError::PreconditionViolation(format!(
            "need p >= q >= 1 (got p = {p}, q = {q})"
        )));
    }
    let exp = |x: u64| u32::try_from(x).map_err(|_| overflow());
    let small = BigNat::from(q).pow(exp(p * (q - 1))?);
    let large = BigNat::from(p).pow(exp(q * (p - 1))?);
    Ok((small, large))
}
