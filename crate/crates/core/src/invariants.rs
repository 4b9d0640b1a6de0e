//! Element-order invariants computed straight from the table, plus each
//! decomposition formula as a separate path for cross-checking.
//!
//! The formula functions take precomputed component values, so a
//! disagreement with the direct value isolates the formula from the engine.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{factor, least_prime_divisor, rho_cyclic, ArithError, BigNat, FactoredNat};
use crate::classify::{FrobeniusStructure, SylowSplit};
use crate::group::{Group, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("the Sylow subgroup is not cyclic")]
    SylowNotCyclic,
    #[error("kernel and complement must both be cyclic")]
    NotCyclicFrobenius,
    #[error("cyclic factor order {c} is not coprime to {f}")]
    CyclicFactorNotCoprime { c: u64, f: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Order, least prime, product, sum and set of element orders of one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub n: u64,
    pub q_min: Option<u64>,
    #[serde(serialize_with = "as_text")]
    pub rho: FactoredNat,
    #[serde(serialize_with = "as_text")]
    pub psi: BigNat,
    pub omega: BTreeSet<u64>,
}

fn as_text<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn record_from_orders(n: u64, orders: impl Iterator<Item = u64>) -> InvariantRecord {
    let mut counts = std::collections::BTreeMap::new();
    for o in orders {
        *counts.entry(o).or_insert(0u64) += 1;
    }
    let rho = counts.iter().fold(FactoredNat::one(), |acc, (&o, &c)| {
        acc.mul(&factor(o).pow(c))
    });
    let psi = counts.iter().fold(BigNat::from(0u32), |acc, (&o, &c)| {
        acc + BigNat::from(o) * c
    });
    InvariantRecord {
        n,
        q_min: least_prime_divisor(n),
        rho,
        psi,
        omega: counts.into_keys().collect(),
    }
}

pub fn invariants_direct(g: &Group) -> InvariantRecord {
    record_from_orders(g.order() as u64, g.element_orders())
}

/// Invariants of a subgroup; element orders do not depend on the ambient group.
pub fn invariants_of_subgroup(s: &Subgroup<'_>) -> InvariantRecord {
    let g = s.group();
    record_from_orders(
        s.order() as u64,
        s.members().iter().map(|&x| g.elem_order(x)),
    )
}

/// Sum of element orders of `C_n`, enumerating `n / gcd(i, n)`.
pub fn psi_cyclic(n: u64) -> BigNat {
    (0..n).fold(BigNat::from(0u32), |acc, i| acc + n / i.gcd(&n))
}

/// `prod_i rho(H_i)^(prod_{j != i} |H_j|)` for pairwise coprime orders.
pub fn rho_coprime_product(factors: &[(&FactoredNat, u64)]) -> Result<FactoredNat, InvariantError> {
    for (i, &(_, a)) in factors.iter().enumerate() {
        for &(_, b) in &factors[i + 1..] {
            if a.gcd(&b) != 1 {
                return Err(InvariantError::NotCoprime(a, b));
            }
        }
    }
    let mut acc = FactoredNat::one();
    for (i, &(rho, _)) in factors.iter().enumerate() {
        let co: u64 = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &(_, o))| o)
            .product();
        acc = acc.mul(&rho.pow(co));
    }
    Ok(acc)
}

/// `rho(P)^|Z| rho(F)^|P|` for a split with cyclic Sylow subgroup.
pub fn rho_semidirect_cyclic_sylow(
    split: &SylowSplit<'_>,
    rho_p: &FactoredNat,
    rho_f: &FactoredNat,
) -> Result<FactoredNat, InvariantError> {
    if !split.sylow.is_cyclic() {
        return Err(InvariantError::SylowNotCyclic);
    }
    let z = split.centralizer_in_complement.order() as u64;
    let p = split.sylow.order() as u64;
    Ok(rho_p.pow(z).mul(&rho_f.pow(p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisibilityCheck {
    pub divides: bool,
    pub equal: bool,
}

/// Compares `rho(G)` with `rho(P)^|F| rho(F)^|P|`.
pub fn check_split_divisibility(
    split: &SylowSplit<'_>,
    rho_g: &FactoredNat,
    rho_p: &FactoredNat,
    rho_f: &FactoredNat,
) -> DivisibilityCheck {
    let rhs = split_ceiling(split, rho_p, rho_f);
    DivisibilityCheck {
        divides: rho_g.divides(&rhs),
        equal: *rho_g == rhs,
    }
}

/// `rho(P)^|F| rho(F)^|P|`.
pub fn split_ceiling(
    split: &SylowSplit<'_>,
    rho_p: &FactoredNat,
    rho_f: &FactoredNat,
) -> FactoredNat {
    let f = split.complement.order() as u64;
    let p = split.sylow.order() as u64;
    rho_p.pow(f).mul(&rho_f.pow(p))
}

/// `rho(N) rho(H)^|N|`.
pub fn rho_frobenius(
    fs: &FrobeniusStructure<'_>,
    rho_n: &FactoredNat,
    rho_h: &FactoredNat,
) -> FactoredNat {
    rho_n.mul(&rho_h.pow(fs.kernel.order() as u64))
}

/// `rho(C_n) / rho(C_|N|)^(c (|H| - 1))` for `F x C_c` with `F` Frobenius
/// with cyclic kernel and complement, `n = |F| c`.
pub fn rho_frobenius_times_cyclic(
    fs: &FrobeniusStructure<'_>,
    c: u64,
) -> Result<FactoredNat, InvariantError> {
    if !fs.kernel.is_cyclic() || !fs.complement.is_cyclic() {
        return Err(InvariantError::NotCyclicFrobenius);
    }
    let f = fs.kernel.group().order() as u64;
    if c.gcd(&f) != 1 {
        return Err(InvariantError::CyclicFactorNotCoprime { c, f });
    }
    let kernel = fs.kernel.order() as u64;
    let h = fs.complement.order() as u64;
    let denominator = rho_cyclic(kernel).pow(c * (h - 1));
    Ok(rho_cyclic(f * c).div(&denominator)?)
}
