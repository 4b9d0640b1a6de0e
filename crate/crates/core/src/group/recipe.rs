use std::fmt;

use num_integer::Integer;

use super::GroupError;
use crate::arith::is_prime;

/// Construction recipe for a finite group. Recipes are the only way groups
/// enter the toolkit and their text form is the corpus serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupRecipe {
    /// `C(n)`
    Cyclic(u64),
    /// `Ab(d1, ..., dk)`, the direct product of cyclic groups of the given orders.
    Abelian(Vec<u64>),
    /// `D(m)`, dihedral of order `2m`.
    Dihedral(u64),
    /// `Dic(m)`, dicyclic of order `4m`.
    Dicyclic(u64),
    /// `S(k)` for `k <= 6`.
    Symmetric(u64),
    /// `A(k)` for `k <= 6`.
    Alternating(u64),
    /// `Direct(a, b)`
    Direct(Box<GroupRecipe>, Box<GroupRecipe>),
    /// `SD(m, d, k)`: `C_m ⋊ C_d` where the generator of `C_d` acts by `x ↦ x^k`.
    SemidirectCC { m: u64, d: u64, k: u64 },
    /// `Frob(p, d)`: `C_p ⋊ C_d` with a faithful action, `d | p - 1`.
    FrobAffine { p: u64, d: u64 },
}

pub const MAX_PERMUTATION_DEGREE: u64 = 6;

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::RecipeInvalid(msg.into())
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = u128::from(m);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least primitive root modulo a prime `p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let prime_divisors: Vec<u64> = crate::arith::factor(phi).primes().collect();
    (2..p)
        .find(|&g| prime_divisors.iter().all(|&r| pow_mod(g, phi / r, p) != 1))
        .expect("every prime has a primitive root")
}

impl GroupRecipe {
    pub fn cyclic(n: u64) -> Self {
        Self::Cyclic(n)
    }

    pub fn direct(a: GroupRecipe, b: GroupRecipe) -> Self {
        Self::Direct(Box::new(a), Box::new(b))
    }

    /// Checks the arithmetic side conditions of every node.
    pub fn validate(&self) -> Result<(), GroupError> {
        match self {
            Self::Cyclic(n) | Self::Dihedral(n) | Self::Dicyclic(n) if *n == 0 => {
                Err(invalid(format!("{self}: argument must be positive")))
            }
            Self::Abelian(ds) if ds.is_empty() || ds.contains(&0) => Err(invalid(format!(
                "{self}: factors must be positive and non-empty"
            ))),
            Self::Symmetric(k) | Self::Alternating(k) if *k == 0 || *k > MAX_PERMUTATION_DEGREE => {
                Err(invalid(format!(
                    "{self}: degree must lie in 1..={MAX_PERMUTATION_DEGREE}"
                )))
            }
            Self::Direct(a, b) => {
                a.validate()?;
                b.validate()
            }
            &Self::SemidirectCC { m, d, k } => {
                if m == 0 || d == 0 {
                    return Err(invalid(format!("{self}: m and d must be positive")));
                }
                if k.gcd(&m) != 1 {
                    return Err(invalid(format!("{self}: gcd(k, m) must be 1")));
                }
                if pow_mod(k, d, m) != 1 % m {
                    return Err(invalid(format!("{self}: k^d must be 1 mod m")));
                }
                Ok(())
            }
            &Self::FrobAffine { p, d } => {
                if !is_prime(p) {
                    return Err(invalid(format!("{self}: {p} is not prime")));
                }
                if d <= 1 || (p - 1) % d != 0 {
                    return Err(invalid(format!("{self}: d must divide p - 1 and exceed 1")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Order of the group the recipe describes, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match self {
            Self::Cyclic(n) => Some(*n),
            Self::Abelian(ds) => ds.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d)),
            Self::Dihedral(m) => m.checked_mul(2),
            Self::Dicyclic(m) => m.checked_mul(4),
            Self::Symmetric(k) => Some((1..=*k).product()),
            Self::Alternating(k) => Some(((1..=*k).product::<u64>() / 2).max(1)),
            Self::Direct(a, b) => a.order()?.checked_mul(b.order()?),
            Self::SemidirectCC { m, d, .. } => m.checked_mul(*d),
            Self::FrobAffine { p, d } => p.checked_mul(*d),
        }
    }

    /// Multiplier used by the affine Frobenius construction: an element of
    /// order exactly `d` in the unit group mod `p`.
    pub(crate) fn frobenius_multiplier(p: u64, d: u64) -> u64 {
        pow_mod(primitive_root(p), (p - 1) / d, p)
    }
}

impl fmt::Display for GroupRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C({n})"),
            Self::Abelian(ds) => {
                f.write_str("Ab(")?;
                for (i, d) in ds.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str(")")
            }
            Self::Dihedral(m) => write!(f, "D({m})"),
            Self::Dicyclic(m) => write!(f, "Dic({m})"),
            Self::Symmetric(k) => write!(f, "S({k})"),
            Self::Alternating(k) => write!(f, "A({k})"),
            Self::Direct(a, b) => write!(f, "Direct({a},{b})"),
            Self::SemidirectCC { m, d, k } => write!(f, "SD({m},{d},{k})"),
            Self::FrobAffine { p, d } => write!(f, "Frob({p},{d})"),
        }
    }
}
