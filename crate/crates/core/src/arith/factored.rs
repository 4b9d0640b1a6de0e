use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::ArithError;

/// Arbitrary-precision natural number used for sums and cross-multiplied comparisons.
pub type BigNat = BigUint;

/// Deterministic primality test by trial division over `6k ± 1`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Factors `n` by trial division.
///
/// # Panics
///
/// Panics if `n == 0`; zero has no factorization.
pub fn factor(n: u64) -> FactoredNat {
    assert!(n >= 1, "cannot factor 0");
    let mut map = BTreeMap::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            map.insert(p, e);
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        map.insert(rest, 1);
    }
    FactoredNat(map)
}

/// Least prime divisor of `n`, or `None` for `n = 1`.
pub fn least_prime_divisor(n: u64) -> Option<u64> {
    factor(n).primes().next()
}

/// A positive integer stored as a map from prime to positive exponent.
///
/// The empty map is 1. Iteration is in ascending prime order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredNat(BTreeMap<u64, u64>);

impl FactoredNat {
    pub fn one() -> Self {
        Self::default()
    }

    /// `p^e` for a prime `p`.
    pub fn prime_power(p: u64, e: u64) -> Self {
        debug_assert!(is_prime(p), "{p} is not prime");
        let mut map = BTreeMap::new();
        if e > 0 {
            map.insert(p, e);
        }
        Self(map)
    }

    /// Builds from `(prime, exponent)` pairs, merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, ArithError> {
        let mut map = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            if e > 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        Ok(Self(map))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, p: u64) -> u64 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&p, &e)| (p, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (&p, &e) in &other.0 {
            let slot = map.entry(p).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        Self(map)
    }

    pub fn pow(&self, k: u64) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self(
            self.0
                .iter()
                .map(|(&p, &e)| (p, e.checked_mul(k).expect("exponent overflow")))
                .collect(),
        )
    }

    /// Exact quotient; fails with [`ArithError::NonDivisible`] unless `other` divides `self`.
    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        let mut map = self.0.clone();
        for (&p, &e) in &other.0 {
            let have = map.get(&p).copied().unwrap_or(0);
            match have.cmp(&e) {
                Ordering::Less => return Err(ArithError::NonDivisible { prime: p }),
                Ordering::Equal => {
                    map.remove(&p);
                }
                Ordering::Greater => {
                    map.insert(p, have - e);
                }
            }
        }
        Ok(Self(map))
    }

    /// True when every exponent of `self` is at most the matching exponent of `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|(p, &e)| other.exponent(*p) >= e)
    }

    pub fn to_big(&self) -> BigNat {
        self.0
            .iter()
            .fold(BigNat::one(), |acc, (&p, &e)| acc * pow_big(p, e))
    }

    /// The value as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.0.iter().try_fold(1u64, |acc, (&p, &e)| {
            let e = u32::try_from(e).ok()?;
            acc.checked_mul(p.checked_pow(e)?)
        })
    }

    pub fn to_rat(&self) -> FactoredRat {
        FactoredRat(
            self.0
                .iter()
                .map(|(&p, &e)| (p, i64::try_from(e).expect("exponent overflow")))
                .collect(),
        )
    }
}

fn pow_big(p: u64, e: u64) -> BigNat {
    BigNat::from(p).pow(u32::try_from(e).expect("exponent too large to expand"))
}

/// A positive rational stored as a map from prime to nonzero signed exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredRat(BTreeMap<u64, i64>);

impl FactoredRat {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, i64)>) -> Result<Self, ArithError> {
        let mut map: BTreeMap<u64, i64> = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            *map.entry(p).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        Ok(Self(map))
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.0.iter().map(|(&p, &e)| (p, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies by `p^delta`; `delta` may be negative.
    pub fn scale_prime(&self, p: u64, delta: i64) -> Self {
        let mut map = self.0.clone();
        let slot = map.entry(p).or_insert(0);
        *slot = slot.checked_add(delta).expect("exponent overflow");
        map.retain(|_, e| *e != 0);
        Self(map)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (&p, &e) in &other.0 {
            let slot = map.entry(p).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        map.retain(|_, e| *e != 0);
        Self(map)
    }

    pub fn recip(&self) -> Self {
        Self(self.0.iter().map(|(&p, &e)| (p, -e)).collect())
    }

    /// Splits into coprime numerator and denominator.
    pub fn split(&self) -> (FactoredNat, FactoredNat) {
        let mut num = BTreeMap::new();
        let mut den = BTreeMap::new();
        for (&p, &e) in &self.0 {
            if e > 0 {
                num.insert(p, e as u64);
            } else {
                den.insert(p, e.unsigned_abs());
            }
        }
        (FactoredNat(num), FactoredNat(den))
    }

    /// Returns the value as a natural if the denominator is 1.
    pub fn to_nat(&self) -> Option<FactoredNat> {
        let (num, den) = self.split();
        den.is_one().then_some(num)
    }
}

impl From<FactoredNat> for FactoredRat {
    fn from(n: FactoredNat) -> Self {
        n.to_rat()
    }
}

impl From<&FactoredNat> for FactoredRat {
    fn from(n: &FactoredNat) -> Self {
        n.to_rat()
    }
}

/// Exact three-way comparison of two positive rationals.
///
/// Common primes are cancelled first, so comparisons of pure prime powers never
/// expand; mixed cases are decided by cross-multiplying the big-integer
/// numerator and denominator.
pub fn fr_compare(a: &FactoredRat, b: &FactoredRat) -> Ordering {
    let (num, den) = a.mul(&b.recip()).split();
    match (num.is_one(), den.is_one()) {
        (true, true) => Ordering::Equal,
        (false, true) => Ordering::Greater,
        (true, false) => Ordering::Less,
        (false, false) => num.to_big().cmp(&den.to_big()),
    }
}

impl PartialOrd for FactoredRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FactoredRat {
    fn cmp(&self, other: &Self) -> Ordering {
        fr_compare(self, other)
    }
}

fn write_terms<E: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (u64, E)>,
) -> fmt::Result {
    let mut first = true;
    for (p, e) in terms {
        if !first {
            f.write_str(" * ")?;
        }
        write!(f, "{p}^{e}")?;
        first = false;
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter())
    }
}

impl fmt::Display for FactoredRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter())
    }
}

fn parse_terms(s: &str) -> Result<Vec<(u64, i64)>, ArithError> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|term| {
            let bad = || ArithError::BadText(term.trim().to_string());
            let (base, exp) = term.trim().split_once('^').ok_or_else(bad)?;
            let p: u64 = base.trim().parse().map_err(|_| bad())?;
            let e: i64 = exp.trim().parse().map_err(|_| bad())?;
            Ok((p, e))
        })
        .collect()
}

impl FromStr for FactoredRat {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_pairs(parse_terms(s)?)
    }
}

impl FromStr for FactoredNat {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = parse_terms(s)?;
        let mut pairs = Vec::with_capacity(terms.len());
        for (p, e) in terms {
            let e = u64::try_from(e).map_err(|_| ArithError::BadText(s.to_string()))?;
            pairs.push((p, e));
        }
        Self::from_pairs(pairs)
    }
}
