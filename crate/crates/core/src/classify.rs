//! Structural classification: the group classes the bounds quantify over,
//! and the decompositions (Sylow splits, Frobenius kernel and complement)
//! that the product formulas consume.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::factor;
use crate::group::{p_part, Group, GroupError, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("complement of order {order} not found in {group}")]
    ComplementNotFound { group: String, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Kernel `N` and complement `H` of a Frobenius group.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure<'g> {
    pub kernel: Subgroup<'g>,
    pub complement: Subgroup<'g>,
}

impl FrobeniusStructure<'_> {
    /// Checks every defining property of the split, including fixed-point-freeness.
    pub fn is_valid(&self) -> bool {
        let g = self.kernel.group();
        let (n, h) = (self.kernel.order(), self.complement.order());
        g.is_normal(&self.kernel)
            && 1 < n
            && n < g.order()
            && n * h == g.order()
            && n.gcd(&h) == 1
            && self.kernel.intersection_size(&self.complement) == 1
            && (n - 1) % h == 0
            && self.complement.members()[1..].iter().all(|&x| {
                self.kernel.members()[1..]
                    .iter()
                    .all(|&y| !g.commutes(x, y))
            })
    }
}

/// `G = P ⋊ F` with `P` a normal Sylow `p`-subgroup and `Z = C_F(P)`.
#[derive(Clone, Debug)]
pub struct SylowSplit<'g> {
    pub p: u64,
    pub sylow: Subgroup<'g>,
    pub complement: Subgroup<'g>,
    pub centralizer_in_complement: Subgroup<'g>,
}

impl SylowSplit<'_> {
    pub fn is_valid(&self) -> bool {
        let g = self.sylow.group();
        let (ps, fs) = (self.sylow.order(), self.complement.order());
        ps as u64 == p_part(g.order() as u64, self.p)
            && ps * fs == g.order()
            && ps.gcd(&fs) == 1
            && g.is_normal(&self.sylow)
            && self.sylow.intersection_size(&self.complement) == 1
            && self
                .centralizer_in_complement
                .is_subset_of(&self.complement)
    }

    /// `C_F(P) = F`, i.e. the product is direct.
    pub fn is_direct(&self) -> bool {
        self.centralizer_in_complement.order() == self.complement.order()
    }
}

pub fn is_cyclic(g: &Group) -> bool {
    let n = g.order() as u64;
    g.element_orders().any(|o| o == n)
}

pub fn is_abelian(g: &Group) -> bool {
    g.elements()
        .all(|a| (a + 1..g.order()).all(|b| g.commutes(a, b)))
}

fn prime_divisors(g: &Group) -> Vec<u64> {
    factor(g.order() as u64).primes().collect()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Group) -> bool {
    prime_divisors(g).into_iter().all(|p| {
        let s = g.sylow(p).expect("p divides the order");
        g.is_normal(&s)
    })
}

/// Recursion on a normal subgroup of prime order. Supersolubility passes to
/// quotients, so the first such subgroup found decides the question.
pub fn is_supersoluble(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    let mut tried = vec![false; g.order()];
    for x in g.elements().skip(1) {
        if tried[x] || !crate::arith::is_prime(g.elem_order(x)) {
            continue;
        }
        let cyclic = g.subgroup_generated(&[x]);
        for &y in &cyclic.members()[1..] {
            tried[y] = true;
        }
        if g.is_normal(&cyclic) {
            let q = g.quotient(&cyclic).expect("normal");
            return is_supersoluble(&q);
        }
    }
    false
}

/// `G'` cyclic and `G/G'` cyclic.
pub fn is_metacyclic(g: &Group) -> bool {
    let derived = g.derived_subgroup();
    if !derived.is_cyclic() {
        return false;
    }
    let q = g.quotient(&derived).expect("derived subgroup is normal");
    is_cyclic(&q)
}

/// The `p'`-elements form a subgroup of order `|G|/|G|_p`.
pub fn is_p_nilpotent(g: &Group, p: u64) -> bool {
    let n = g.order() as u64;
    let complement_order = (n / p_part(n, p)) as usize;
    let set: Vec<usize> = g.elements().filter(|&x| g.elem_order(x) % p != 0).collect();
    if set.len() != complement_order {
        return false;
    }
    let mut mask = vec![false; g.order()];
    for &x in &set {
        mask[x] = true;
    }
    set.iter().all(|&a| set.iter().all(|&b| mask[g.mul(a, b)]))
}

/// Some normal Sylow subgroup whose quotient again has a Sylow tower.
pub fn has_sylow_tower(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    prime_divisors(g).into_iter().any(|p| {
        let s = g.sylow(p).expect("p divides the order");
        g.is_normal(&s) && has_sylow_tower(&g.quotient(&s).expect("normal"))
    })
}

/// Complement of a normal Hall subgroup, grown greedily from `candidates`
/// (the elements of order coprime to it).
///
/// Every subgroup of coprime order lies in some complement, so a subgroup
/// short of `target` always has a candidate extending it within one; an
/// element rejected early stays rejected later, so one pass suffices.
fn find_subgroup_of_order<'g>(
    g: &'g Group,
    candidates: &[usize],
    target: usize,
) -> Option<Subgroup<'g>> {
    let mut s = g.trivial_subgroup();
    for &x in candidates {
        if s.order() == target {
            break;
        }
        if s.contains(x) || target % g.elem_order(x) as usize != 0 {
            continue;
        }
        let t = s.extend(&[x]);
        if target % t.order() == 0 {
            s = t;
        }
    }
    (s.order() == target).then_some(s)
}

pub fn frobenius_structure(g: &Group) -> Result<Option<FrobeniusStructure<'_>>, ClassifyError> {
    if g.order() < 6 || is_abelian(g) {
        return Ok(None);
    }
    for kernel in g.normal_subgroups()? {
        if kernel.is_trivial() || kernel.is_whole() {
            continue;
        }
        let self_centralizing = kernel.members()[1..].iter().all(|&x| {
            g.elements()
                .all(|y| !g.commutes(x, y) || kernel.contains(y))
        });
        if !self_centralizing {
            continue;
        }
        let target = g.order() / kernel.order();
        let candidates: Vec<usize> = g
            .elements()
            .filter(|&x| !kernel.contains(x) && (kernel.order() as u64).gcd(&g.elem_order(x)) == 1)
            .collect();
        let complement = find_subgroup_of_order(g, &candidates, target).ok_or_else(|| {
            ClassifyError::ComplementNotFound {
                group: g.label().to_string(),
                order: target,
            }
        })?;
        let fs = FrobeniusStructure { kernel, complement };
        debug_assert!(fs.is_valid());
        return Ok(Some(fs));
    }
    Ok(None)
}

pub fn sylow_split(g: &Group, p: u64) -> Result<Option<SylowSplit<'_>>, ClassifyError> {
    let sylow = g.sylow(p)?;
    if !g.is_normal(&sylow) {
        return Ok(None);
    }
    let target = g.order() / sylow.order();
    let candidates: Vec<usize> = g.elements().filter(|&x| g.elem_order(x) % p != 0).collect();
    let complement = find_subgroup_of_order(g, &candidates, target).ok_or_else(|| {
        ClassifyError::ComplementNotFound {
            group: g.label().to_string(),
            order: target,
        }
    })?;
    let centralizer_in_complement = g.centralizer(&sylow, &complement);
    let split = SylowSplit {
        p,
        sylow,
        complement,
        centralizer_in_complement,
    };
    debug_assert!(split.is_valid());
    Ok(Some(split))
}

/// Invariant factors `d_1 | d_2 | ... | d_k` (ascending) of an abelian group,
/// read off from how many elements have order dividing each prime power.
pub fn abelian_invariants(g: &Group) -> Option<Vec<u64>> {
    if !is_abelian(g) {
        return None;
    }
    // per prime: exponents of the cyclic p-power factors, descending
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, alpha) in factor(g.order() as u64).iter() {
        let mut logs = vec![0u32];
        let mut k = 1u32;
        while *logs.last().unwrap() < alpha as u32 {
            let pk = p.pow(k);
            let count = g.element_orders().filter(|o| pk % o == 0).count() as u64;
            let mut log = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                log += 1;
            }
            logs.push(log);
            k += 1;
        }
        // factors with exponent >= k number logs[k] - logs[k-1]
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for (i, &c) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            for _ in 0..(c - next) {
                exps.push(i as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| {
            primary
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    Some(factors)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SplitSummary {
    pub p: u64,
    pub sylow_order: usize,
    pub sylow_cyclic: bool,
    pub complement_order: usize,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FrobeniusSummary {
    pub kernel_order: usize,
    pub complement_order: usize,
    pub kernel_cyclic: bool,
    pub complement_cyclic: bool,
}

/// Every structural flag and decomposition of one group.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Classification {
    pub order: usize,
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersoluble: bool,
    pub sylow_tower: bool,
    pub metacyclic_paper: bool,
    pub p_nilpotent: Vec<(u64, bool)>,
    pub abelian_invariants: Option<Vec<u64>>,
    pub frobenius: Option<FrobeniusSummary>,
    pub sylow_splits: Vec<SplitSummary>,
}

pub fn classify(g: &Group) -> Result<Classification, ClassifyError> {
    let primes = prime_divisors(g);
    let mut sylow_splits = Vec::new();
    for &p in &primes {
        if let Some(s) = sylow_split(g, p)? {
            sylow_splits.push(SplitSummary {
                p,
                sylow_order: s.sylow.order(),
                sylow_cyclic: s.sylow.is_cyclic(),
                complement_order: s.complement.order(),
                centralizer_order: s.centralizer_in_complement.order(),
            });
        }
    }
    let frobenius = frobenius_structure(g)?.map(|fs| FrobeniusSummary {
        kernel_order: fs.kernel.order(),
        complement_order: fs.complement.order(),
        kernel_cyclic: fs.kernel.is_cyclic(),
        complement_cyclic: fs.complement.is_cyclic(),
    });
    Ok(Classification {
        order: g.order(),
        cyclic: is_cyclic(g),
        abelian: is_abelian(g),
        nilpotent: is_nilpotent(g),
        supersoluble: is_supersoluble(g),
        sylow_tower: has_sylow_tower(g),
        metacyclic_paper: is_metacyclic(g),
        p_nilpotent: primes.iter().map(|&p| (p, is_p_nilpotent(g, p))).collect(),
        abelian_invariants: abelian_invariants(g),
        frobenius,
        sylow_splits,
    })
}
