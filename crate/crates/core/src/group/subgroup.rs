use std::fmt;

use super::{Group, GroupError};

/// A subgroup of a borrowed parent group, held as a sorted member list plus
/// a membership mask.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g Group,
    members: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    pub(crate) fn from_closed(group: &'g Group, mut members: Vec<usize>, gens: Vec<usize>) -> Self {
        members.sort_unstable();
        let mut mask = vec![false; group.order()];
        for &m in &members {
            mask[m] = true;
        }
        debug_assert_eq!(group.order() % members.len(), 0, "Lagrange");
        Self {
            group,
            members,
            mask,
            gens,
        }
    }

    /// Validates that `members` is a subgroup of `group`.
    pub fn from_members(group: &'g Group, members: &[usize]) -> Result<Self, GroupError> {
        let mut mask = vec![false; group.order()];
        for &m in members {
            if m >= group.order() {
                return Err(GroupError::NotASubgroup(format!("{m} is not an element")));
            }
            mask[m] = true;
        }
        if !mask[0] {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        let set: Vec<usize> = (0..group.order()).filter(|&x| mask[x]).collect();
        for &a in &set {
            if !mask[group.inv(a)] {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !mask[group.mul(a, b)] {
                    return Err(GroupError::NotASubgroup(format!("{a}*{b} escapes")));
                }
            }
        }
        Ok(Self::from_closed(group, set.clone(), set))
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// A generating set (the generators this subgroup was built from).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Elements in both subgroups.
    pub fn intersection_size(&self, other: &Subgroup<'_>) -> usize {
        self.members.iter().filter(|&&x| other.contains(x)).count()
    }

    /// The smallest subgroup containing `self` and `extra`.
    pub fn extend(&self, extra: &[usize]) -> Subgroup<'g> {
        let gens: Vec<usize> = self.gens.iter().chain(extra).copied().collect();
        let mut closure = close(self.group, self.members.clone(), self.mask.clone(), &gens);
        closure.gens = gens;
        closure
    }

    /// Extension when `self` is normal in the parent: only the new elements
    /// need to act on the right.
    pub(crate) fn extend_normal(&self, extra: &[usize]) -> Subgroup<'g> {
        let mut closure = close(self.group, self.members.clone(), self.mask.clone(), extra);
        closure.gens = self.gens.iter().chain(extra).copied().collect();
        closure
    }

    /// True when every element's order is a power of `p`.
    pub fn is_p_group(&self, p: u64) -> bool {
        self.members.iter().all(|&x| {
            let mut o = self.group.elem_order(x);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
    }

    /// A subgroup is cyclic iff it has an element of full order.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.members.iter().any(|&x| self.group.elem_order(x) == n)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.group.commutes(a, b)))
    }
}

/// Closes `members` (already a subset containing 0) under right
/// multiplication by `gens`.
fn close<'g>(
    group: &'g Group,
    mut members: Vec<usize>,
    mut mask: Vec<bool>,
    gens: &[usize],
) -> Subgroup<'g> {
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for &g in gens {
            let y = group.mul(x, g);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Subgroup {
        group,
        members,
        mask,
        gens: Vec::new(),
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl std::hash::Hash for Subgroup<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.group.label())
            .field("members", &self.members)
            .finish()
    }
}

impl Group {
    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        Subgroup::from_closed(self, vec![0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_closed(self, self.elements().collect(), self.elements().collect())
    }

    /// Least subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup<'_> {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut closure = close(self, vec![0], mask, &gens);
        closure.gens = gens;
        closure
    }

    /// `{x in within : xs = sx for every s in subgroup}`.
    pub fn centralizer<'g>(
        &'g self,
        subgroup: &Subgroup<'_>,
        within: &Subgroup<'g>,
    ) -> Subgroup<'g> {
        let members: Vec<usize> = within
            .members()
            .iter()
            .copied()
            .filter(|&x| subgroup.generators().iter().all(|&s| self.commutes(x, s)))
            .collect();
        Subgroup::from_closed(self, members.clone(), members)
    }

    pub fn center(&self) -> Subgroup<'_> {
        let whole = self.whole();
        self.centralizer(&whole, &whole)
    }

    /// Centralizer of a single element in the whole group.
    pub fn element_centralizer(&self, x: usize) -> Subgroup<'_> {
        let members: Vec<usize> = self.elements().filter(|&y| self.commutes(x, y)).collect();
        Subgroup::from_closed(self, members.clone(), members)
    }

    pub fn normalizer<'g>(&'g self, subgroup: &Subgroup<'_>) -> Subgroup<'g> {
        let members: Vec<usize> = self
            .elements()
            .filter(|&g| {
                subgroup
                    .generators()
                    .iter()
                    .all(|&s| subgroup.contains(self.conjugate(s, g)))
            })
            .collect();
        Subgroup::from_closed(self, members.clone(), members)
    }

    pub fn is_normal(&self, subgroup: &Subgroup<'_>) -> bool {
        self.elements().all(|g| {
            subgroup
                .generators()
                .iter()
                .all(|&s| subgroup.contains(self.conjugate(s, g)))
        })
    }

    /// Least normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup<'_> {
        let mut seen = vec![false; self.order()];
        let mut conjugates = Vec::new();
        for &s in set {
            for g in self.elements() {
                let c = self.conjugate(s, g);
                if c != 0 && !seen[c] {
                    seen[c] = true;
                    conjugates.push(c);
                }
            }
        }
        self.subgroup_generated(&conjugates)
    }

    /// The subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let mut seen = vec![false; self.order()];
        let mut comms = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.commutator(a, b);
                if c != 0 && !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        // the commutator set is closed under conjugation
        self.subgroup_generated(&comms)
    }
}
