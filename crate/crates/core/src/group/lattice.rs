use std::collections::HashSet;

use super::{Group, GroupError, Subgroup};
use crate::arith::is_prime;

/// Default bound on the number of normal subgroups enumerated.
pub const DEFAULT_LATTICE_CAP: usize = 10_000;

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        part *= p;
    }
    part
}

impl Group {
    /// Quotient by a normal subgroup. Cosets are numbered by their least
    /// element, so the identity coset is 0.
    pub fn quotient(&self, normal: &Subgroup<'_>) -> Result<Group, GroupError> {
        if !std::ptr::eq(normal.group(), self) || !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::with_capacity(self.order() / normal.order());
        for x in self.elements() {
            if coset_of[x] == usize::MAX {
                let id = reps.len();
                for &n in normal.members() {
                    coset_of[self.mul(x, n)] = id;
                }
                reps.push(x);
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        Group::from_table(format!("{}/N{}", self.label(), normal.order()), k, table)
    }

    /// A Sylow `p`-subgroup: grown from the trivial subgroup by adjoining, at
    /// each step, the least normalizer element whose `p`-th power lies in the
    /// current subgroup.
    pub fn sylow(&self, p: u64) -> Result<Subgroup<'_>, GroupError> {
        let n = self.order() as u64;
        if !is_prime(p) || n % p != 0 {
            return Err(GroupError::PNotDividing { p, n });
        }
        let target = p_part(n, p) as usize;
        let mut s = self.trivial_subgroup();
        while s.order() < target {
            let norm = self.normalizer(&s);
            let g = norm
                .members()
                .iter()
                .copied()
                .find(|&g| !s.contains(g) && s.contains(self.pow(g, p)))
                .expect("a proper p-subgroup always grows inside its normalizer");
            s = s.extend(&[g]);
            debug_assert!(s.is_p_group(p));
        }
        Ok(s)
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for x in self.elements() {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in self.elements() {
                let c = self.conjugate(x, g);
                if !assigned[c] {
                    assigned[c] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup<'_>>, GroupError> {
        self.normal_subgroups_capped(DEFAULT_LATTICE_CAP)
    }

    /// Every normal subgroup is a join of normal closures of conjugacy
    /// classes; this closes the trivial subgroup under joins with those
    /// closures. Sorted by order, then members.
    pub fn normal_subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup<'_>>, GroupError> {
        let classes = self.conjugacy_classes();
        let trivial = self.trivial_subgroup();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(trivial.members().to_vec());
        let mut found = vec![trivial];
        let mut i = 0;
        while i < found.len() {
            for class in classes.iter().skip(1) {
                if found[i].contains(class[0]) {
                    continue;
                }
                let joined = found[i].extend_normal(class);
                if seen.insert(joined.members().to_vec()) {
                    if found.len() >= cap {
                        return Err(GroupError::LatticeCapExceeded { cap });
                    }
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp(b.members()))
        });
        Ok(found)
    }
}
