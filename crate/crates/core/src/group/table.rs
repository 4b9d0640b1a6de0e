use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GroupError, GroupRecipe};

/// Default bound on group orders accepted by [`Group::build`].
pub const DEFAULT_ORDER_CAP: u64 = 512;

/// Orders up to this size get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 128;

const ASSOCIATIVITY_SEED: u64 = 0x05ee_d0fa_550c;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub order_cap: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// A finite group stored as a dense multiplication table.
///
/// Element 0 is the identity. Inverses and element orders are cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    elem_order: Vec<u32>,
    label: String,
}

impl Group {
    /// Builds the group described by `recipe` with the default order cap.
    pub fn build(recipe: &GroupRecipe) -> Result<Group, GroupError> {
        Self::build_with(recipe, &BuildOptions::default())
    }

    pub fn build_with(recipe: &GroupRecipe, opts: &BuildOptions) -> Result<Group, GroupError> {
        recipe.validate()?;
        let order = recipe
            .order()
            .filter(|&n| n <= opts.order_cap)
            .ok_or_else(|| GroupError::OrderCapExceeded {
                recipe: recipe.to_string(),
                cap: opts.order_cap,
            })?;
        let n = order as usize;
        let table = construct(recipe, opts)?;
        debug_assert_eq!(table.len(), n * n);
        Self::from_table(recipe.to_string(), n, table)
    }

    /// Validates a raw row-major table and caches inverses and orders.
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<u32>,
    ) -> Result<Group, GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidTable(msg));
        if order == 0 || table.len() != order * order {
            return bad(format!(
                "table size {} does not match order {order}",
                table.len()
            ));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return bad("entry out of range".into());
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return bad(format!("element 0 is not an identity for {x}"));
            }
        }
        let mut seen = vec![0usize; order];
        for (stamp, row) in table.chunks(order).enumerate() {
            for &y in row {
                if seen[y as usize] == stamp + 1 {
                    return bad(format!("row {stamp} repeats {y}"));
                }
                seen[y as usize] = stamp + 1;
            }
        }
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let inv = row
                .iter()
                .position(|&y| y == 0)
                .expect("latin row contains 0");
            if table[inv * order + x] != 0 {
                return bad(format!("{x} has no two-sided inverse"));
            }
            inverse[x] = inv as u32;
        }
        let mut group = Group {
            order,
            table,
            inverse,
            elem_order: Vec::new(),
            label: label.into(),
        };
        group.check_associativity()?;
        group.elem_order = (0..order).map(|x| group.compute_order(x) as u32).collect();
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        let failure = |a, b, c| {
            Err(GroupError::InvalidTable(format!(
                "associativity fails at ({a}, {b}, {c})"
            )))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return failure(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
            for _ in 0..10 * n * n {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !assoc(a, b, c) {
                    return failure(a, b, c);
                }
            }
        }
        Ok(())
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Order of the element `x`.
    #[inline]
    pub fn elem_order(&self, x: usize) -> u64 {
        u64::from(self.elem_order[x])
    }

    pub fn element_orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.elem_order.iter().map(|&o| u64::from(o))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.elem_order(x);
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// `g x g^-1`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Sorted multiset of element orders.
    pub fn order_multiset(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.element_orders().collect();
        orders.sort_unstable();
        orders
    }
}

fn construct(recipe: &GroupRecipe, opts: &BuildOptions) -> Result<Vec<u32>, GroupError> {
    Ok(match recipe {
        GroupRecipe::Cyclic(n) => cyclic_table(*n as usize),
        GroupRecipe::Abelian(ds) => abelian_table(ds),
        GroupRecipe::Dihedral(m) => dihedral_table(*m as usize),
        GroupRecipe::Dicyclic(m) => dicyclic_table(*m as usize),
        GroupRecipe::Symmetric(k) => permutation_table(*k as usize, false),
        GroupRecipe::Alternating(k) => permutation_table(*k as usize, true),
        GroupRecipe::Direct(a, b) => {
            let ga = Group::build_with(a, opts)?;
            let gb = Group::build_with(b, opts)?;
            direct_table(&ga, &gb)
        }
        &GroupRecipe::SemidirectCC { m, d, k } => semidirect_table(m, d, k),
        &GroupRecipe::FrobAffine { p, d } => {
            semidirect_table(p, d, GroupRecipe::frobenius_multiplier(p, d))
        }
    })
}

fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(f(a, b) as u32);
        }
    }
    table
}

fn cyclic_table(n: usize) -> Vec<u32> {
    table_from_fn(n, |a, b| (a + b) % n)
}

/// Mixed radix, first factor most significant.
fn abelian_table(ds: &[u64]) -> Vec<u32> {
    let ds: Vec<usize> = ds.iter().map(|&d| d as usize).collect();
    let n: usize = ds.iter().product();
    let digits = |mut x: usize| {
        let mut out = vec![0; ds.len()];
        for i in (0..ds.len()).rev() {
            out[i] = x % ds[i];
            x /= ds[i];
        }
        out
    };
    table_from_fn(n, |a, b| {
        let (da, db) = (digits(a), digits(b));
        ds.iter()
            .enumerate()
            .fold(0, |acc, (i, &d)| acc * d + (da[i] + db[i]) % d)
    })
}

/// `r^a s^b` at index `a + m b`, with `s r s = r^-1`.
fn dihedral_table(m: usize) -> Vec<u32> {
    table_from_fn(2 * m, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
        rot + m * ((b + d) % 2)
    })
}

/// `a^i x^e` at index `i + 2m e`, with `a` of order `2m`, `x^2 = a^m`, `x a x^-1 = a^-1`.
fn dicyclic_table(m: usize) -> Vec<u32> {
    let r = 2 * m;
    table_from_fn(2 * r, |x, y| {
        let (i, e) = (x % r, x / r);
        let (j, f) = (y % r, y / r);
        if e == 0 {
            (i + j) % r + r * f
        } else if f == 0 {
            (i + r - j) % r + r
        } else {
            (i + r - j + m) % r
        }
    })
}

/// `x^a y^b` at index `a + m b`, with `y x y^-1 = x^k`.
fn semidirect_table(m: u64, d: u64, k: u64) -> Vec<u32> {
    let (mu, du) = (m as usize, d as usize);
    let mut kpow = vec![1u64 % m; du];
    for b in 1..du {
        kpow[b] = kpow[b - 1] * k % m;
    }
    table_from_fn(mu * du, |x, y| {
        let (a, b) = (x % mu, x / mu);
        let (c, e) = (y % mu, y / mu);
        let twisted = (a as u64 + kpow[b] * c as u64) % m;
        twisted as usize + mu * ((b + e) % du)
    })
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    fn extend(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

fn is_even(perm: &[u8]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

/// Permutations in lexicographic order (identity first); `(στ)(i) = σ(τ(i))`.
fn permutation_table(k: usize, even_only: bool) -> Vec<u32> {
    let perms: Vec<Vec<u8>> = permutations(k)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    table_from_fn(perms.len(), |a, b| {
        let composed: Vec<u8> = perms[b].iter().map(|&t| perms[a][t as usize]).collect();
        index[composed.as_slice()]
    })
}

/// `(i, j)` at index `i |B| + j`.
fn direct_table(a: &Group, b: &Group) -> Vec<u32> {
    let nb = b.order();
    table_from_fn(a.order() * nb, |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(g: &Group) -> Vec<u64> {
        g.order_multiset()
    }

    #[test]
    fn trivial_group() {
        let g = Group::build(&GroupRecipe::Cyclic(1)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.elem_order(0), 1);
    }

    #[test]
    fn dihedral_orders() {
        let g = Group::build(&GroupRecipe::Dihedral(6)).unwrap();
        assert_eq!(g.order(), 12);
        let rotations: Vec<u64> = (0..6).map(|x| g.elem_order(x)).collect();
        assert_eq!(rotations, vec![1, 6, 3, 2, 3, 6]);
        assert!((6..12).all(|x| g.elem_order(x) == 2));
    }

    #[test]
    fn semidirect_is_dicyclic_of_order_12() {
        let g = Group::build(&GroupRecipe::SemidirectCC { m: 3, d: 4, k: 2 }).unwrap();
        let mut expected = vec![1, 3, 3, 2, 6, 6];
        expected.extend([4; 6]);
        expected.sort();
        assert_eq!(multiset(&g), expected);
        let dic = Group::build(&GroupRecipe::Dicyclic(3)).unwrap();
        assert_eq!(multiset(&dic), expected);
    }

    #[test]
    fn permutation_groups() {
        let s4 = Group::build(&GroupRecipe::Symmetric(4)).unwrap();
        let mut expected = vec![1];
        expected.extend([2; 9]);
        expected.extend([3; 8]);
        expected.extend([4; 6]);
        assert_eq!(multiset(&s4), expected);
        let a4 = Group::build(&GroupRecipe::Alternating(4)).unwrap();
        assert_eq!(multiset(&a4), [vec![1, 2, 2, 2], vec![3; 8]].concat());
        assert_eq!(Group::build(&GroupRecipe::Symmetric(1)).unwrap().order(), 1);
        assert_eq!(
            Group::build(&GroupRecipe::Alternating(2)).unwrap().order(),
            1
        );
    }

    #[test]
    fn cap_is_enforced() {
        let err = Group::build(&GroupRecipe::Symmetric(6)).unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { cap: 512, .. }));
        let opts = BuildOptions { order_cap: 720 };
        assert_eq!(
            Group::build_with(&GroupRecipe::Symmetric(6), &opts)
                .unwrap()
                .order(),
            720
        );
        assert!(Group::build(&GroupRecipe::Cyclic(513)).is_err());
    }

    #[test]
    fn invalid_recipe_is_rejected() {
        let err = Group::build(&GroupRecipe::SemidirectCC { m: 5, d: 3, k: 2 }).unwrap_err();
        assert!(matches!(err, GroupError::RecipeInvalid(_)));
    }

    #[test]
    fn frobenius_affine_orders() {
        let g = Group::build(&GroupRecipe::FrobAffine { p: 7, d: 3 }).unwrap();
        let mut expected = [vec![1], vec![7; 6], vec![3; 14]].concat();
        expected.sort();
        assert_eq!(multiset(&g), expected);
    }

    #[test]
    fn rejects_non_associative_table() {
        // a loop of order 5 that is not a group
        let rows: [[u32; 5]; 5] = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.concat();
        assert!(matches!(
            Group::from_table("loop", 5, table),
            Err(GroupError::InvalidTable(_))
        ));
    }

    #[test]
    fn deterministic_rebuild() {
        let r = GroupRecipe::direct(GroupRecipe::Symmetric(3), GroupRecipe::Dicyclic(2));
        assert_eq!(Group::build(&r).unwrap(), Group::build(&r).unwrap());
    }
}
