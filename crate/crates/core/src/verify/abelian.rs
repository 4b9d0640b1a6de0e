//! Abelian groups of a given order, enumerated through partitions of the
//! prime exponents.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::arith::factor;
use crate::group::{BuildOptions, Group, GroupError, GroupRecipe};
use crate::invariants::invariants_direct;

use super::theorems::{TheoremTag, VerificationRow};

/// Partitions of `k` as non-increasing part lists.
fn partitions(k: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factor lists (ascending, each dividing the next) of every
/// abelian group of order `n`, one per isomorphism class.
pub fn abelian_classes(n: u64) -> Vec<Vec<u64>> {
    let mut classes: Vec<Vec<u64>> = vec![vec![]];
    for (p, alpha) in factor(n).iter() {
        let mut next = Vec::new();
        for class in &classes {
            for part in partitions(alpha) {
                // class is ascending; align the largest parts with the largest factors
                let len = class.len().max(part.len());
                let mut merged = vec![1u64; len];
                for (i, &d) in class.iter().rev().enumerate() {
                    merged[len - 1 - i] *= d;
                }
                for (i, &e) in part.iter().enumerate() {
                    merged[len - 1 - i] *= p.pow(e as u32);
                }
                next.push(merged);
            }
        }
        classes = next;
    }
    classes
}

/// `C(n)` for a single factor (or the trivial group), `Ab(..)` otherwise.
pub fn class_recipe(factors: &[u64]) -> GroupRecipe {
    match factors {
        [] => GroupRecipe::Cyclic(1),
        [n] => GroupRecipe::Cyclic(*n),
        many => GroupRecipe::Abelian(many.to_vec()),
    }
}

/// One row per order `n <= n_max`: do the abelian groups of order `n` have
/// pairwise distinct products of element orders?
pub fn check_abelian_distinguish(
    n_max: u64,
    build: &BuildOptions,
) -> Result<Vec<VerificationRow>, GroupError> {
    if n_max > build.order_cap {
        return Err(GroupError::OrderCapExceeded {
            recipe: format!("abelian groups of order up to {n_max}"),
            cap: build.order_cap,
        });
    }
    (1..=n_max)
        .into_par_iter()
        .map(|n| distinguish_order(n, build))
        .collect()
}

fn distinguish_order(n: u64, build: &BuildOptions) -> Result<VerificationRow, GroupError> {
    let label = format!("n={n}");
    let tag = TheoremTag::AbelianDistinguish;
    let mut values = Vec::new();
    for class in abelian_classes(n) {
        let recipe = class_recipe(&class);
        let g = Group::build_with(&recipe, build)?;
        values.push((recipe, invariants_direct(&g).rho));
    }
    let classes = values.len();
    let distinct: HashSet<String> = values.iter().map(|(_, r)| r.to_string()).collect();
    let listing = values
        .iter()
        .map(|(r, rho)| format!("{r}={rho}"))
        .collect::<Vec<_>>()
        .join("; ");
    Ok(VerificationRow::judged(
        &label,
        tag,
        format!("{classes} classes"),
        format!("{} values", distinct.len()),
        distinct.len() == classes,
        false,
    )
    .with_note(listing))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn classes_of_small_orders() {
        assert_eq!(abelian_classes(1), vec![Vec::<u64>::new()]);
        assert_eq!(abelian_classes(7), vec![vec![7]]);
        let mut c8 = abelian_classes(8);
        c8.sort();
        assert_eq!(c8, vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        let mut c36 = abelian_classes(36);
        c36.sort();
        assert_eq!(c36, vec![vec![2, 18], vec![3, 12], vec![6, 6], vec![36]]);
    }

    #[test]
    fn invariant_factors_divide_each_other() {
        for n in 1..=256 {
            for class in abelian_classes(n) {
                assert_eq!(class.iter().product::<u64>(), n);
                assert!(class.windows(2).all(|w| w[1] % w[0] == 0), "{class:?}");
                assert!(class.iter().all(|&d| d > 1));
            }
        }
    }

    #[test]
    fn order_eight_values() {
        let rows = check_abelian_distinguish(8, &BuildOptions::default()).unwrap();
        let r = &rows[7];
        assert!(r.holds == Some(true));
        assert_eq!(r.notes, "C(8)=2^17; Ab(2,4)=2^11; Ab(2,2,2)=2^7");
        let r = &rows[3];
        assert_eq!(r.notes, "C(4)=2^5; Ab(2,2)=2^3");
        assert!(rows[6].holds == Some(true) && rows[6].lhs == "1 classes");
    }

    #[test]
    fn cap_is_respected() {
        let opts = BuildOptions { order_cap: 16 };
        assert!(check_abelian_distinguish(17, &opts).is_err());
    }
}
