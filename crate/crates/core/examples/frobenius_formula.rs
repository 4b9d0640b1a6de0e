//! Frobenius groups: `rho(G) = rho(N) rho(H)^|N|`, and the closed form for a
//! Frobenius group times a cyclic group of coprime order.

use rho_bounds::arith::{bound_qq, least_prime_divisor};
use rho_bounds::classify::{frobenius_structure, is_cyclic};
use rho_bounds::group::{Group, GroupRecipe};
use rho_bounds::invariants::{
    invariants_direct, invariants_of_subgroup, rho_frobenius, rho_frobenius_times_cyclic,
};

fn main() {
    for (p, d) in [(3, 2), (5, 4), (7, 3), (7, 6), (11, 5), (13, 12)] {
        let g = Group::build(&GroupRecipe::FrobAffine { p, d }).unwrap();
        let fs = frobenius_structure(&g)
            .unwrap()
            .expect("affine groups are Frobenius");
        let rho = invariants_direct(&g).rho;
        let formula = rho_frobenius(
            &fs,
            &invariants_of_subgroup(&fs.kernel).rho,
            &invariants_of_subgroup(&fs.complement).rho,
        );
        let q = least_prime_divisor(p * d).unwrap();
        println!(
            "Frob({p},{d}): rho = {rho}  formula agrees: {}  q^-q bound {}",
            rho == formula,
            bound_qq(p * d, q)
        );
    }

    for (f, c) in [
        (GroupRecipe::Symmetric(3), 5),
        (GroupRecipe::FrobAffine { p: 7, d: 3 }, 2),
        (GroupRecipe::FrobAffine { p: 5, d: 4 }, 3),
    ] {
        let fg = Group::build(&f).unwrap();
        let fs = frobenius_structure(&fg).unwrap().unwrap();
        assert!(fs.kernel.is_cyclic() && fs.complement.is_cyclic());
        let closed = rho_frobenius_times_cyclic(&fs, c).unwrap();
        let prod = Group::build(&GroupRecipe::direct(f.clone(), GroupRecipe::Cyclic(c))).unwrap();
        assert!(!is_cyclic(&prod));
        println!(
            "{f} x C({c}): closed form {closed}, direct {}",
            invariants_direct(&prod).rho
        );
    }
}
