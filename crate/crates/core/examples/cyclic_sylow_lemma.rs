//! For `G = P x| F` with `P` a cyclic normal Sylow subgroup and `Z = C_F(P)`:
//! `rho(G) = rho(P)^|Z| rho(F)^|P|`, which divides `rho(P)^|F| rho(F)^|P|`
//! with equality exactly when `Z = F`.

use rho_bounds::arith::factor;
use rho_bounds::classify::sylow_split;
use rho_bounds::group::Group;
use rho_bounds::invariants::{
    check_split_divisibility, invariants_direct, invariants_of_subgroup,
    rho_semidirect_cyclic_sylow, split_ceiling,
};
use rho_bounds::verify::parse_recipe;

fn main() {
    for text in [
        "Dic(3)",
        "S(3)",
        "SD(9,3,4)",
        "Direct(C(5),S(3))",
        "Frob(13,4)",
        "Ab(3,4)",
    ] {
        let g = Group::build(&parse_recipe(text).unwrap()).unwrap();
        let rho = invariants_direct(&g).rho;
        println!("{text}: rho = {rho}");
        for p in factor(g.order() as u64).primes() {
            let Some(s) = sylow_split(&g, p).unwrap() else {
                println!("  p={p}: Sylow subgroup not normal");
                continue;
            };
            if !s.sylow.is_cyclic() {
                println!("  p={p}: Sylow subgroup not cyclic");
                continue;
            }
            let rp = invariants_of_subgroup(&s.sylow).rho;
            let rf = invariants_of_subgroup(&s.complement).rho;
            let formula = rho_semidirect_cyclic_sylow(&s, &rp, &rf).unwrap();
            let check = check_split_divisibility(&s, &rho, &rp, &rf);
            println!(
                "  p={p}: |P|={} |F|={} |Z|={}  formula {} ({})  ceiling {}  divides={} equal={}",
                s.sylow.order(),
                s.complement.order(),
                s.centralizer_in_complement.order(),
                formula,
                if formula == rho {
                    "matches"
                } else {
                    "MISMATCH"
                },
                split_ceiling(&s, &rp, &rf),
                check.divides,
                check.equal
            );
        }
    }
}
