//! Structural flags for groups on both sides of each class boundary.

use rho_bounds::classify::classify;
use rho_bounds::group::Group;
use rho_bounds::verify::parse_recipe;

fn yn(b: bool) -> &'static str {
    if b {
        "y"
    } else {
        "."
    }
}

fn main() {
    let recipes = [
        "C(12)",
        "Ab(2,6)",
        "Dic(2)",
        "D(4)",
        "S(3)",
        "Dic(3)",
        "SD(7,3,2)",
        "A(4)",
        "S(4)",
        "Frob(11,5)",
        "Direct(C(2),D(6))",
        "A(5)",
    ];
    println!("{:<18} cyc ab nil ss tower meta frob  invariants", "recipe");
    for text in recipes {
        let g = Group::build(&parse_recipe(text).unwrap()).unwrap();
        let c = classify(&g).unwrap();
        let frob = c.frobenius.as_ref().map_or(".".to_string(), |f| {
            format!("{}:{}", f.kernel_order, f.complement_order)
        });
        let inv = c
            .abelian_invariants
            .as_ref()
            .map_or(String::new(), |v| format!("{v:?}"));
        println!(
            "{:<18}  {}   {}   {}  {}    {}    {}  {:<5} {}",
            text,
            yn(c.cyclic),
            yn(c.abelian),
            yn(c.nilpotent),
            yn(c.supersoluble),
            yn(c.sylow_tower),
            yn(c.metacyclic_paper),
            frob,
            inv
        );
    }
}
