//! Product, sum and set of element orders for a few recipes.

use rho_bounds::group::Group;
use rho_bounds::invariants::invariants_direct;
use rho_bounds::verify::parse_recipe;

fn main() {
    let recipes = [
        "C(6)",
        "Ab(2,2)",
        "S(3)",
        "Dic(3)",
        "A(4)",
        "Frob(7,3)",
        "Direct(C(2), D(6))",
        "S(4)",
    ];
    println!(
        "{:<20} {:>4} {:<22} {:>6}  omega",
        "recipe", "n", "rho", "psi"
    );
    for text in recipes {
        let recipe = parse_recipe(text).expect("valid recipe");
        let g = Group::build(&recipe).expect("within the order cap");
        let r = invariants_direct(&g);
        let omega: Vec<String> = r.omega.iter().map(u64::to_string).collect();
        println!(
            "{:<20} {:>4} {:<22} {:>6}  {{{}}}",
            text,
            r.n,
            r.rho.to_string(),
            r.psi,
            omega.join(",")
        );
    }
}
