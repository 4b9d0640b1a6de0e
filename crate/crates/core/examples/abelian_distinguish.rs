//! Abelian groups of the same order never share a product of element orders.

use rho_bounds::group::BuildOptions;
use rho_bounds::verify::check_abelian_distinguish;

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(64);
    let rows =
        check_abelian_distinguish(n_max, &BuildOptions::default()).expect("n_max within the cap");
    for r in rows.iter().filter(|r| r.lhs != "1 classes") {
        println!("{:<6} {:<10} {}", r.label, r.lhs, r.notes);
    }
    let bad = rows.iter().filter(|r| r.is_violation()).count();
    println!("orders 1..={n_max}: {bad} collisions");
}
