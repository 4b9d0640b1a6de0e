//! Factored integers and rationals: the closed form for cyclic groups, the
//! two bounds, and exact comparison of values far too large to expand.

use rho_bounds::arith::{bound_main, bound_qq, factor, fr_compare, rho_cyclic, FactoredRat};

fn main() {
    for n in [6u64, 12, 64, 210, 512] {
        let rho = rho_cyclic(n);
        let q = factor(n).primes().next().unwrap();
        println!(
            "n = {n:>3}  factors {:<12} rho(C_n) = {rho}",
            factor(n).to_string()
        );
        println!("          main bound {}", bound_main(n, q).unwrap());
        println!("          q^-q bound {}", bound_qq(n, q));
    }

    // 97^(7*97^8) against 97^(7*97^8 + 1): compared without expansion
    let huge: FactoredRat = "97^55736398950219528".parse().unwrap();
    let bigger = huge.scale_prime(97, 1);
    println!("{:?}", fr_compare(&huge, &bigger));

    let mixed: FactoredRat = "2^-3 * 3^5".parse().unwrap();
    let (num, den) = mixed.split();
    println!("{mixed} = {} / {}", num.to_big(), den.to_big());
}
