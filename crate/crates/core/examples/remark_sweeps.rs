//! The prime-power remark (weak and strong forms) and the `p >= q` remark
//! over their full default ranges.

use rho_bounds::verify::{remark_p_rows, remark_qp_rows};

fn main() {
    let p_rows = remark_p_rows(97, 8);
    let qp_rows = remark_qp_rows(100);
    for (name, rows) in [("prime power", &p_rows), ("p >= q", &qp_rows)] {
        let fails = rows.iter().filter(|r| r.is_violation()).count();
        let tight: Vec<&str> = rows
            .iter()
            .filter(|r| r.tight)
            .map(|r| r.label.as_str())
            .take(6)
            .collect();
        println!(
            "{name}: {} cases, {fails} failures, tight e.g. {}",
            rows.len(),
            tight.join(" ")
        );
    }
    for r in p_rows
        .iter()
        .filter(|r| r.label.starts_with("p=3,"))
        .take(4)
    {
        println!("  {:<22} {} <= {}", r.label, r.lhs, r.rhs);
    }
}
