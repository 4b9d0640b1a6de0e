//! Numeric sweeps for the two remarks, which quantify over integers.

use std::cmp::Ordering;

use crate::arith::{factor, fr_compare, is_prime, remark_p_sides, remark_qp_check};

use super::theorems::{TheoremTag, VerificationRow};

/// Weak form for every prime `p <= p_max` and `1 <= alpha <= alpha_max`,
/// then the strong form for odd `p` and `alpha >= 2`.
pub fn remark_p_rows(p_max: u64, alpha_max: u64) -> Vec<VerificationRow> {
    let mut rows = Vec::new();
    for strong in [false, true] {
        for p in (2..=p_max).filter(|&p| is_prime(p)) {
            if strong && p == 2 {
                continue;
            }
            let alpha_min = if strong { 2 } else { 1 };
            for alpha in alpha_min..=alpha_max {
                let label = format!(
                    "p={p},alpha={alpha},{}",
                    if strong { "strong" } else { "weak" }
                );
                rows.push(match remark_p_sides(p, alpha, strong) {
                    Ok((lhs, rhs)) => {
                        VerificationRow::at_most(&label, TheoremTag::RemarkP, &lhs, &rhs)
                    }
                    Err(e) => VerificationRow::error(&label, TheoremTag::RemarkP, e),
                });
            }
        }
    }
    rows
}

/// `q^{p(q-1)} <= p^{q(p-1)}` for all `1 <= q <= p <= max`.
pub fn remark_qp_rows(max: u64) -> Vec<VerificationRow> {
    let mut rows = Vec::new();
    for p in 1..=max {
        for q in 1..=p {
            let label = format!("p={p},q={q}");
            let lhs = factor(q).pow(p * (q - 1)).to_rat();
            let rhs = factor(p).pow(q * (p - 1)).to_rat();
            rows.push(match remark_qp_check(p, q) {
                Ok(holds) => {
                    let tight = fr_compare(&lhs, &rhs) == Ordering::Equal;
                    VerificationRow::judged(&label, TheoremTag::RemarkQp, &lhs, &rhs, holds, tight)
                }
                Err(e) => VerificationRow::error(&label, TheoremTag::RemarkQp, e),
            });
        }
    }
    rows
}

/// Collapses a sweep into a single row for corpus reports.
pub fn summarize_sweep(label: &str, tag: TheoremTag, rows: &[VerificationRow]) -> VerificationRow {
    let failures: Vec<&str> = rows
        .iter()
        .filter(|r| r.is_violation())
        .map(|r| r.label.as_str())
        .collect();
    let tight = rows.iter().filter(|r| r.tight).count();
    let mut row = VerificationRow::judged(
        label,
        tag,
        format!("{} cases", rows.len()),
        format!("{} hold", rows.len() - failures.len()),
        failures.is_empty(),
        false,
    )
    .with_note(format!("{tight} tight"));
    if !failures.is_empty() {
        row = row.with_note(format!("failing: {}", failures.join(" ")));
    }
    row
}
