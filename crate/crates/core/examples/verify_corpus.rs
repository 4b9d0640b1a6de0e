//! Runs every check over the bundled corpus (or a corpus file given as the
//! first argument) and prints the per-tag summary.

use rho_bounds::verify::{parse_corpus, run_corpus, RunOptions, DEFAULT_CORPUS};

fn main() {
    let source = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable corpus"),
        None => DEFAULT_CORPUS.to_string(),
    };
    let entries = match parse_corpus(&source) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = run_corpus(&entries, &RunOptions::default());
    println!(
        "{} groups, {} rows, corpus {}",
        entries.len(),
        report.rows.len(),
        &report.corpus_hash[..12]
    );
    println!(
        "{:<22} {:>10} {:>6} {:>10} {:>6}",
        "tag", "applicable", "holds", "violations", "tight"
    );
    for (tag, s) in &report.summary.0 {
        println!(
            "{:<22} {:>10} {:>6} {:>10} {:>6}",
            tag.as_str(),
            s.applicable,
            s.holds,
            s.violations,
            s.tight
        );
    }
    for r in report.rows.iter().filter(|r| r.is_violation()) {
        println!("FAIL {} {} {}", r.label, r.tag, r.notes);
    }
    std::process::exit(report.exit_code());
}
