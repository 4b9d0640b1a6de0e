//! S4 and C2 x D12 share their product of element orders while differing in
//! structure; the collision scan finds the pair in a corpus.

use rho_bounds::verify::{parse_corpus, run_corpus, RunOptions, TheoremTag};

fn main() {
    let entries = parse_corpus(
        "s4: S(4)\nc2xd12: Direct(C(2), D(6))\nc24: C(24)\nsl23: Direct(Dic(3), C(2))\n",
    )
    .unwrap();
    let opts = RunOptions {
        tags: vec![TheoremTag::GpGlobal, TheoremTag::CorB],
        collision_scan: true,
        ..RunOptions::default()
    };
    let report = run_corpus(&entries, &opts);
    for c in report.collisions.as_deref().unwrap_or_default() {
        println!(
            "order {}: {} and {} both give {}; differ in {:?}",
            c.order, c.first, c.second, c.rho, c.differing
        );
    }
    print!("{}", report.to_text());
}
