//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Every check recomputes its quantity through an independent route (big
//! integer products of element orders, gcd enumeration for cyclic groups,
//! tuple enumeration for abelian groups) and also inspects the verifier's
//! own rows for the bundled corpus.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use rho_bounds::arith::{remark_p_check, remark_qp_check, rho_cyclic};
use rho_bounds::classify::{self, frobenius_structure, sylow_split};
use rho_bounds::group::{Group, GroupRecipe, Subgroup};
use rho_bounds::invariants::invariants_direct;
use rho_bounds::verify::{
    abelian_classes, check_abelian_distinguish, parse_corpus, run_corpus, CorpusEntry, RunOptions,
    TheoremTag, VerificationReport, VerificationRow, DEFAULT_CORPUS,
};

struct Outcome {
    id: u32,
    name: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(id: u32, name: &'static str) -> Self {
        Self {
            id,
            name,
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn product(orders: impl Iterator<Item = u64>) -> BigUint {
    orders.fold(BigUint::one(), |acc, o| acc * o)
}

fn rho_of(g: &Group) -> BigUint {
    product(g.element_orders())
}

fn rho_sub(s: &Subgroup<'_>) -> BigUint {
    product(s.members().iter().map(|&x| s.group().elem_order(x)))
}

/// Product of `n / gcd(i, n)` over `0 <= i < n`.
fn rho_cyclic_oracle(n: u64) -> BigUint {
    product((0..n).map(|i| n / i.gcd(&n)))
}

fn psi_cyclic_oracle(n: u64) -> u64 {
    (0..n).map(|i| n / i.gcd(&n)).sum()
}

fn least_prime(n: u64) -> u64 {
    (2..=n).find(|d| n % d == 0).unwrap()
}

fn prime_count(mut n: u64) -> usize {
    let mut count = 0;
    let mut d = 2;
    while n > 1 {
        if n % d == 0 {
            count += 1;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    count
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

struct Built {
    entry: CorpusEntry,
    group: Group,
}

fn corpus() -> Vec<Built> {
    parse_corpus(DEFAULT_CORPUS)
        .expect("bundled corpus parses")
        .into_iter()
        .map(|entry| {
            let group = Group::build(&entry.recipe).expect("bundled corpus builds");
            Built { entry, group }
        })
        .collect()
}

fn row<'r>(
    report: &'r VerificationReport,
    label: &str,
    tag: TheoremTag,
) -> Option<&'r VerificationRow> {
    report
        .rows
        .iter()
        .find(|r| r.label == label && r.tag == tag)
}

fn tag_clean(o: &mut Outcome, report: &VerificationReport, tag: TheoremTag) -> usize {
    let s = report.summary.0[&tag];
    o.check(s.violations == 0, || {
        format!("{tag}: {} violations in the report", s.violations)
    });
    o.check(s.applicable > 0, || format!("{tag}: no applicable rows"));
    s.applicable
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new(1, "closed form equals enumeration for C_n, n <= 512");
    let start = Instant::now();
    for n in 1..=512u64 {
        let g = Group::build(&GroupRecipe::Cyclic(n)).expect("cyclic group builds");
        let enumerated = invariants_direct(&g).rho;
        let closed = rho_cyclic(n);
        o.check(closed == enumerated, || {
            format!("n={n}: {closed} vs {enumerated}")
        });
        if n <= 128 {
            // the table's element orders against gcd enumeration, as integers
            o.check(closed.to_big() == rho_cyclic_oracle(n), || {
                format!("n={n}: gcd oracle")
            });
        }
    }
    let t = start.elapsed();
    o.check(t < Duration::from_secs(60), || format!("took {t:?}"));
    o.detail = format!("512 orders in {:.2}s", t.as_secs_f64());
    o
}

fn criterion_2(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(2, "rho(G) <= rho(C_n), strict unless cyclic");
    let mut checked = 0;
    for b in groups {
        let n = b.group.order() as u64;
        if n == 1 {
            continue;
        }
        let lhs = rho_of(&b.group);
        let rhs = rho_cyclic_oracle(n);
        let cyclic = b.group.element_orders().any(|x| x == n);
        let ok = if cyclic { lhs == rhs } else { lhs < rhs };
        o.check(ok, || format!("{}: oracle comparison", b.entry.label));
        checked += 1;
    }
    let applicable = tag_clean(&mut o, report, TheoremTag::GpGlobal);
    o.check(applicable == checked, || {
        format!("{applicable} rows for {checked} groups")
    });
    o.detail = format!(
        "{checked} groups, 0 violations expected, {} found",
        report.summary.0[&TheoremTag::GpGlobal].violations
    );
    o
}

/// `rho(G) * q^drop <= rho(C_n)` as integers.
fn scaled_at_most(g: &Group, drop: u64) -> bool {
    let n = g.order() as u64;
    let q = least_prime(n);
    rho_of(g) * big(q).pow(drop as u32) <= rho_cyclic_oracle(n)
}

fn criterion_3(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(3, "main theorem bound on its hypothesis class, V4 tight");
    let mut hyp = 0;
    for b in groups {
        let g = &b.group;
        let n = g.order() as u64;
        if n == 1 || classify::is_cyclic(g) || !classify::is_supersoluble(g) {
            continue;
        }
        if !classify::is_nilpotent(g) && classify::is_metacyclic(g) {
            continue;
        }
        hyp += 1;
        let q = least_prime(n);
        o.check(scaled_at_most(g, (n / q) * (q - 1)), || {
            format!("{}: oracle bound", b.entry.label)
        });
        let r = row(report, &b.entry.label, TheoremTag::MainThm);
        o.check(r.is_some_and(|r| r.applicable), || {
            format!("{}: row not applicable", b.entry.label)
        });
    }
    let applicable = tag_clean(&mut o, report, TheoremTag::MainThm);
    o.check(applicable == hyp, || {
        format!("{applicable} applicable rows vs {hyp} hypothesis groups")
    });
    let v4 = row(report, "Ab(2,2)", TheoremTag::MainThm);
    o.check(
        v4.is_some_and(|r| r.tight && r.lhs == "2^3" && r.rhs == "2^3"),
        || format!("V4 row {v4:?}"),
    );
    let tight = report.summary.0[&TheoremTag::MainThm].tight;
    o.detail = format!("{hyp} groups in the class, V4: 8 = 8, {tight} tight rows");
    o
}

fn criterion_4(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(4, "Sylow tower bound q^-q rho(C_n), S3 reads 72 <= 162");
    let mut hyp = 0;
    for b in groups {
        let g = &b.group;
        if g.order() == 1 || classify::is_cyclic(g) || !classify::has_sylow_tower(g) {
            continue;
        }
        hyp += 1;
        let q = least_prime(g.order() as u64);
        o.check(scaled_at_most(g, q), || {
            format!("{}: oracle bound", b.entry.label)
        });
    }
    let applicable = tag_clean(&mut o, report, TheoremTag::CorB);
    o.check(applicable == hyp, || {
        format!("{applicable} rows vs {hyp} groups")
    });
    let s3 = Group::build(&GroupRecipe::Symmetric(3)).unwrap();
    o.check(rho_of(&s3) == big(72), || "rho(S3) != 72".into());
    o.check(rho_cyclic_oracle(6) / big(4) == big(162), || {
        "q^-q rho(C_6) != 162".into()
    });
    let r = row(report, "S(3)", TheoremTag::CorB);
    o.check(
        r.is_some_and(|r| {
            r.holds == Some(true) && !r.tight && r.lhs == "2^3 * 3^2" && r.rhs == "2^1 * 3^4"
        }),
        || format!("S3 row {r:?}"),
    );
    o.detail = format!("{hyp} groups, S3: 72 <= 162 not tight");
    o
}

fn criterion_5(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(5, "two-prime orders satisfy the q^-q bound");
    let mut hyp = 0;
    for b in groups {
        let g = &b.group;
        let n = g.order() as u64;
        if n == 1 || classify::is_cyclic(g) || prime_count(n) != 2 {
            continue;
        }
        hyp += 1;
        o.check(scaled_at_most(g, least_prime(n)), || {
            format!("{}: oracle bound", b.entry.label)
        });
    }
    let applicable = tag_clean(&mut o, report, TheoremTag::ThmPq);
    o.check(applicable == hyp, || {
        format!("{applicable} rows vs {hyp} groups")
    });
    o.detail = format!("{hyp} groups");
    o
}

fn criterion_6(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(6, "Frobenius formula and bound, Frob(7,3)");
    let mut count = 0;
    for b in groups {
        let g = &b.group;
        let Some(fs) = frobenius_structure(g).expect("no engine error") else {
            continue;
        };
        count += 1;
        let formula = rho_sub(&fs.kernel) * rho_sub(&fs.complement).pow(fs.kernel.order() as u32);
        o.check(formula == rho_of(g), || {
            format!("{}: formula", b.entry.label)
        });
        o.check(scaled_at_most(g, least_prime(g.order() as u64)), || {
            format!("{}: bound", b.entry.label)
        });
    }
    let a = tag_clean(&mut o, report, TheoremTag::FrobFormula);
    let b = tag_clean(&mut o, report, TheoremTag::FrobBound);
    o.check(a == count && b == count, || {
        format!("rows {a}/{b} vs {count} Frobenius groups")
    });
    let f = Group::build(&GroupRecipe::FrobAffine { p: 7, d: 3 }).unwrap();
    o.check(rho_of(&f) == big(7).pow(6) * big(3).pow(14), || {
        "rho(Frob(7,3))".into()
    });
    let r = row(report, "Frob(7,3)", TheoremTag::FrobBound);
    o.check(
        r.is_some_and(|r| r.holds == Some(true) && r.lhs == "3^14 * 7^6" && r.rhs == "3^11 * 7^18"),
        || format!("Frob(7,3) row {r:?}"),
    );
    o.detail = format!("{count} Frobenius groups, Frob(7,3): 7^6 3^14 <= 3^11 7^18");
    o
}

fn criterion_7(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(7, "cyclic Sylow lemma: formula and divisibility");
    let (mut splits, mut equalities) = (0, 0);
    for b in groups {
        let g = &b.group;
        let n = g.order() as u64;
        if n == 1 {
            continue;
        }
        for p in (2..=n).filter(|&p| n % p == 0 && is_prime(p)) {
            let Some(s) = sylow_split(g, p).expect("no engine error") else {
                continue;
            };
            if !s.sylow.is_cyclic() {
                continue;
            }
            splits += 1;
            let (rp, rf, rg) = (rho_sub(&s.sylow), rho_sub(&s.complement), rho_of(g));
            let (ps, fs, zs) = (
                s.sylow.order() as u32,
                s.complement.order() as u32,
                s.centralizer_in_complement.order() as u32,
            );
            o.check(rp.pow(zs) * rf.pow(ps) == rg, || {
                format!("{} p={p}: formula (i)", b.entry.label)
            });
            let ceiling = rp.pow(fs) * rf.pow(ps);
            o.check((&ceiling % &rg).is_zero(), || {
                format!("{} p={p}: divisibility", b.entry.label)
            });
            o.check((ceiling == rg) == (zs == fs), || {
                format!("{} p={p}: equality iff Z = F", b.entry.label)
            });
            equalities += usize::from(zs == fs);
        }
    }
    let a = tag_clean(&mut o, report, TheoremTag::SylowFormula);
    let b2 = tag_clean(&mut o, report, TheoremTag::SylowDivisibility);
    o.check(a == splits && b2 == splits, || {
        format!("rows {a}/{b2} vs {splits} splits")
    });
    for r in report
        .rows
        .iter()
        .filter(|r| r.tag == TheoremTag::SylowDivisibility && r.applicable)
    {
        o.check(r.tight == r.notes.starts_with("equal"), || {
            format!("{}: tight flag", r.label)
        });
    }
    let dic3 = Group::build(&GroupRecipe::Dicyclic(3)).unwrap();
    o.check(rho_of(&dic3) == big(2).pow(15) * big(81), || {
        "rho(Dic(3))".into()
    });
    let r = row(report, "Dic(3)", TheoremTag::SylowFormula);
    o.check(r.is_some_and(|r| r.tight && r.lhs == "2^15 * 3^4"), || {
        format!("Dic(3) row {r:?}")
    });
    o.detail = format!("{splits} cyclic splits, {equalities} with Z = F, Dic(3) = 2^15 3^4");
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new(8, "remark sweeps p <= 97, alpha <= 8 and q <= p <= 100");
    let start = Instant::now();
    let mut cases = 0;
    for p in (2..=97).filter(|&p| is_prime(p)) {
        for alpha in 1..=8 {
            o.check(remark_p_check(p, alpha, false) == Ok(true), || {
                format!("weak p={p} alpha={alpha}")
            });
            cases += 1;
            if p > 2 && alpha >= 2 {
                o.check(remark_p_check(p, alpha, true) == Ok(true), || {
                    format!("strong p={p} alpha={alpha}")
                });
                cases += 1;
            }
        }
    }
    for p in 1..=100 {
        for q in 1..=p {
            o.check(remark_qp_check(p, q) == Ok(true), || format!("p={p} q={q}"));
            cases += 1;
        }
    }
    let t = start.elapsed();
    o.check(t < Duration::from_secs(5), || format!("took {t:?}"));

    // oracles: direct expansion where feasible, logarithms for the other remark
    for p in [2u64, 3, 5, 7] {
        for alpha in 1..=4u32 {
            let pa = p.pow(alpha);
            if pa > 400 {
                continue;
            }
            let lhs = big(p).pow((alpha - 1) * pa as u32);
            let rho = rho_cyclic_oracle(pa);
            o.check(&lhs * p <= rho, || {
                format!("weak oracle p={p} alpha={alpha}")
            });
            if p > 2 && alpha >= 2 {
                o.check(lhs * big(p).pow(p as u32) <= rho_cyclic_oracle(pa), || {
                    format!("strong oracle p={p}")
                });
            }
        }
    }
    let f = |x: f64| (x - 1.0) / x * x.ln();
    for p in 2..=100u64 {
        for q in 1..p {
            o.check(f(q as f64) < f(p as f64), || {
                format!("log oracle p={p} q={q}")
            });
        }
    }
    o.detail = format!("{cases} cases in {:.3}s", t.as_secs_f64());
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new(9, "rho(S4) = rho(C2 x D12) with different structure");
    let s4 = Group::build(&GroupRecipe::Symmetric(4)).unwrap();
    let x = Group::build(&GroupRecipe::direct(
        GroupRecipe::Cyclic(2),
        GroupRecipe::Dihedral(6),
    ))
    .unwrap();
    let expected = big(2).pow(21) * big(3).pow(8);
    o.check(rho_of(&s4) == expected && rho_of(&x) == expected, || {
        "values differ from 2^21 3^8".into()
    });
    o.check(
        invariants_direct(&s4).rho.to_string() == "2^21 * 3^8",
        || "factored text".into(),
    );
    o.check(
        !classify::is_nilpotent(&s4) && !classify::is_supersoluble(&s4),
        || "S4 flags".into(),
    );
    o.check(classify::is_supersoluble(&x), || {
        "C2 x D12 should be supersoluble".into()
    });
    let entries = parse_corpus("s4: S(4)\nc2xd12: Direct(C(2), D(6))").unwrap();
    let tags = TheoremTag::ALL
        .into_iter()
        .filter(|&t| t != TheoremTag::AbelianDistinguish && !t.is_numeric())
        .collect();
    let report = run_corpus(
        &entries,
        &RunOptions {
            tags,
            collision_scan: true,
            ..RunOptions::default()
        },
    );
    let c = report.collisions.unwrap_or_default();
    o.check(
        c.len() == 1
            && c[0].rho == "2^21 * 3^8"
            && c[0].differing.iter().any(|f| f == "supersoluble"),
        || format!("collision scan {c:?}"),
    );
    o.detail = "both 2^21 * 3^8; S4 not supersoluble, C2 x D12 supersoluble".into();
    o
}

/// Product of element orders of `Z_{d_1} x ... x Z_{d_k}` by walking every tuple.
fn rho_abelian_oracle(factors: &[u64]) -> BigUint {
    let n: u64 = factors.iter().product();
    let mut acc = BigUint::one();
    for mut idx in 0..n {
        let mut order = 1u64;
        for &d in factors {
            let x = idx % d;
            idx /= d;
            order = order.lcm(&(d / x.gcd(&d)));
        }
        acc *= order;
    }
    acc
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new(10, "rho separates abelian groups of each order n <= 128");
    let start = Instant::now();
    let rows = check_abelian_distinguish(128, &Default::default()).expect("within the cap");
    let t = start.elapsed();
    o.check(rows.len() == 128, || format!("{} rows", rows.len()));
    for r in &rows {
        o.check(r.holds == Some(true), || {
            format!("{}: {}", r.label, r.notes)
        });
    }
    o.check(
        rows[7].notes == "C(8)=2^17; Ab(2,4)=2^11; Ab(2,2,2)=2^7",
        || format!("order 8: {}", rows[7].notes),
    );
    let mut total = 0;
    for n in 1..=128u64 {
        let mut seen = HashSet::new();
        let classes = abelian_classes(n);
        for c in &classes {
            let v = rho_abelian_oracle(c);
            let recipe = if c.len() <= 1 {
                GroupRecipe::Cyclic(n)
            } else {
                GroupRecipe::Abelian(c.clone())
            };
            let engine = invariants_direct(&Group::build(&recipe).unwrap())
                .rho
                .to_big();
            o.check(engine == v, || {
                format!("n={n} {c:?}: engine vs tuple oracle")
            });
            seen.insert(v);
        }
        o.check(seen.len() == classes.len(), || {
            format!("n={n}: oracle collision")
        });
        total += classes.len();
    }
    o.check(t < Duration::from_secs(120), || format!("took {t:?}"));
    o.detail = format!("{total} classes, verifier time {:.2}s", t.as_secs_f64());
    o
}

fn criterion_11(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(11, "11 psi(G) <= 7 psi(C_n) for non-cyclic groups");
    let mut count = 0;
    for b in groups {
        let g = &b.group;
        if classify::is_cyclic(g) {
            continue;
        }
        count += 1;
        let psi: u64 = g.element_orders().sum();
        o.check(11 * psi <= 7 * psi_cyclic_oracle(g.order() as u64), || {
            b.entry.label.clone()
        });
    }
    let applicable = tag_clean(&mut o, report, TheoremTag::Psi711);
    o.check(applicable == count, || {
        format!("{applicable} rows vs {count} groups")
    });
    o.detail = format!("{count} groups");
    o
}

fn criterion_12(groups: &[Built], report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(12, "Frobenius x cyclic closed form");
    // (label, |N|, |H|, c)
    let cases = [
        ("Direct(S(3),C(5))", 3u64, 2u64, 5u64),
        ("Direct(Frob(7,3),C(2))", 7, 3, 2),
        ("Direct(Frob(5,4),C(3))", 5, 4, 3),
    ];
    for (label, kernel, h, c) in cases {
        let b = groups.iter().find(|b| b.entry.label == label);
        o.check(b.is_some(), || format!("{label} missing from corpus"));
        let Some(b) = b else { continue };
        let n = kernel * h * c;
        let closed = rho_cyclic_oracle(n) / rho_cyclic_oracle(kernel).pow((c * (h - 1)) as u32);
        o.check(closed == rho_of(&b.group), || {
            format!("{label}: closed form")
        });
        let r = row(report, label, TheoremTag::ExampleFxc);
        o.check(r.is_some_and(|r| r.applicable && r.tight), || {
            format!("{label}: row {r:?}")
        });
    }
    tag_clean(&mut o, report, TheoremTag::ExampleFxc);
    o.detail = format!(
        "{} rows in the corpus, 3 named cases",
        report.summary.0[&TheoremTag::ExampleFxc].applicable
    );
    o
}

fn criterion_13(first: &VerificationReport) -> Outcome {
    let mut o = Outcome::new(13, "repeated runs give byte-identical JSON");
    let entries = parse_corpus(DEFAULT_CORPUS).unwrap();
    let again = run_corpus(&entries, &RunOptions::default()).to_json();
    let single = run_corpus(
        &entries,
        &RunOptions {
            jobs: Some(1),
            ..RunOptions::default()
        },
    )
    .to_json();
    let a = first.to_json();
    o.check(a == again, || "second run differs".into());
    o.check(a == single, || "single-threaded run differs".into());
    o.check(!a.contains("timestamp"), || "timestamp present".into());
    o.detail = format!("{} bytes", a.len());
    o
}

fn main() {
    let start = Instant::now();
    let entries = parse_corpus(DEFAULT_CORPUS).expect("bundled corpus parses");
    let report = run_corpus(&entries, &RunOptions::default());
    let groups = corpus();

    let outcomes = vec![
        criterion_1(),
        criterion_2(&groups, &report),
        criterion_3(&groups, &report),
        criterion_4(&groups, &report),
        criterion_5(&groups, &report),
        criterion_6(&groups, &report),
        criterion_7(&groups, &report),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(&groups, &report),
        criterion_12(&groups, &report),
        criterion_13(&report),
    ];

    println!("acceptance over {} corpus groups", groups.len());
    for o in &outcomes {
        let verdict = if o.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}  {}: {}", o.id, o.name, o.detail);
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!(
        "{} of {} criteria pass ({:.1}s)",
        outcomes.len() - failed,
        outcomes.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
