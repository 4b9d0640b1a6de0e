//! Corpus runs, per-tag summaries, and the JSON and CSV emitters.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::classify;
use crate::group::{BuildOptions, Group};
use crate::invariants::invariants_direct;

use super::corpus::{render_corpus, CorpusEntry};
use super::remarks::{remark_p_rows, remark_qp_rows, summarize_sweep};
use super::theorems::{check_group, TheoremTag, VerificationRow};

pub const TOOL_VERSION: &str = concat!("rho-bounds ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub tags: Vec<TheoremTag>,
    pub build: BuildOptions,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub collision_scan: bool,
    pub remark_p_max: u64,
    pub remark_alpha_max: u64,
    pub remark_qp_max: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            tags: TheoremTag::ALL.to_vec(),
            build: BuildOptions::default(),
            jobs: None,
            collision_scan: false,
            remark_p_max: 97,
            remark_alpha_max: 8,
            remark_qp_max: 100,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TagSummary {
    pub rows: usize,
    pub applicable: usize,
    pub holds: usize,
    pub violations: usize,
    pub tight: usize,
}

/// Per-tag counts, serialised as an object in tag order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary(pub BTreeMap<TheoremTag, TagSummary>);

impl Summary {
    pub fn of(rows: &[VerificationRow], tags: &[TheoremTag]) -> Self {
        let mut map: BTreeMap<TheoremTag, TagSummary> =
            tags.iter().map(|&t| (t, TagSummary::default())).collect();
        for r in rows {
            let s = map.entry(r.tag).or_default();
            s.rows += 1;
            if r.applicable {
                s.applicable += 1;
                match r.holds {
                    Some(true) => s.holds += 1,
                    _ => s.violations += 1,
                }
            }
            if r.tight {
                s.tight += 1;
            }
        }
        Summary(map)
    }

    pub fn violations(&self) -> usize {
        self.0.values().map(|s| s.violations).sum()
    }
}

impl Serialize for Summary {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (tag, counts) in &self.0 {
            m.serialize_entry(tag.as_str(), counts)?;
        }
        m.end()
    }
}

/// Two corpus groups of the same order with the same product of element orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub order: u64,
    pub rho: String,
    pub first: String,
    pub second: String,
    /// Structural flags on which the two groups disagree.
    pub differing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub corpus_hash: String,
    pub rows: Vec<VerificationRow>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collisions: Option<Vec<Collision>>,
}

impl VerificationReport {
    pub fn from_rows(rows: Vec<VerificationRow>, tags: &[TheoremTag], corpus_hash: String) -> Self {
        let summary = Summary::of(&rows, tags);
        Self {
            tool_version: TOOL_VERSION.to_string(),
            corpus_hash,
            rows,
            summary,
            collisions: None,
        }
    }

    pub fn has_violations(&self) -> bool {
        self.summary.violations() > 0
    }

    /// 1 if any applicable row fails, else 0.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_violations())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.rows)
    }

    /// One line per row followed by the per-tag counts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let verdict = match r.holds {
                None => "n/a ",
                Some(true) if r.tight => "TIGHT",
                Some(true) => "ok  ",
                Some(false) => "FAIL",
            };
            out.push_str(&format!("{verdict} {:<20} {}", r.tag.as_str(), r.label));
            if r.applicable {
                out.push_str(&format!("  {} <= {}", r.lhs, r.rhs));
            }
            if !r.notes.is_empty() {
                out.push_str(&format!("  [{}]", r.notes));
            }
            out.push('\n');
        }
        for (tag, s) in &self.summary.0 {
            out.push_str(&format!(
                "{:<20} applicable={} holds={} violations={} tight={}\n",
                tag.as_str(),
                s.applicable,
                s.holds,
                s.violations,
                s.tight
            ));
        }
        out
    }
}

pub const CSV_HEADER: [&str; 8] = [
    "label",
    "tag",
    "applicable",
    "holds",
    "tight",
    "lhs",
    "rhs",
    "notes",
];

pub fn rows_to_csv(rows: &[VerificationRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        let holds = match r.holds {
            None => "N/A",
            Some(true) => "true",
            Some(false) => "false",
        };
        w.write_record([
            r.label.as_str(),
            r.tag.as_str(),
            if r.applicable { "true" } else { "false" },
            holds,
            if r.tight { "true" } else { "false" },
            &r.lhs,
            &r.rhs,
            &r.notes,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

/// SHA-256 of the canonical `label: recipe` rendering, so comments and
/// whitespace do not change the hash.
pub fn corpus_hash(entries: &[CorpusEntry]) -> String {
    hex::encode(Sha256::digest(render_corpus(entries).as_bytes()))
}

/// What the collision scan needs from one group.
struct Scan {
    order: u64,
    rho: String,
    flags: Vec<(&'static str, bool)>,
}

struct GroupOutcome {
    rows: Vec<VerificationRow>,
    scan: Option<Scan>,
}

fn structural_flags(g: &Group) -> Vec<(&'static str, bool)> {
    vec![
        ("cyclic", classify::is_cyclic(g)),
        ("abelian", classify::is_abelian(g)),
        ("nilpotent", classify::is_nilpotent(g)),
        ("supersoluble", classify::is_supersoluble(g)),
        ("sylow_tower", classify::has_sylow_tower(g)),
        ("metacyclic_paper", classify::is_metacyclic(g)),
    ]
}

fn run_entry(entry: &CorpusEntry, group_tags: &[TheoremTag], opts: &RunOptions) -> GroupOutcome {
    match Group::build_with(&entry.recipe, &opts.build) {
        Ok(g) => {
            let rows = check_group(
                &entry.label,
                &g,
                Some(&entry.recipe),
                group_tags,
                &opts.build,
            );
            let scan = opts.collision_scan.then(|| Scan {
                order: g.order() as u64,
                rho: invariants_direct(&g).rho.to_string(),
                flags: structural_flags(&g),
            });
            GroupOutcome { rows, scan }
        }
        Err(e) => GroupOutcome {
            rows: group_tags
                .iter()
                .map(|&t| VerificationRow::error(&entry.label, t, &e))
                .collect(),
            scan: None,
        },
    }
}

fn find_collisions(entries: &[CorpusEntry], outcomes: &[GroupOutcome]) -> Vec<Collision> {
    let mut by_value: BTreeMap<(u64, &str), Vec<usize>> = BTreeMap::new();
    for (i, o) in outcomes.iter().enumerate() {
        if let Some(scan) = &o.scan {
            by_value
                .entry((scan.order, scan.rho.as_str()))
                .or_default()
                .push(i);
        }
    }
    let mut out = Vec::new();
    for ((order, rho), members) in by_value {
        let first = members[0];
        for &other in &members[1..] {
            let flags_a = &outcomes[first].scan.as_ref().expect("scanned").flags;
            let flags_b = &outcomes[other].scan.as_ref().expect("scanned").flags;
            let differing = flags_a
                .iter()
                .zip(flags_b)
                .filter(|(a, b)| a.1 != b.1)
                .map(|(a, _)| a.0.to_string())
                .collect();
            out.push(Collision {
                order,
                rho: rho.to_string(),
                first: entries[first].label.clone(),
                second: entries[other].label.clone(),
                differing,
            });
        }
    }
    out.sort_by(|a, b| (a.order, &a.first, &a.second).cmp(&(b.order, &b.first, &b.second)));
    out
}

/// Rows in corpus order, tags in fixed order within each group, then one
/// summary row per requested remark sweep.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> VerificationReport {
    let mut tags = opts.tags.clone();
    tags.sort_unstable();
    tags.dedup();
    let group_tags: Vec<TheoremTag> = tags.iter().copied().filter(|t| !t.is_numeric()).collect();

    let work = || -> Vec<GroupOutcome> {
        entries
            .par_iter()
            .map(|e| run_entry(e, &group_tags, opts))
            .collect()
    };
    let outcomes = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let collisions = opts
        .collision_scan
        .then(|| find_collisions(entries, &outcomes));
    let mut rows: Vec<VerificationRow> = outcomes.into_iter().flat_map(|o| o.rows).collect();
    if tags.contains(&TheoremTag::RemarkP) {
        let label = format!(
            "sweep p<={} alpha<={}",
            opts.remark_p_max, opts.remark_alpha_max
        );
        let sweep = remark_p_rows(opts.remark_p_max, opts.remark_alpha_max);
        rows.push(summarize_sweep(&label, TheoremTag::RemarkP, &sweep));
    }
    if tags.contains(&TheoremTag::RemarkQp) {
        let label = format!("sweep q<=p<={}", opts.remark_qp_max);
        let sweep = remark_qp_rows(opts.remark_qp_max);
        rows.push(summarize_sweep(&label, TheoremTag::RemarkQp, &sweep));
    }
    let mut report = VerificationReport::from_rows(rows, &tags, corpus_hash(entries));
    report.collisions = collisions;
    report
}
