//! One verdict procedure per bound or formula, evaluated on a single group.

use std::cell::OnceCell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::arith::{
    bound_main, bound_qq, factor, fr_compare, rho_cyclic, FactoredNat, FactoredRat,
};
use crate::classify::{self, ClassifyError, FrobeniusStructure, SylowSplit};
use crate::group::{BuildOptions, Group, GroupRecipe};
use crate::invariants::{
    check_split_divisibility, invariants_direct, invariants_of_subgroup, psi_cyclic, rho_frobenius,
    rho_frobenius_times_cyclic, rho_semidirect_cyclic_sylow, split_ceiling, InvariantRecord,
};

use super::abelian::{abelian_classes, class_recipe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremTag {
    GpGlobal,
    MainThm,
    CorB,
    ThmPq,
    FrobFormula,
    FrobBound,
    SylowFormula,
    SylowDivisibility,
    SylowBound,
    PropNoncyclicSylow,
    PropNilpotent,
    ExampleFxc,
    AbelianDistinguish,
    Psi711,
    RemarkP,
    RemarkQp,
}

impl TheoremTag {
    /// Every tag in report order.
    pub const ALL: [TheoremTag; 16] = [
        TheoremTag::GpGlobal,
        TheoremTag::MainThm,
        TheoremTag::CorB,
        TheoremTag::ThmPq,
        TheoremTag::FrobFormula,
        TheoremTag::FrobBound,
        TheoremTag::SylowFormula,
        TheoremTag::SylowDivisibility,
        TheoremTag::SylowBound,
        TheoremTag::PropNoncyclicSylow,
        TheoremTag::PropNilpotent,
        TheoremTag::ExampleFxc,
        TheoremTag::AbelianDistinguish,
        TheoremTag::Psi711,
        TheoremTag::RemarkP,
        TheoremTag::RemarkQp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::GpGlobal => "GP_GLOBAL",
            TheoremTag::MainThm => "MAIN_THM",
            TheoremTag::CorB => "COR_B",
            TheoremTag::ThmPq => "THM_PQ",
            TheoremTag::FrobFormula => "FROB_FORMULA",
            TheoremTag::FrobBound => "FROB_BOUND",
            TheoremTag::SylowFormula => "MERCEDE_I",
            TheoremTag::SylowDivisibility => "MERCEDE_II",
            TheoremTag::SylowBound => "COR_MERCEDE",
            TheoremTag::PropNoncyclicSylow => "PROP_NONCYCLIC_SYLOW",
            TheoremTag::PropNilpotent => "PROP_NILPOTENT",
            TheoremTag::ExampleFxc => "EXAMPLE_FXC",
            TheoremTag::AbelianDistinguish => "ABELIAN_DISTINGUISH",
            TheoremTag::Psi711 => "PSI_7_11",
            TheoremTag::RemarkP => "REMARK_P",
            TheoremTag::RemarkQp => "REMARK_QP",
        }
    }

    /// Remark tags range over numbers rather than groups.
    pub fn is_numeric(self) -> bool {
        matches!(self, TheoremTag::RemarkP | TheoremTag::RemarkQp)
    }

    /// Parses a comma-separated list; `all` selects every tag.
    pub fn parse_list(text: &str) -> Result<Vec<TheoremTag>, UnknownTag> {
        let mut tags = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                tags.extend(TheoremTag::ALL);
            } else {
                tags.push(part.parse()?);
            }
        }
        tags.sort_unstable();
        tags.dedup();
        Ok(tags)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem tag {0:?}")]
pub struct UnknownTag(pub String);

impl FromStr for TheoremTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One verdict. `holds` is `None` exactly when the row is not applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub label: String,
    pub tag: TheoremTag,
    pub applicable: bool,
    pub holds: Option<bool>,
    pub tight: bool,
    pub lhs: String,
    pub rhs: String,
    pub notes: String,
}

impl VerificationRow {
    pub fn not_applicable(label: &str, tag: TheoremTag, notes: impl Into<String>) -> Self {
        Self {
            label: label.to_string(),
            tag,
            applicable: false,
            holds: None,
            tight: false,
            lhs: String::new(),
            rhs: String::new(),
            notes: notes.into(),
        }
    }

    /// Applicable row that failed to evaluate; counted as a violation.
    pub fn error(label: &str, tag: TheoremTag, err: impl fmt::Display) -> Self {
        Self {
            applicable: true,
            holds: Some(false),
            notes: format!("error: {err}"),
            ..Self::not_applicable(label, tag, "")
        }
    }

    /// `lhs <= rhs`, tight on equality.
    pub fn at_most(label: &str, tag: TheoremTag, lhs: &FactoredRat, rhs: &FactoredRat) -> Self {
        let cmp = fr_compare(lhs, rhs);
        Self::judged(
            label,
            tag,
            lhs,
            rhs,
            cmp != Ordering::Greater,
            cmp == Ordering::Equal,
        )
    }

    /// `lhs == rhs`; every passing equality row is tight.
    pub fn equal(label: &str, tag: TheoremTag, lhs: &FactoredRat, rhs: &FactoredRat) -> Self {
        let eq = lhs == rhs;
        Self::judged(label, tag, lhs, rhs, eq, eq)
    }

    pub fn judged(
        label: &str,
        tag: TheoremTag,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
        holds: bool,
        tight: bool,
    ) -> Self {
        Self {
            label: label.to_string(),
            tag,
            applicable: true,
            holds: Some(holds),
            tight: tight && holds,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            notes: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl AsRef<str>) -> Self {
        let note = note.as_ref();
        if !note.is_empty() {
            if !self.notes.is_empty() {
                self.notes.push_str("; ");
            }
            self.notes.push_str(note);
        }
        self
    }

    /// Applicable and not holding.
    pub fn is_violation(&self) -> bool {
        self.applicable && self.holds == Some(false)
    }
}

type FrobeniusResult<'g> = Result<Option<FrobeniusStructure<'g>>, ClassifyError>;
type SplitResult<'g> = Result<Option<SylowSplit<'g>>, ClassifyError>;

/// Lazily computed facts about one group, shared by all tags.
struct Profile<'g> {
    label: &'g str,
    g: &'g Group,
    recipe: Option<&'g GroupRecipe>,
    build: &'g BuildOptions,
    n: u64,
    q: u64,
    primes: Vec<u64>,
    record: InvariantRecord,
    rho: FactoredRat,
    cyclic: bool,
    abelian: OnceCell<bool>,
    nilpotent: OnceCell<bool>,
    supersoluble: OnceCell<bool>,
    tower: OnceCell<bool>,
    metacyclic: OnceCell<bool>,
    frobenius: OnceCell<FrobeniusResult<'g>>,
    splits: OnceCell<Vec<(u64, SplitResult<'g>)>>,
}

impl<'g> Profile<'g> {
    fn abelian(&self) -> bool {
        *self.abelian.get_or_init(|| classify::is_abelian(self.g))
    }
    fn nilpotent(&self) -> bool {
        *self
            .nilpotent
            .get_or_init(|| classify::is_nilpotent(self.g))
    }
    fn supersoluble(&self) -> bool {
        *self
            .supersoluble
            .get_or_init(|| classify::is_supersoluble(self.g))
    }
    fn tower(&self) -> bool {
        *self.tower.get_or_init(|| classify::has_sylow_tower(self.g))
    }
    fn metacyclic(&self) -> bool {
        *self
            .metacyclic
            .get_or_init(|| classify::is_metacyclic(self.g))
    }
    fn frobenius(&self) -> &FrobeniusResult<'g> {
        self.frobenius
            .get_or_init(|| classify::frobenius_structure(self.g))
    }
    fn splits(&self) -> &[(u64, SplitResult<'g>)] {
        self.splits.get_or_init(|| {
            self.primes
                .iter()
                .map(|&p| (p, classify::sylow_split(self.g, p)))
                .collect()
        })
    }

    fn bound_qq(&self) -> FactoredRat {
        bound_qq(self.n, self.q)
    }
}

fn rat(x: &FactoredNat) -> FactoredRat {
    x.to_rat()
}

/// Evaluates `tags` on one group. Numeric tags are skipped; a trivial group
/// yields one non-applicable row per tag.
pub fn check_group(
    label: &str,
    g: &Group,
    recipe: Option<&GroupRecipe>,
    tags: &[TheoremTag],
    build: &BuildOptions,
) -> Vec<VerificationRow> {
    let n = g.order() as u64;
    let tags: Vec<TheoremTag> = {
        let mut t: Vec<_> = tags.iter().copied().filter(|t| !t.is_numeric()).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    if n == 1 {
        return tags
            .into_iter()
            .map(|t| VerificationRow::not_applicable(label, t, "trivial group"))
            .collect();
    }
    let record = invariants_direct(g);
    let prof = Profile {
        label,
        g,
        recipe,
        build,
        n,
        q: record.q_min.expect("n > 1"),
        primes: factor(n).primes().collect(),
        rho: rat(&record.rho),
        record,
        cyclic: classify::is_cyclic(g),
        abelian: OnceCell::new(),
        nilpotent: OnceCell::new(),
        supersoluble: OnceCell::new(),
        tower: OnceCell::new(),
        metacyclic: OnceCell::new(),
        frobenius: OnceCell::new(),
        splits: OnceCell::new(),
    };
    let mut rows = Vec::new();
    for tag in tags {
        match tag {
            TheoremTag::GpGlobal => rows.push(gp_global(&prof)),
            TheoremTag::MainThm => rows.push(main_thm(&prof)),
            TheoremTag::CorB => rows.push(cor_b(&prof)),
            TheoremTag::ThmPq => rows.push(thm_pq(&prof)),
            TheoremTag::FrobFormula | TheoremTag::FrobBound => rows.push(frobenius_row(&prof, tag)),
            TheoremTag::SylowFormula
            | TheoremTag::SylowDivisibility
            | TheoremTag::SylowBound
            | TheoremTag::PropNoncyclicSylow => rows.extend(split_rows(&prof, tag)),
            TheoremTag::PropNilpotent => rows.push(prop_nilpotent(&prof)),
            TheoremTag::ExampleFxc => rows.push(example_fxc(&prof)),
            TheoremTag::AbelianDistinguish => rows.push(abelian_distinguish(&prof)),
            TheoremTag::Psi711 => rows.push(psi_7_11(&prof)),
            TheoremTag::RemarkP | TheoremTag::RemarkQp => unreachable!("filtered above"),
        }
    }
    rows
}

fn gp_global(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::GpGlobal;
    let rhs = rat(&rho_cyclic(p.n));
    let cmp = fr_compare(&p.rho, &rhs);
    // equality characterises the cyclic groups
    let holds = cmp != Ordering::Greater && ((cmp == Ordering::Equal) == p.cyclic);
    VerificationRow::judged(p.label, tag, &p.rho, &rhs, holds, cmp == Ordering::Equal).with_note(
        if p.cyclic {
            "cyclic: equality expected"
        } else {
            "non-cyclic: strict expected"
        },
    )
}

fn main_thm(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::MainThm;
    if p.cyclic {
        return VerificationRow::not_applicable(p.label, tag, "cyclic");
    }
    if !p.supersoluble() {
        return VerificationRow::not_applicable(p.label, tag, "not supersoluble");
    }
    let rhs = bound_main(p.n, p.q).expect("q divides n");
    if !p.nilpotent() && p.metacyclic() {
        // outside the hypothesis; report what the bound does without a verdict
        let seen = match fr_compare(&p.rho, &rhs) {
            Ordering::Greater => "bound exceeded",
            Ordering::Equal => "bound attained",
            Ordering::Less => "bound satisfied",
        };
        return VerificationRow::not_applicable(
            p.label,
            tag,
            format!("excluded: metacyclic and not nilpotent (exploration: {seen})"),
        );
    }
    VerificationRow::at_most(p.label, tag, &p.rho, &rhs).with_note(format!("q={}", p.q))
}

fn cor_b(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::CorB;
    if p.cyclic {
        return VerificationRow::not_applicable(p.label, tag, "cyclic");
    }
    if !p.tower() {
        return VerificationRow::not_applicable(p.label, tag, "no Sylow tower");
    }
    VerificationRow::at_most(p.label, tag, &p.rho, &p.bound_qq()).with_note(format!("q={}", p.q))
}

fn thm_pq(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::ThmPq;
    if p.cyclic {
        return VerificationRow::not_applicable(p.label, tag, "cyclic");
    }
    if p.primes.len() != 2 {
        return VerificationRow::not_applicable(
            p.label,
            tag,
            format!("order has {} prime divisors", p.primes.len()),
        );
    }
    VerificationRow::at_most(p.label, tag, &p.rho, &p.bound_qq()).with_note(format!("q={}", p.q))
}

fn frobenius_row(p: &Profile<'_>, tag: TheoremTag) -> VerificationRow {
    let fs = match p.frobenius() {
        Err(e) => return VerificationRow::error(p.label, tag, e),
        Ok(None) => return VerificationRow::not_applicable(p.label, tag, "not Frobenius"),
        Ok(Some(fs)) => fs,
    };
    let note = format!("|N|={}, |H|={}", fs.kernel.order(), fs.complement.order());
    let row = if tag == TheoremTag::FrobFormula {
        let rho_n = invariants_of_subgroup(&fs.kernel).rho;
        let rho_h = invariants_of_subgroup(&fs.complement).rho;
        VerificationRow::equal(
            p.label,
            tag,
            &p.rho,
            &rat(&rho_frobenius(fs, &rho_n, &rho_h)),
        )
    } else {
        VerificationRow::at_most(p.label, tag, &p.rho, &p.bound_qq())
    };
    row.with_note(note)
}

fn split_rows(p: &Profile<'_>, tag: TheoremTag) -> Vec<VerificationRow> {
    let mut rows = Vec::new();
    for (prime, split) in p.splits() {
        let prime = *prime;
        if tag == TheoremTag::PropNoncyclicSylow && prime == 2 {
            continue;
        }
        let split = match split {
            Err(e) => {
                rows.push(VerificationRow::error(p.label, tag, e).with_note(format!("p={prime}")));
                continue;
            }
            Ok(None) => continue,
            Ok(Some(s)) => s,
        };
        let cyclic_sylow = split.sylow.is_cyclic();
        let wanted = match tag {
            TheoremTag::PropNoncyclicSylow => !cyclic_sylow,
            TheoremTag::SylowBound => cyclic_sylow && !split.is_direct(),
            _ => cyclic_sylow,
        };
        if wanted {
            rows.push(split_row(p, tag, split));
        }
    }
    if rows.is_empty() {
        let why = match tag {
            TheoremTag::PropNoncyclicSylow => {
                "no non-cyclic normal Sylow subgroup for an odd prime"
            }
            TheoremTag::SylowBound => "no non-central cyclic normal Sylow subgroup",
            _ => "no cyclic normal Sylow subgroup",
        };
        rows.push(VerificationRow::not_applicable(p.label, tag, why));
    }
    rows
}

fn split_row(p: &Profile<'_>, tag: TheoremTag, split: &SylowSplit<'_>) -> VerificationRow {
    let rho_p = invariants_of_subgroup(&split.sylow).rho;
    let rho_f = invariants_of_subgroup(&split.complement).rho;
    let note = format!(
        "p={}, |P|={}, |F|={}, |Z|={}",
        split.p,
        split.sylow.order(),
        split.complement.order(),
        split.centralizer_in_complement.order()
    );
    let row = match tag {
        TheoremTag::SylowFormula => match rho_semidirect_cyclic_sylow(split, &rho_p, &rho_f) {
            Ok(formula) => VerificationRow::equal(p.label, tag, &p.rho, &rat(&formula)),
            Err(e) => VerificationRow::error(p.label, tag, e),
        },
        TheoremTag::SylowDivisibility => {
            let ceiling = split_ceiling(split, &rho_p, &rho_f);
            let check = check_split_divisibility(split, &p.record.rho, &rho_p, &rho_f);
            let holds = check.divides && check.equal == split.is_direct();
            VerificationRow::judged(p.label, tag, &p.record.rho, &ceiling, holds, check.equal)
                .with_note(if check.equal {
                    "equal"
                } else {
                    "proper divisor"
                })
        }
        TheoremTag::SylowBound => VerificationRow::at_most(p.label, tag, &p.rho, &p.bound_qq()),
        TheoremTag::PropNoncyclicSylow => {
            let sylow = split.sylow.order() as u64;
            let first = factor(sylow / split.p)
                .pow(p.n)
                .mul(&rho_f.pow(sylow))
                .to_rat();
            let cmp_first = fr_compare(&p.rho, &first);
            let second = p.bound_qq();
            let cmp_second = fr_compare(&p.rho, &second);
            let holds = cmp_first != Ordering::Greater && cmp_second != Ordering::Greater;
            VerificationRow::judged(
                p.label,
                tag,
                &p.rho,
                &first,
                holds,
                cmp_first == Ordering::Equal,
            )
            .with_note(format!(
                "second bound {second}: {}",
                if cmp_second == Ordering::Greater {
                    "fails"
                } else {
                    "holds"
                }
            ))
        }
        _ => unreachable!("split tags only"),
    };
    row.with_note(note)
}

fn prop_nilpotent(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::PropNilpotent;
    if p.cyclic {
        return VerificationRow::not_applicable(p.label, tag, "cyclic");
    }
    if !p.nilpotent() {
        return VerificationRow::not_applicable(p.label, tag, "not nilpotent");
    }
    let rhs = bound_main(p.n, p.q).expect("q divides n");
    VerificationRow::at_most(p.label, tag, &p.rho, &rhs).with_note(format!("q={}", p.q))
}

/// Recognises `Direct(F, C)` (either order) with `F` Frobenius with cyclic
/// kernel and complement and `C` cyclic of coprime order.
fn example_fxc(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::ExampleFxc;
    let Some(GroupRecipe::Direct(a, b)) = p.recipe else {
        return VerificationRow::not_applicable(p.label, tag, "not a direct product recipe");
    };
    for (f_recipe, c_recipe) in [(a, b), (b, a)] {
        let (Ok(f), Ok(c)) = (
            Group::build_with(f_recipe, p.build),
            Group::build_with(c_recipe, p.build),
        ) else {
            continue;
        };
        if !classify::is_cyclic(&c) || (f.order() as u64).gcd(&(c.order() as u64)) != 1 {
            continue;
        }
        let fs = match classify::frobenius_structure(&f) {
            Ok(Some(fs)) if fs.kernel.is_cyclic() && fs.complement.is_cyclic() => fs,
            Ok(_) => continue,
            Err(e) => return VerificationRow::error(p.label, tag, e),
        };
        let note = format!("F={f_recipe}, C={c_recipe}");
        return match rho_frobenius_times_cyclic(&fs, c.order() as u64) {
            Ok(formula) => VerificationRow::equal(p.label, tag, &p.rho, &rat(&formula)),
            Err(e) => VerificationRow::error(p.label, tag, e),
        }
        .with_note(note);
    }
    VerificationRow::not_applicable(p.label, tag, "no Frobenius x coprime cyclic factorisation")
}

fn abelian_distinguish(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::AbelianDistinguish;
    if !p.abelian() {
        return VerificationRow::not_applicable(p.label, tag, "not abelian");
    }
    let own = classify::abelian_invariants(p.g).expect("abelian");
    let mut matching = None;
    let mut clashes = Vec::new();
    for class in abelian_classes(p.n) {
        let recipe = class_recipe(&class);
        let rho = match Group::build_with(&recipe, p.build) {
            Ok(h) => invariants_direct(&h).rho,
            Err(e) => return VerificationRow::error(p.label, tag, e),
        };
        if class == own {
            matching = Some(rho);
        } else if rho == p.record.rho {
            clashes.push(recipe.to_string());
        }
    }
    let Some(matching) = matching else {
        return VerificationRow::error(p.label, tag, "invariant factors match no class");
    };
    let holds = matching == p.record.rho && clashes.is_empty();
    let note = if clashes.is_empty() {
        format!("type {}", class_recipe(&own))
    } else {
        format!("same value as {}", clashes.join(", "))
    };
    VerificationRow::judged(p.label, tag, &p.record.rho, &matching, holds, false).with_note(note)
}

fn psi_7_11(p: &Profile<'_>) -> VerificationRow {
    let tag = TheoremTag::Psi711;
    if p.cyclic {
        return VerificationRow::not_applicable(p.label, tag, "cyclic");
    }
    let cyc = psi_cyclic(p.n);
    let lhs = &p.record.psi * 11u32;
    let rhs = &cyc * 7u32;
    VerificationRow::judged(p.label, tag, &lhs, &rhs, lhs <= rhs, lhs == rhs)
        .with_note(format!("psi={}, psi(C_n)={}", p.record.psi, cyc))
}
