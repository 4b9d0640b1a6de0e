//! Evaluates each bound and formula over a corpus of groups and reports the
//! verdicts row by row.

mod abelian;
mod corpus;
mod remarks;
mod report;
mod theorems;

pub use abelian::{abelian_classes, check_abelian_distinguish, class_recipe};
pub use corpus::{parse_corpus, parse_recipe, render_corpus, CorpusEntry, CorpusError};
pub use remarks::{remark_p_rows, remark_qp_rows, summarize_sweep};
pub use report::{
    corpus_hash, rows_to_csv, run_corpus, Collision, RunOptions, Summary, TagSummary,
    VerificationReport, CSV_HEADER, TOOL_VERSION,
};
pub use theorems::{check_group, TheoremTag, UnknownTag, VerificationRow};

/// The bundled corpus.
pub const DEFAULT_CORPUS: &str = include_str!("../../corpus/default.corpus");
