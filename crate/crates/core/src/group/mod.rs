//! Finite groups as dense multiplication tables, built from recipes, with the
//! subgroup, quotient and Sylow machinery the classifiers rely on.

mod lattice;
mod recipe;
mod subgroup;
mod table;

pub use lattice::{p_part, DEFAULT_LATTICE_CAP};
pub use recipe::{GroupRecipe, MAX_PERMUTATION_DEGREE};
pub use subgroup::Subgroup;
pub use table::{BuildOptions, Group, DEFAULT_ORDER_CAP, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid recipe: {0}")]
    RecipeInvalid(String),
    #[error("{recipe} exceeds the order cap {cap}")]
    OrderCapExceeded { recipe: String, cap: u64 },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{p} is not a prime dividing {n}")]
    PNotDividing { p: u64, n: u64 },
    #[error("more than {cap} normal subgroups")]
    LatticeCapExceeded { cap: usize },
}
