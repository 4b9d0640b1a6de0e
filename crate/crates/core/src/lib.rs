//! Exact products of element orders of finite groups, the structural
//! classes they are bounded over, and a harness that checks each bound on a
//! corpus of groups.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod group;
pub mod invariants;
pub mod verify;
