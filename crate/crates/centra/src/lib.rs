//! Finite-group centralizer and z-class analysis.
//!
//! Everything is table-based: a group is an immutable Cayley table with the
//! identity pinned at index 0, subgroups are bit-vectors over element indices,
//! and all structural questions (centralizer families, z-class partitions,
//! isoclinism, the extraspecial taxonomy) are answered by exhaustive scans at
//! desk scale.

pub mod catalog;
pub mod centralizer;
pub mod classify;
pub mod constructors;
pub mod corpus;
pub mod group;
pub mod harness;
pub mod isoclinism;
pub mod zclass;

pub use group::{Group, Nilpotency, SubgroupSet};

/// Default ceiling on group order; overridable via `CENTRA_ORDER_CAP`.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// Current order cap, from the environment or the default.
pub fn order_cap() -> usize {
    std::env::var("CENTRA_ORDER_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not proper")]
    NotProper,
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("predicate requires a non-abelian group")]
    AbelianInput,
    #[error("group order is not a prime power")]
    NotPGroup,
    #[error("hypothesis not met: {0}")]
    NotApplicable(String),
    #[error("order cap {cap} exceeded")]
    OrderCapExceeded { cap: usize },
    #[error("search budget {0} exceeded")]
    SearchBudgetExceeded(u64),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
