//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("connection set contains the identity element {element}")]
    ConnectionSetContainsIdentity { element: usize },

    #[error("connection set is not inverse-closed: element {element} has inverse {inverse} outside the set")]
    ConnectionSetNotInverseClosed { element: usize, inverse: usize },

    #[error("argument out of supported range: {0}")]
    OutOfRange(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("automorphism backtracking cap exceeded: group order {order} above cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("group {name} is one of the exceptional groups (Z2^2, Z2^3, Z3^2, Z2^4, Q8) excluded by the normal-labeling construction")]
    ExceptionalGroup { name: String },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("graph parse error: {0}")]
    GraphFormat(String),

    #[error("permutation group is not transitive")]
    NotTransitive,

    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
