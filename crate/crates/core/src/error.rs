use thiserror::Error;

/// Errors surfaced by the library.
///
/// "No" answers are never errors: they are values (`None`, `Verdict::No`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input is not P5-free: induced path {}", fmt_path(.witness))]
    NotP5Free { witness: Vec<usize> },

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} exceeds the guard ({size} > {limit})")]
    GuardExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("malformed instance: {0}")]
    Malformed(String),

    #[error("generation budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("formula cannot be normalized: {0}")]
    Normalize(String),

    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

fn fmt_path(p: &[usize]) -> String {
    p.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
