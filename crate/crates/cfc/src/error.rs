use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode surfaced by this crate.
///
/// Scale-guard variants (`ScaleLimit`, `EdgeCapExceeded`, `ComponentUndecidable`,
/// `SearchBudget`) mean the input was understood but is too large for the
/// exhaustive machinery under the current [`crate::solver::Limits`]; they are
/// distinct from input rejections so callers can map them to a dedicated exit
/// code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex not in graph: {0:?}")]
    UnknownVertex(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring is not total on the edge set; uncolored edges: {missing:?}")]
    PartialColoring { missing: Vec<String> },

    #[error("coloring refers to edges not in the graph: {alien:?}")]
    AlienEdges { alien: Vec<String> },

    #[error("{what} limit exceeded: {actual} > {limit}")]
    ScaleLimit { what: &'static str, limit: usize, actual: usize },

    #[error("edge cap {cap} exceeded at iteration {iteration}: the next iterate would have {would_have} edges")]
    EdgeCapExceeded { cap: usize, iteration: usize, would_have: usize },

    #[error(
        "non-path tree component with {edges} edges is beyond the exact-search limit {limit}; \
         component vertices: {vertices:?}"
    )]
    ComponentUndecidable { vertices: Vec<String>, edges: usize, limit: usize },

    #[error("no closed-form case applies to this graph")]
    NoFormulaApplies,

    #[error("path search budget exhausted while checking pair ({u:?}, {v:?})")]
    SearchBudget { u: String, v: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
