//! Conflict-free connection numbers: verification, exhaustive search, the
//! closed-form dispatcher, and the line-graph iteration formulas.

mod exact;
mod iterated;
mod oracle;
mod paths;

pub use exact::{cfc_exact, cfc_exact_with};
pub use iterated::{cfc_iterated, cfc_iterated_with, k0, k0_with, IteratedCfc, K0Result};
pub use oracle::{cfc_oracle, cfc_oracle_with};
pub use paths::{
    exists_conflict_free_path, is_conflict_free_path, verify_cfc, verify_cfc_with, Verification,
};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coloring::EdgeColoring;

/// Resource limits for the exhaustive parts of the solver. Everything outside
/// these limits fails loudly instead of running unbounded.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest edge count accepted by the exhaustive search for the exact
    /// connection number.
    pub oracle_max_edges: usize,
    /// Largest edge count for which a coloring is verified pair by pair.
    pub verify_max_edges: usize,
    /// Largest color count the exhaustive search will try.
    pub max_colors: usize,
    /// Largest edge count a line-graph iterate may reach.
    pub edge_cap: usize,
    /// Total number of path-extension steps a verification may spend.
    pub search_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_max_edges: 12,
            verify_max_edges: 24,
            max_colors: 16,
            edge_cap: 50_000,
            search_steps: 50_000_000,
        }
    }
}

/// Which enumeration strategy the exhaustive search uses. Both yield the same
/// first valid coloring; `Pruned` rejects partial assignments as soon as some
/// vertex pair is provably stranded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Pruned,
    Naive,
}

/// How much machinery the exact solver may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Closed forms where they apply, exhaustive search otherwise.
    Auto,
    /// Closed forms only; anything else is [`crate::Error::NoFormulaApplies`].
    FormulaOnly,
    /// Exhaustive search regardless of shape.
    OracleOnly,
}

/// How a result was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "PATH_FORMULA")]
    PathFormula,
    #[serde(rename = "STAR_FORMULA")]
    StarFormula,
    #[serde(rename = "COMPLETE")]
    Complete,
    #[serde(rename = "TWO_EDGE_CONNECTED")]
    TwoEdgeConnected,
    #[serde(rename = "ORDER2_COMPONENTS")]
    Order2Components,
    #[serde(rename = "CUT_PATH_UNIQUE")]
    CutPathUnique,
    #[serde(rename = "CUT_PATH_MULTI")]
    CutPathMulti,
    #[serde(rename = "ORACLE")]
    Oracle,
    #[serde(rename = "H_BOUND")]
    HBound,
}

/// An exact connection number, or the two-value bracket that remains when
/// only the cut-structure bound is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfcValue {
    Exact(usize),
    Bound { lo: usize, hi: usize },
}

impl CfcValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            CfcValue::Exact(v) => Some(*v),
            CfcValue::Bound { .. } => None,
        }
    }

    /// Smallest value consistent with the result.
    pub fn lower(&self) -> usize {
        match self {
            CfcValue::Exact(v) => *v,
            CfcValue::Bound { lo, .. } => *lo,
        }
    }

    /// Largest value consistent with the result.
    pub fn upper(&self) -> usize {
        match self {
            CfcValue::Exact(v) => *v,
            CfcValue::Bound { hi, .. } => *hi,
        }
    }
}

impl Serialize for CfcValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CfcValue::Exact(v) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("kind", "EXACT")?;
                map.serialize_entry("value", v)?;
                map.end()
            }
            CfcValue::Bound { lo, hi } => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("kind", "BOUND")?;
                map.serialize_entry("lo", lo)?;
                map.serialize_entry("hi", hi)?;
                map.end()
            }
        }
    }
}

/// Value, the way it was obtained, and (when available) a coloring witnessing
/// the upper bound.
#[derive(Clone, Debug, Serialize)]
pub struct CfcResult {
    pub value: CfcValue,
    pub method: Method,
    pub certificate: Option<EdgeColoring>,
}

/// `⌈log2(n)⌉` for `n ≥ 1` (0 for `n = 1`).
pub(crate) fn ceil_log2(n: usize) -> usize {
    debug_assert!(n >= 1);
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}
