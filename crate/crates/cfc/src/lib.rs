//! Conflict-free connection numbers of graphs.
//!
//! An edge coloring makes a path *conflict-free* when some color appears on
//! exactly one of its edges; a graph is conflict-free connected when every
//! vertex pair has such a path. This crate computes the minimum number of
//! colors needed — exactly via structure-driven closed forms or exhaustive
//! search, with constructive coloring certificates — plus the analysis
//! machinery behind those closed forms (cut edges, blocks, cut-component
//! shapes), labelled line graphs, and the trajectory of the value along
//! repeated line-graph applications.
//!
//! Entry points:
//! - [`graph::Graph`]: labelled simple graphs, edge-list and DOT parsing.
//! - [`structure`]: bridges, blocks, cut-component classification.
//! - [`solver::cfc_exact`]: the number itself, with method tag and
//!   certificate; [`solver::cfc_oracle`] for the search alone;
//!   [`solver::verify_cfc`] to check any coloring.
//! - [`coloring`]: the certificate type and the constructive colorings.
//! - [`line_graph`] and [`solver::cfc_iterated`] / [`solver::k0`]: iterated
//!   line graphs and where the trajectory settles.

#![forbid(unsafe_code)]

pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod line_graph;
pub mod solver;
pub mod structure;

pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use solver::{
    CfcResult, CfcValue, IteratedCfc, K0Result, Limits, Method, OracleMode, SolveMode, Verification,
};
