//! Exhaustive and branch-and-bound oracles.
//!
//! Colorings are searched as set partitions of the edge set (color names do
//! not matter for rainbow or monochromatic copies), written as restricted
//! growth strings along a fixed edge order: an edge may reuse any class
//! already opened or open exactly the next one.

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;

mod bnb;
mod canonical;
mod constrained;
mod partitions;
mod ramsey;

pub use bnb::{anti_ramsey, max_rainbow_free_colors, max_rainbow_free_colors_with, EdgeOrder};
pub use canonical::{
    canonical_coloring, canonical_existence_check, j_members, CanonicalHost, CanonicalRow, CanonicalTable, MAX_ORDERED_T,
    MAX_TRIPARTITE_T,
};
pub use constrained::{
    constrained_ramsey_check, counterexample_search, ConstrainedReport, HypothesisCheck, PathKind, MAX_RAMSEY_N,
};
pub use partitions::{bell_number, enumerate_color_partitions, PartitionStats, MAX_PARTITION_EDGES};
pub use ramsey::{ramsey2_search, ramsey_number_2};

/// Environment variable holding the default wall-clock budget in seconds.
pub const BUDGET_ENV: &str = "RHL_DEFAULT_BUDGET_SECS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
    pub threads: usize,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration, threads: usize) -> Self {
        Self { node_limit: node_limit.max(1), time_limit: time_limit.max(Duration::from_millis(1)), threads: threads.max(1) }
    }

    pub fn with_time(secs: u64) -> Self {
        Self { time_limit: Duration::from_secs(secs.max(1)), ..Self::default() }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.node_limit = nodes.max(1);
        self
    }
}

impl Default for SearchBudget {
    /// Unlimited nodes, one hour of wall clock (or `RHL_DEFAULT_BUDGET_SECS`),
    /// all available cores.
    fn default() -> Self {
        let secs = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse::<u64>().ok()).unwrap_or(3600);
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
        Self { node_limit: u64::MAX, time_limit: Duration::from_secs(secs.max(1)), threads }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    Proved,
    Inconclusive,
}

/// Result of an exhaustive search.
///
/// For [`max_rainbow_free_colors`] `value` is the largest palette of a
/// rainbow-free coloring; for [`ramsey2_search`] it is 1 when an avoiding
/// 2-coloring exists and 0 when none does.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub value: u32,
    pub witness: Option<Coloring>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_proved(&self) -> bool {
        self.status == SearchStatus::Proved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("instance too large: {edges} edges, limit {max}")]
    TooLarge { edges: usize, max: usize },
    #[error("search budget exhausted after {nodes} nodes")]
    Inconclusive { nodes: u64 },
    #[error("pattern must have at least {needed} edges")]
    PatternTooSmall { needed: usize },
    #[error("{0}")]
    HypothesisNotMet(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("{0}")]
    Unsupported(String),
}
