//! Search and certification toolkit for edge-colored 3-uniform hypergraphs.
//!
//! The crate detects rainbow copies of the tight, messy and loose paths of
//! length 3 (and a handful of auxiliary patterns), certifies colorings against
//! the known structural decompositions for colorings that avoid them, builds
//! the extremal colorings, and recomputes anti-Ramsey and constrained-Ramsey
//! values by exhaustive and branch-and-bound search.

pub mod certify;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod pattern;
pub mod samplers;
pub mod search;
pub mod suites;

pub use coloring::{color_summary, normalize_colors, Color, ColorSummary, Coloring};
pub use embed::{count_copies, enumerate_embeddings, find_monochromatic_copy, find_rainbow_copy, Embedding};
pub use hypergraph::{EdgeId, HostGraph, HostKind, Vertex};
pub use pattern::{Pattern, PatternKind};
