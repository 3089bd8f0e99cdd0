//! `J`-canonical colorings and the per-`J` existence table.
//!
//! For a tripartite host two edges share a color iff they agree on the parts
//! indexed by `J`. For an ordered complete host the same is applied to the
//! sorted positions of an edge's vertices.

use std::fmt;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::constructions::j_canonical;
use crate::embed::{find_monochromatic_copy, find_rainbow_copy, Embedding};
use crate::hypergraph::HostGraph;
use crate::pattern::Pattern;
use crate::search::SearchError;

pub const MAX_ORDERED_T: u32 = 9;
pub const MAX_TRIPARTITE_T: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CanonicalHost {
    Ordered,
    Tripartite,
}

impl fmt::Display for CanonicalHost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CanonicalHost::Ordered => "ordered",
            CanonicalHost::Tripartite => "tripartite",
        })
    }
}

impl std::str::FromStr for CanonicalHost {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ordered" | "complete" | "complete-ordered" => Ok(CanonicalHost::Ordered),
            "tripartite" => Ok(CanonicalHost::Tripartite),
            _ => Err(SearchError::Unsupported(format!("unknown canonical host {s:?}"))),
        }
    }
}

/// `J` as a bitmask: bit `j - 1` set iff `j` is in `J`.
pub fn j_members(j: u8) -> Vec<u8> {
    (1..=3).filter(|&i| j & (1 << (i - 1)) != 0).collect()
}

fn host_for(kind: CanonicalHost, t: u32) -> Result<HostGraph, SearchError> {
    let (host, max) = match kind {
        CanonicalHost::Ordered => (HostGraph::complete(t), MAX_ORDERED_T),
        CanonicalHost::Tripartite => (HostGraph::tripartite(t, t, t), MAX_TRIPARTITE_T),
    };
    let host = host.map_err(|e| SearchError::Unsupported(e.to_string()))?;
    if t > max {
        return Err(SearchError::TooLarge { edges: host.edge_count(), max: max as usize });
    }
    Ok(host)
}

/// The `J`-canonical coloring (`j` is a bitmask over {1, 2, 3}).
pub fn canonical_coloring(kind: CanonicalHost, t: u32, j: u8) -> Result<Coloring, SearchError> {
    if j > 7 {
        return Err(SearchError::Unsupported(format!("J mask {j} is not a subset of {{1,2,3}}")));
    }
    let host = host_for(kind, t)?;
    j_canonical(&host, j).map_err(|e| SearchError::Unsupported(e.0))
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalRow {
    /// Members of `J`, 1-based.
    pub j: Vec<u8>,
    pub palette: u32,
    pub mono: bool,
    pub rainbow: bool,
    pub mono_witness: Option<Embedding>,
    pub rainbow_witness: Option<Embedding>,
}

impl CanonicalRow {
    pub fn satisfied(&self) -> bool {
        self.mono || self.rainbow
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalTable {
    pub host: CanonicalHost,
    pub t: u32,
    pub h: Pattern,
    pub g: Pattern,
    /// One row per `J`, in bitmask order (∅, {1}, {2}, {1,2}, ...).
    pub rows: Vec<CanonicalRow>,
}

impl CanonicalTable {
    /// Every `J` has a monochromatic `h` or a rainbow `g` at this `t`.
    pub fn exists(&self) -> bool {
        self.rows.iter().all(CanonicalRow::satisfied)
    }

    pub fn row(&self, j: &[u8]) -> Option<&CanonicalRow> {
        self.rows.iter().find(|r| r.j == j)
    }
}

/// For each `J`, whether `h` sits inside one color class and whether `g`
/// appears rainbow in the `J`-canonical coloring of the `t`-host.
pub fn canonical_existence_check(h: &Pattern, g: &Pattern, t: u32, kind: CanonicalHost) -> Result<CanonicalTable, SearchError> {
    host_for(kind, t)?;
    let rows = (0u8..8)
        .map(|j| {
            let c = canonical_coloring(kind, t, j)?;
            let mono_witness = find_monochromatic_copy(&c, h);
            let rainbow_witness = find_rainbow_copy(&c, g);
            Ok(CanonicalRow {
                j: j_members(j),
                palette: c.palette_size(),
                mono: mono_witness.is_some(),
                rainbow: rainbow_witness.is_some(),
                mono_witness,
                rainbow_witness,
            })
        })
        .collect::<Result<Vec<_>, SearchError>>()?;
    Ok(CanonicalTable { host: kind, t, h: h.clone(), g: g.clone(), rows })
}
