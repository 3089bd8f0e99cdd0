//! Complete and complete-tripartite 3-uniform host hypergraphs.
//!
//! Vertices are plain `u32` labels `0..N`. Tripartite hosts number their parts
//! contiguously: `[0, n1)`, `[n1, n1 + n2)`, `[n1 + n2, N)`.
//!
//! Edges are identified by an [`EdgeId`] rank. Complete hosts use the colex
//! rank `C(a,1) + C(b,2) + C(c,3)` of the sorted triple `a < b < c`; tripartite
//! hosts use the mixed-radix rank `i1 + n1*i2 + n1*n2*i3` over part-local
//! indices.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::HostError;

/// Vertex label.
pub type Vertex = u32;

/// A sorted vertex triple.
pub type Triple = [Vertex; 3];

/// Rank of an edge within its host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HostKind {
    Complete { n: u32 },
    Tripartite { sizes: [u32; 3] },
}

/// A complete `K_n^(3)` or complete tripartite `K_{n1,n2,n3}^(3)` host.
///
/// The edge table is materialized once at construction and shared, so cloning
/// a host is cheap.
#[derive(Clone)]
pub struct HostGraph {
    kind: HostKind,
    edges: Arc<[Triple]>,
}

impl PartialEq for HostGraph {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for HostGraph {}

impl std::hash::Hash for HostGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.kind.hash(state);
    }
}

impl fmt::Debug for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HostGraph({})", self)
    }
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HostKind::Complete { n } => write!(f, "complete {n}"),
            HostKind::Tripartite { sizes: [a, b, c] } => write!(f, "tripartite {a} {b} {c}"),
        }
    }
}

/// Hosts beyond this many vertices are refused; every search in this crate
/// is desk scale and the edge table grows cubically.
pub const MAX_VERTICES: u32 = 64;

#[inline]
fn choose2(x: u32) -> u32 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

#[inline]
fn choose3(x: u32) -> u32 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

impl HostGraph {
    pub fn complete(n: u32) -> Result<Self, HostError> {
        if n < 3 {
            return Err(HostError::Degenerate(format!("complete host needs n >= 3, got {n}")));
        }
        if n > MAX_VERTICES {
            return Err(HostError::TooLarge(n));
        }
        let mut edges = Vec::with_capacity(choose3(n) as usize);
        // colex order: by largest vertex, then middle, then smallest
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    edges.push([a, b, c]);
                }
            }
        }
        Ok(Self { kind: HostKind::Complete { n }, edges: edges.into() })
    }

    pub fn tripartite(n1: u32, n2: u32, n3: u32) -> Result<Self, HostError> {
        if n1 == 0 || n2 == 0 || n3 == 0 {
            return Err(HostError::Degenerate(format!(
                "tripartite host needs every part non-empty, got {n1} {n2} {n3}"
            )));
        }
        let total = n1 + n2 + n3;
        if total > MAX_VERTICES {
            return Err(HostError::TooLarge(total));
        }
        let mut edges = Vec::with_capacity((n1 * n2 * n3) as usize);
        for i3 in 0..n3 {
            for i2 in 0..n2 {
                for i1 in 0..n1 {
                    edges.push([i1, n1 + i2, n1 + n2 + i3]);
                }
            }
        }
        Ok(Self { kind: HostKind::Tripartite { sizes: [n1, n2, n3] }, edges: edges.into() })
    }

    pub fn from_kind(kind: HostKind) -> Result<Self, HostError> {
        match kind {
            HostKind::Complete { n } => Self::complete(n),
            HostKind::Tripartite { sizes: [a, b, c] } => Self::tripartite(a, b, c),
        }
    }

    pub fn kind(&self) -> HostKind {
        self.kind
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.kind, HostKind::Complete { .. })
    }

    pub fn vertex_count(&self) -> u32 {
        match self.kind {
            HostKind::Complete { n } => n,
            HostKind::Tripartite { sizes } => sizes.iter().sum(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, indexed by [`EdgeId`].
    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Part index of a vertex, `None` for complete hosts.
    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        match self.kind {
            HostKind::Complete { .. } => None,
            HostKind::Tripartite { sizes: [n1, n2, _] } => Some(if v < n1 {
                0
            } else if v < n1 + n2 {
                1
            } else {
                2
            }),
        }
    }

    /// Vertex range of part `p` of a tripartite host.
    pub fn part_range(&self, p: usize) -> Option<std::ops::Range<Vertex>> {
        match self.kind {
            HostKind::Complete { .. } => None,
            HostKind::Tripartite { sizes: [n1, n2, n3] } => Some(match p {
                0 => 0..n1,
                1 => n1..n1 + n2,
                2 => n1 + n2..n1 + n2 + n3,
                _ => return None,
            }),
        }
    }

    /// Whether the (unordered) triple is an edge of this host.
    pub fn is_edge(&self, triple: [Vertex; 3]) -> bool {
        self.edge_rank(triple).is_ok()
    }

    /// Rank of an edge given by three distinct vertices in any order.
    pub fn edge_rank(&self, triple: [Vertex; 3]) -> Result<EdgeId, HostError> {
        let mut t = triple;
        t.sort_unstable();
        let [a, b, c] = t;
        let n = self.vertex_count();
        if a == b || b == c || c >= n {
            return Err(HostError::NotAnEdge(triple));
        }
        match self.kind {
            HostKind::Complete { .. } => Ok(EdgeId(a + choose2(b) + choose3(c))),
            HostKind::Tripartite { sizes: [n1, n2, _] } => {
                // sorted order puts one vertex per part in part order, if valid
                if a >= n1 || b < n1 || b >= n1 + n2 || c < n1 + n2 {
                    return Err(HostError::NotAnEdge(triple));
                }
                let (i1, i2, i3) = (a, b - n1, c - n1 - n2);
                Ok(EdgeId(i1 + n1 * i2 + n1 * n2 * i3))
            }
        }
    }

    pub fn edge_unrank(&self, id: EdgeId) -> Result<Triple, HostError> {
        self.edges
            .get(id.index())
            .copied()
            .ok_or(HostError::OutOfRange { id: id.0, edges: self.edges.len() })
    }

    /// Unchecked lookup for hot loops; panics on an out-of-range id.
    #[inline]
    pub fn triple(&self, id: EdgeId) -> Triple {
        self.edges[id.index()]
    }
}

/// Number of vertices two triples share.
#[inline]
pub fn overlap(e: &Triple, f: &Triple) -> usize {
    e.iter().filter(|v| f.contains(v)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_examples() {
        let h = HostGraph::complete(5).unwrap();
        assert_eq!(h.edge_rank([0, 1, 2]).unwrap(), EdgeId(0));
        assert_eq!(h.edge_rank([2, 3, 4]).unwrap(), EdgeId(9));
        assert_eq!(h.edge_rank([0, 1, 3]).unwrap(), EdgeId(1));
        assert_eq!(h.edge_rank([3, 1, 0]).unwrap(), EdgeId(1));
        assert_eq!(h.edge_unrank(EdgeId(0)).unwrap(), [0, 1, 2]);
        assert_eq!(h.edge_unrank(EdgeId(9)).unwrap(), [2, 3, 4]);
    }

    #[test]
    fn rank_errors() {
        let h = HostGraph::complete(5).unwrap();
        assert!(matches!(h.edge_rank([0, 0, 1]), Err(HostError::NotAnEdge(_))));
        assert!(matches!(h.edge_rank([0, 1, 5]), Err(HostError::NotAnEdge(_))));
        assert!(matches!(h.edge_unrank(EdgeId(10)), Err(HostError::OutOfRange { .. })));
        let t = HostGraph::tripartite(2, 2, 2).unwrap();
        assert!(matches!(t.edge_rank([0, 1, 2]), Err(HostError::NotAnEdge(_))));
        assert!(matches!(t.edge_rank([0, 2, 3]), Err(HostError::NotAnEdge(_))));
        assert_eq!(t.edge_rank([1, 3, 5]).unwrap(), EdgeId(7));
    }

    #[test]
    fn degenerate_hosts_rejected() {
        assert!(HostGraph::complete(2).is_err());
        assert!(HostGraph::tripartite(3, 0, 3).is_err());
    }

    #[test]
    fn exhaustive_bijection_small_hosts() {
        let mut hosts = Vec::new();
        for n in 3..=30 {
            hosts.push(HostGraph::complete(n).unwrap());
        }
        for a in 1..=5 {
            for b in 1..=5 {
                for c in 1..=5 {
                    hosts.push(HostGraph::tripartite(a, b, c).unwrap());
                }
            }
        }
        for h in hosts {
            let expected = match h.kind() {
                HostKind::Complete { n } => choose3(n) as usize,
                HostKind::Tripartite { sizes: [a, b, c] } => (a * b * c) as usize,
            };
            assert_eq!(h.edge_count(), expected);
            for id in h.edge_ids() {
                let t = h.edge_unrank(id).unwrap();
                assert_eq!(h.edge_rank(t).unwrap(), id, "{h} {t:?}");
                if let Some(_) = h.part_of(0) {
                    let parts: Vec<_> = t.iter().map(|&v| h.part_of(v).unwrap()).collect();
                    assert_eq!(parts, vec![0, 1, 2]);
                }
            }
        }
    }
}
