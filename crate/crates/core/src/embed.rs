//! Copies of a pattern inside a host, and rainbow / monochromatic detection.
//!
//! A copy is identified with its edge-set image: injections that differ by a
//! pattern automorphism are the same copy. Copies are ordered
//! lexicographically by their sorted edge-id list, and for each copy the
//! lexicographically smallest vertex injection is kept as its witness.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::hypergraph::{EdgeId, HostGraph, HostKind, Vertex};
use crate::pattern::Pattern;

/// One copy of a pattern in a host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// Image of template vertex `i` at index `i`.
    pub images: Vec<Vertex>,
    /// Image of pattern edge `j` at index `j`.
    pub edge_images: Vec<EdgeId>,
}

impl Embedding {
    pub fn sorted_edges(&self) -> Vec<EdgeId> {
        let mut e = self.edge_images.clone();
        e.sort_unstable();
        e
    }
}

/// All copies of one pattern in one host, stored flat.
#[derive(Debug)]
pub struct CopyTable {
    edges_per_copy: usize,
    vertices_per_copy: usize,
    /// Edge ids in pattern-edge order.
    edges: Vec<u32>,
    images: Vec<Vertex>,
}

impl CopyTable {
    pub fn len(&self) -> usize {
        if self.edges_per_copy == 0 {
            0
        } else {
            self.edges.len() / self.edges_per_copy
        }
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges_per_copy(&self) -> usize {
        self.edges_per_copy
    }

    #[inline]
    pub fn copy_edges(&self, i: usize) -> &[u32] {
        &self.edges[i * self.edges_per_copy..(i + 1) * self.edges_per_copy]
    }

    pub fn iter_edges(&self) -> std::slice::ChunksExact<'_, u32> {
        self.edges.chunks_exact(self.edges_per_copy.max(1))
    }

    pub fn embedding(&self, i: usize) -> Embedding {
        Embedding {
            images: self.images[i * self.vertices_per_copy..(i + 1) * self.vertices_per_copy].to_vec(),
            edge_images: self.copy_edges(i).iter().map(|&e| EdgeId(e)).collect(),
        }
    }
}

fn build_table(host: &HostGraph, pattern: &Pattern) -> CopyTable {
    let v = pattern.vertex_count();
    let k = pattern.edge_count();
    let n = host.vertex_count() as usize;
    // pattern edges grouped by their largest template vertex
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (j, e) in pattern.edges().iter().enumerate() {
        closing[e[2] as usize].push(j);
    }
    let mut found: Vec<(Vec<u32>, Vec<u32>, Vec<Vertex>)> = Vec::new();
    if v <= n {
        let mut images = vec![0 as Vertex; v];
        let mut used = vec![false; n];
        let mut edge_ids = vec![0u32; k];
        extend(host, pattern, &closing, 0, &mut images, &mut used, &mut edge_ids, &mut found);
    }
    found.sort_unstable();
    found.dedup_by(|a, b| a.0 == b.0);
    let mut table = CopyTable {
        edges_per_copy: k,
        vertices_per_copy: v,
        edges: Vec::with_capacity(found.len() * k),
        images: Vec::with_capacity(found.len() * v),
    };
    for (_, edges, images) in found {
        table.edges.extend(edges);
        table.images.extend(images);
    }
    table
}

#[allow(clippy::too_many_arguments)]
fn extend(
    host: &HostGraph,
    pattern: &Pattern,
    closing: &[Vec<usize>],
    depth: usize,
    images: &mut [Vertex],
    used: &mut [bool],
    edge_ids: &mut [u32],
    found: &mut Vec<(Vec<u32>, Vec<u32>, Vec<Vertex>)>,
) {
    if depth == images.len() {
        let mut key = edge_ids.to_vec();
        key.sort_unstable();
        found.push((key, edge_ids.to_vec(), images.to_vec()));
        return;
    }
    for x in 0..used.len() {
        if used[x] {
            continue;
        }
        images[depth] = x as Vertex;
        let mut ok = true;
        for &j in &closing[depth] {
            let e = pattern.edges()[j];
            let t = [images[e[0] as usize], images[e[1] as usize], images[e[2] as usize]];
            match host.edge_rank(t) {
                Ok(id) => edge_ids[j] = id.0,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            used[x] = true;
            extend(host, pattern, closing, depth + 1, images, used, edge_ids, found);
            used[x] = false;
        }
    }
}

type CacheKey = (HostKind, Vec<[u32; 3]>);

static CACHE: LazyLock<Mutex<HashMap<CacheKey, Arc<CopyTable>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The copy table for `(host, pattern)`, memoized for the process lifetime.
pub fn copies(host: &HostGraph, pattern: &Pattern) -> Arc<CopyTable> {
    let key = (host.kind(), pattern.edges().to_vec());
    if let Some(t) = CACHE.lock().unwrap().get(&key) {
        return Arc::clone(t);
    }
    let table = Arc::new(build_table(host, pattern));
    CACHE.lock().unwrap().entry(key).or_insert(table).clone()
}

/// Every copy of `pattern` in `host`, once each, in deterministic order.
pub fn enumerate_embeddings(host: &HostGraph, pattern: &Pattern) -> impl Iterator<Item = Embedding> {
    let table = copies(host, pattern);
    (0..table.len()).map(move |i| table.embedding(i))
}

pub fn count_copies(host: &HostGraph, pattern: &Pattern) -> usize {
    copies(host, pattern).len()
}

#[inline]
pub(crate) fn all_distinct(colors: &[Color]) -> bool {
    match colors {
        [] | [_] => true,
        [a, b] => a != b,
        [a, b, c] => a != b && a != c && b != c,
        _ => (0..colors.len()).all(|i| (i + 1..colors.len()).all(|j| colors[i] != colors[j])),
    }
}

/// Index of the first copy satisfying `pred` on its edge colors.
pub(crate) fn first_copy_where(c: &Coloring, pattern: &Pattern, pred: impl Fn(&[Color]) -> bool) -> Option<Embedding> {
    let table = copies(c.host(), pattern);
    let mut buf = Vec::with_capacity(table.edges_per_copy());
    for (i, edges) in table.iter_edges().enumerate() {
        buf.clear();
        buf.extend(edges.iter().map(|&e| c.colors()[e as usize]));
        if pred(&buf) {
            return Some(table.embedding(i));
        }
    }
    None
}

/// First copy whose edges carry pairwise distinct colors.
pub fn find_rainbow_copy(c: &Coloring, pattern: &Pattern) -> Option<Embedding> {
    if (c.palette_size() as usize) < pattern.edge_count() {
        return None;
    }
    first_copy_where(c, pattern, all_distinct)
}

/// First copy whose edges all share one color.
pub fn find_monochromatic_copy(c: &Coloring, pattern: &Pattern) -> Option<Embedding> {
    first_copy_where(c, pattern, |cols| cols.iter().all(|&x| x == cols[0]))
}

/// Every rainbow copy, in enumeration order.
pub fn rainbow_copies(c: &Coloring, pattern: &Pattern) -> Vec<Embedding> {
    let table = copies(c.host(), pattern);
    let mut buf = Vec::new();
    let mut out = Vec::new();
    for (i, edges) in table.iter_edges().enumerate() {
        buf.clear();
        buf.extend(edges.iter().map(|&e| c.colors()[e as usize]));
        if all_distinct(&buf) {
            out.push(table.embedding(i));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternKind;

    #[test]
    fn small_counts() {
        let k4 = HostGraph::complete(4).unwrap();
        assert_eq!(count_copies(&k4, &Pattern::tight()), 0);
        let k5 = HostGraph::complete(5).unwrap();
        assert_eq!(count_copies(&k5, &Pattern::tight()), 60);
        assert_eq!(count_copies(&k5, &Pattern::catalog(PatternKind::SingleEdge)), 10);
        let k6 = HostGraph::complete(6).unwrap();
        assert_eq!(count_copies(&k6, &Pattern::messy()), 180);
        assert_eq!(count_copies(&k6, &Pattern::catalog(PatternKind::Matching2)), 10);
    }

    #[test]
    fn embeddings_are_consistent_and_sorted() {
        let h = HostGraph::tripartite(2, 3, 2).unwrap();
        let p = Pattern::catalog(PatternKind::TightStarDs2);
        let all: Vec<_> = enumerate_embeddings(&h, &p).collect();
        assert!(!all.is_empty());
        let keys: Vec<_> = all.iter().map(|e| e.sorted_edges()).collect();
        for w in keys.windows(2) {
            assert!(w[0] < w[1]);
        }
        for emb in &all {
            for (j, pe) in p.edges().iter().enumerate() {
                let t = [emb.images[pe[0] as usize], emb.images[pe[1] as usize], emb.images[pe[2] as usize]];
                assert_eq!(h.edge_rank(t).unwrap(), emb.edge_images[j]);
            }
        }
    }

    #[test]
    fn detection_trivia() {
        let h = HostGraph::complete(7).unwrap();
        let mono = Coloring::monochromatic(h.clone());
        assert!(find_rainbow_copy(&mono, &Pattern::loose()).is_none());
        assert!(find_monochromatic_copy(&mono, &Pattern::catalog(PatternKind::Matching2)).is_some());
        let k5 = HostGraph::complete(5).unwrap();
        let rainbow = Coloring::rainbow(k5);
        assert!(find_monochromatic_copy(&rainbow, &Pattern::catalog(PatternKind::Matching2)).is_none());
        let w = find_rainbow_copy(&rainbow, &Pattern::tight()).unwrap();
        // first copy in order is also the first copy overall
        assert_eq!(w, enumerate_embeddings(&HostGraph::complete(5).unwrap(), &Pattern::tight()).next().unwrap());
    }
}
