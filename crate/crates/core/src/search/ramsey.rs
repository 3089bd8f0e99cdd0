//! Colorings avoiding a monochromatic pattern (and optionally a rainbow one).
//!
//! Shared by the 2-color Ramsey search and the constrained-Ramsey
//! counterexample search: a depth-first walk over restricted growth strings
//! in edge-id order, capped at `max_classes` classes. Capping at two classes
//! is the same as fixing the first edge to color 0 and trying {0, 1}
//! everywhere else.

use std::time::Instant;

use crate::coloring::Coloring;
use crate::embed::{copies, find_monochromatic_copy, find_rainbow_copy};
use crate::hypergraph::HostGraph;
use crate::pattern::Pattern;
use crate::search::{SearchBudget, SearchError, SearchOutcome, SearchStatus};

/// Copies of one pattern indexed by their last edge id.
struct Closing {
    stride: usize,
    /// `others[p]`: the other edges of each copy whose largest edge is `p`.
    others: Vec<Vec<u32>>,
    /// Copies that are a single edge (`stride == 0`), per edge.
    singles: Vec<bool>,
}

impl Closing {
    fn new(host: &HostGraph, p: &Pattern) -> Self {
        let m = host.edge_count();
        let t = copies(host, p);
        let k = t.edges_per_copy();
        let mut others = vec![Vec::new(); m];
        let mut singles = vec![false; m];
        let mut buf = Vec::with_capacity(k);
        for edges in t.iter_edges() {
            buf.clear();
            buf.extend_from_slice(edges);
            buf.sort_unstable();
            let last = buf[k - 1] as usize;
            if k == 1 {
                singles[last] = true;
            } else {
                others[last].extend_from_slice(&buf[..k - 1]);
            }
        }
        Closing { stride: k.saturating_sub(1), others, singles }
    }

    /// Would coloring edge `p` with `x` close a monochromatic copy?
    #[inline]
    fn closes_mono(&self, color: &[u32], p: usize, x: u32) -> bool {
        if self.singles[p] {
            return true;
        }
        self.others[p].chunks_exact(self.stride).any(|o| o.iter().all(|&q| color[q as usize] == x))
    }

    /// Would coloring edge `p` with `x` close a rainbow copy?
    #[inline]
    fn closes_rainbow(&self, color: &[u32], p: usize, x: u32) -> bool {
        if self.singles[p] {
            return true;
        }
        let mut buf = [0u32; 16];
        self.others[p].chunks_exact(self.stride).any(|o| {
            for (i, &q) in o.iter().enumerate() {
                buf[i] = color[q as usize];
            }
            buf[o.len()] = x;
            crate::embed::all_distinct(&buf[..=o.len()])
        })
    }
}

struct Avoider<'a> {
    mono: Option<&'a Closing>,
    rainbow: Option<&'a Closing>,
    max_classes: u32,
    color: Vec<u32>,
    classes: u32,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    stopped: bool,
}

impl Avoider<'_> {
    fn dfs(&mut self, p: usize) -> bool {
        if p == self.color.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0
            && (self.nodes >= self.budget.node_limit || self.start.elapsed() >= self.budget.time_limit)
        {
            self.stopped = true;
        }
        if self.stopped {
            return false;
        }
        let top = (self.classes + 1).min(self.max_classes);
        for x in 0..top {
            if self.mono.is_some_and(|c| c.closes_mono(&self.color, p, x)) {
                continue;
            }
            if self.rainbow.is_some_and(|c| c.closes_rainbow(&self.color, p, x)) {
                continue;
            }
            self.color[p] = x;
            let opened = x == self.classes;
            if opened {
                self.classes += 1;
            }
            if self.dfs(p + 1) {
                return true;
            }
            if opened {
                self.classes -= 1;
            }
        }
        self.color[p] = u32::MAX;
        false
    }
}

/// First coloring (in restricted-growth order) with at most `max_classes`
/// classes, no monochromatic `mono` and no rainbow `rainbow`.
///
/// `value` is 1 when one exists (it is the witness) and 0 when the search
/// space was exhausted without one.
pub(crate) fn avoiding_search(
    host: &HostGraph,
    mono: Option<&Pattern>,
    rainbow: Option<&Pattern>,
    max_classes: u32,
    budget: SearchBudget,
) -> SearchOutcome {
    let start = Instant::now();
    let mono_c = mono.map(|p| Closing::new(host, p));
    let rainbow_c = rainbow.map(|p| Closing::new(host, p));
    let mut a = Avoider {
        mono: mono_c.as_ref(),
        rainbow: rainbow_c.as_ref(),
        max_classes: max_classes.max(1),
        color: vec![u32::MAX; host.edge_count()],
        classes: 0,
        nodes: 0,
        budget,
        start,
        stopped: false,
    };
    let found = a.dfs(0);
    let witness = found.then(|| Coloring::new(host.clone(), a.color.clone()).expect("complete assignment"));
    if let Some(w) = &witness {
        if let Some(h) = mono {
            assert!(find_monochromatic_copy(w, h).is_none(), "avoiding witness has a monochromatic copy");
        }
        if let Some(g) = rainbow {
            assert!(find_rainbow_copy(w, g).is_none(), "avoiding witness has a rainbow copy");
        }
    }
    let status = if a.stopped { SearchStatus::Inconclusive } else { SearchStatus::Proved };
    SearchOutcome { status, value: u32::from(found), witness, nodes: a.nodes, elapsed: start.elapsed() }
}

/// Search for a 2-coloring of `host` with no monochromatic `h`.
///
/// Proved with a witness: such a coloring exists. Proved without one: every
/// 2-coloring has a monochromatic `h`.
pub fn ramsey2_search(host: &HostGraph, h: &Pattern, budget: SearchBudget) -> SearchOutcome {
    avoiding_search(host, Some(h), None, 2, budget)
}

/// `R2(h)` and a 2-coloring of `K_{R2-1}` with no monochromatic `h` (absent
/// when `R2 - 1 < 3`). Searches complete hosts up to `max_n` vertices.
pub fn ramsey_number_2(h: &Pattern, max_n: u32, budget: SearchBudget) -> Result<(u32, Option<Coloring>), SearchError> {
    let start = Instant::now();
    let mut prev: Option<Coloring> = None;
    let first = (h.vertex_count() as u32).max(3);
    if first > 3 {
        // below the pattern order nothing can be monochromatic
        prev = Some(Coloring::monochromatic(HostGraph::complete(first - 1).expect("n >= 3")));
    }
    let mut nodes = 0;
    for n in first..=max_n.min(crate::hypergraph::MAX_VERTICES) {
        let host = HostGraph::complete(n).expect("n >= 3");
        let left = budget.time_limit.saturating_sub(start.elapsed());
        let out = ramsey2_search(&host, h, SearchBudget { time_limit: left, ..budget });
        nodes += out.nodes;
        match (out.status, out.witness) {
            (SearchStatus::Inconclusive, _) => return Err(SearchError::Inconclusive { nodes }),
            (SearchStatus::Proved, None) => return Ok((n, prev)),
            (SearchStatus::Proved, Some(w)) => prev = Some(w),
        }
    }
    Err(SearchError::Unsupported(format!("R2({}) exceeds {max_n}", h.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternKind;

    #[test]
    fn single_edge_in_k3() {
        let k3 = HostGraph::complete(3).unwrap();
        let out = ramsey2_search(&k3, &Pattern::catalog(PatternKind::SingleEdge), SearchBudget::with_time(60));
        assert!(out.is_proved());
        assert!(out.witness.is_none());
        let (r, w) = ramsey_number_2(&Pattern::catalog(PatternKind::SingleEdge), 6, SearchBudget::with_time(60)).unwrap();
        assert_eq!(r, 3);
        assert!(w.is_none());
    }

    #[test]
    fn matching_in_k6_has_witness() {
        let k6 = HostGraph::complete(6).unwrap();
        let m2 = Pattern::catalog(PatternKind::Matching2);
        let out = ramsey2_search(&k6, &m2, SearchBudget::with_time(60));
        assert!(out.is_proved());
        let w = out.witness.unwrap();
        assert!(w.palette_size() <= 2);
        assert!(find_monochromatic_copy(&w, &m2).is_none());
    }

    #[test]
    fn avoiding_both_respects_both() {
        let k5 = HostGraph::complete(5).unwrap();
        let out = avoiding_search(&k5, Some(&Pattern::catalog(PatternKind::Matching2)), Some(&Pattern::tight()), 10, SearchBudget::with_time(60));
        assert!(out.is_proved());
        // K5 has no two disjoint triples, so the first RGS (monochromatic) works
        assert_eq!(out.witness.unwrap().palette_size(), 1);
    }
}
