//! Maximum number of color classes over rainbow-free colorings.
//!
//! Edges are assigned in a fixed order; edge `k` may take any class already
//! opened or open the next one, so each color partition is visited once.
//! A branch dies as soon as some copy of the pattern whose last edge was just
//! assigned is rainbow.
//!
//! The bound counts how many new classes the remaining edges could still
//! open. An unassigned edge `h` can start a new class only if no copy
//! containing `h` has all its other edges assigned with pairwise distinct
//! colors; those edges are tracked with incremental block counters. A branch
//! is cut when `classes + openable <= best`.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::embed::{copies, find_rainbow_copy};
use crate::hypergraph::HostGraph;
use crate::pattern::Pattern;
use crate::search::{SearchBudget, SearchError, SearchOutcome, SearchStatus};

/// Order in which the search assigns edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum EdgeOrder {
    /// Increasing [`EdgeId`](crate::hypergraph::EdgeId).
    EdgeId,
    /// Greedy: next edge completes the most copies, then touches the most
    /// partially placed copies; ties by edge id.
    #[default]
    Greedy,
}

fn edge_order(host: &HostGraph, pattern: &Pattern, how: EdgeOrder) -> Vec<u32> {
    let m = host.edge_count();
    if how == EdgeOrder::EdgeId {
        return (0..m as u32).collect();
    }
    let table = copies(host, pattern);
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, edges) in table.iter_edges().enumerate() {
        for &e in edges {
            containing[e as usize].push(i);
        }
    }
    let k = table.edges_per_copy();
    let mut placed_in_copy = vec![0usize; table.len()];
    let mut chosen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut best: Option<(usize, usize, usize)> = None;
        for e in 0..m {
            if chosen[e] {
                continue;
            }
            let mut completes = 0;
            let mut touches = 0;
            for &c in &containing[e] {
                if placed_in_copy[c] + 1 == k {
                    completes += 1;
                }
                touches += placed_in_copy[c];
            }
            let key = (completes, touches, usize::MAX - e);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        let e = usize::MAX - best.unwrap().2;
        chosen[e] = true;
        for &c in &containing[e] {
            placed_in_copy[c] += 1;
        }
        order.push(e as u32);
    }
    order
}

/// Copy structure re-indexed by assignment position.
struct Layout {
    m: usize,
    k: usize,
    order: Vec<u32>,
    /// Copies whose last position is `p`: the other `k - 1` positions, flat.
    ending: Vec<Vec<u32>>,
    /// Copies whose second-to-last position is `p`: the `k - 2` earlier
    /// positions followed by the last position, flat, stride `k - 1`.
    penultimate: Vec<Vec<u32>>,
}

impl Layout {
    fn new(host: &HostGraph, pattern: &Pattern, how: EdgeOrder) -> Self {
        let m = host.edge_count();
        let k = pattern.edge_count();
        let order = edge_order(host, pattern, how);
        let mut pos = vec![0u32; m];
        for (p, &e) in order.iter().enumerate() {
            pos[e as usize] = p as u32;
        }
        let table = copies(host, pattern);
        let mut ending = vec![Vec::new(); m];
        let mut penultimate = vec![Vec::new(); m];
        let mut ps = Vec::with_capacity(k);
        for edges in table.iter_edges() {
            ps.clear();
            ps.extend(edges.iter().map(|&e| pos[e as usize]));
            ps.sort_unstable();
            let last = ps[k - 1] as usize;
            ending[last].extend_from_slice(&ps[..k - 1]);
            if k >= 2 {
                let pen = ps[k - 2] as usize;
                penultimate[pen].extend_from_slice(&ps[..k - 2]);
                penultimate[pen].push(ps[k - 1]);
            }
        }
        Layout { m, k, order, ending, penultimate }
    }
}

struct Shared {
    best: AtomicU32,
    witness: Mutex<Option<Vec<u32>>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl Shared {
    fn offer(&self, classes: u32, colors_by_pos: &[u32], order: &[u32]) {
        let mut w = self.witness.lock().unwrap();
        if classes > self.best.load(Ordering::Relaxed) {
            let mut by_edge = vec![0u32; colors_by_pos.len()];
            for (p, &c) in colors_by_pos.iter().enumerate() {
                by_edge[order[p] as usize] = c;
            }
            *w = Some(by_edge);
            self.best.store(classes, Ordering::Relaxed);
        }
    }
}

struct Worker<'a> {
    lay: &'a Layout,
    shared: &'a Shared,
    color: Vec<u32>,
    classes: u32,
    blocked: Vec<u32>,
    openable: u32,
    trail: Vec<u32>,
    local_nodes: u64,
    check_every: u64,
}

const CHECK_EVERY: u64 = 1 << 14;

impl<'a> Worker<'a> {
    fn new(lay: &'a Layout, shared: &'a Shared) -> Self {
        Worker {
            lay,
            shared,
            color: vec![u32::MAX; lay.m],
            classes: 0,
            blocked: vec![0; lay.m],
            openable: lay.m as u32,
            trail: Vec::with_capacity(lay.m * 64),
            local_nodes: 0,
            check_every: CHECK_EVERY.min(shared.budget.node_limit),
        }
    }

    /// Assign color `x` at position `p`; false (and no state change) if this
    /// completes a rainbow copy.
    #[inline]
    fn assign(&mut self, p: usize, x: u32) -> bool {
        let lay = self.lay;
        let k1 = lay.k - 1;
        let ending = &lay.ending[p];
        match lay.k {
            2 => {
                for &a in ending {
                    if self.color[a as usize] != x {
                        return false;
                    }
                }
            }
            3 => {
                for pair in ending.chunks_exact(2) {
                    let (a, b) = (self.color[pair[0] as usize], self.color[pair[1] as usize]);
                    if a != b && a != x && b != x {
                        return false;
                    }
                }
            }
            _ => {
                let mut buf = Vec::with_capacity(lay.k);
                for others in ending.chunks_exact(k1) {
                    buf.clear();
                    buf.extend(others.iter().map(|&q| self.color[q as usize]));
                    buf.push(x);
                    if crate::embed::all_distinct(&buf) {
                        return false;
                    }
                }
            }
        }
        self.color[p] = x;
        if x == self.classes {
            self.classes += 1;
        }
        if self.blocked[p] == 0 {
            self.openable -= 1;
        }
        self.trail.push(u32::MAX);
        let pen = &lay.penultimate[p];
        match lay.k {
            2 => {
                for &last in pen {
                    self.block(last);
                }
            }
            3 => {
                for pair in pen.chunks_exact(2) {
                    if self.color[pair[0] as usize] != x {
                        self.block(pair[1]);
                    }
                }
            }
            _ => {
                let mut buf = Vec::with_capacity(lay.k);
                for chunk in pen.chunks_exact(k1) {
                    buf.clear();
                    buf.extend(chunk[..k1 - 1].iter().map(|&q| self.color[q as usize]));
                    buf.push(x);
                    if crate::embed::all_distinct(&buf) {
                        self.block(chunk[k1 - 1]);
                    }
                }
            }
        }
        true
    }

    #[inline]
    fn block(&mut self, q: u32) {
        let b = &mut self.blocked[q as usize];
        if *b == 0 {
            self.openable -= 1;
        }
        *b += 1;
        self.trail.push(q);
    }

    fn unassign(&mut self, p: usize) {
        while let Some(q) = self.trail.pop() {
            if q == u32::MAX {
                break;
            }
            let b = &mut self.blocked[q as usize];
            *b -= 1;
            if *b == 0 {
                self.openable += 1;
            }
        }
        if self.blocked[p] == 0 {
            self.openable += 1;
        }
        if self.color[p] + 1 == self.classes && !self.color[..p].contains(&self.color[p]) {
            self.classes -= 1;
        }
        self.color[p] = u32::MAX;
    }

    #[inline]
    fn promising(&self) -> bool {
        self.classes + self.openable > self.shared.best.load(Ordering::Relaxed)
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes % self.check_every == 0 {
            let total = self.shared.nodes.fetch_add(self.check_every, Ordering::Relaxed) + self.check_every;
            if total >= self.shared.budget.node_limit || self.shared.start.elapsed() >= self.shared.budget.time_limit {
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush_nodes(&mut self) {
        self.shared.nodes.fetch_add(self.local_nodes % self.check_every, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    fn dfs(&mut self, p: usize) {
        if p == self.lay.m {
            if self.classes > self.shared.best.load(Ordering::Relaxed) {
                self.shared.offer(self.classes, &self.color, &self.lay.order);
            }
            return;
        }
        if !self.tick() {
            return;
        }
        // open a new class first so good witnesses show up early
        let top = self.classes;
        for i in 0..=top {
            let x = if i == 0 { top } else { i - 1 };
            if self.assign(p, x) {
                if self.promising() {
                    self.dfs(p + 1);
                }
                self.unassign(p);
            }
        }
    }

    /// Replay a prefix of assignments; false if it is infeasible.
    fn replay(&mut self, prefix: &[u32]) -> bool {
        for (p, &x) in prefix.iter().enumerate() {
            if !self.assign(p, x) {
                return false;
            }
        }
        true
    }
}

/// Feasible prefixes of length `depth`, in search order.
fn split_prefixes(lay: &Layout, shared: &Shared, depth: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut w = Worker::new(lay, shared);
    fn rec(w: &mut Worker, p: usize, depth: usize, out: &mut Vec<Vec<u32>>) {
        if p == depth {
            out.push(w.color[..depth].to_vec());
            return;
        }
        let top = w.classes;
        for i in 0..=top {
            let x = if i == 0 { top } else { i - 1 };
            if w.assign(p, x) {
                rec(w, p + 1, depth, out);
                w.unassign(p);
            }
        }
    }
    rec(&mut w, 0, depth, &mut out);
    out
}

/// Maximum number of color classes in a rainbow-`p`-free coloring of `host`.
///
/// A `Proved` outcome carries a witness attaining the value, re-verified
/// against the detector before return.
pub fn max_rainbow_free_colors(
    host: &HostGraph,
    pattern: &Pattern,
    budget: SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    max_rainbow_free_colors_with(host, pattern, budget, EdgeOrder::default())
}

pub fn max_rainbow_free_colors_with(
    host: &HostGraph,
    pattern: &Pattern,
    budget: SearchBudget,
    order: EdgeOrder,
) -> Result<SearchOutcome, SearchError> {
    if pattern.edge_count() < 2 {
        return Err(SearchError::PatternTooSmall { needed: 2 });
    }
    let start = Instant::now();
    let lay = Layout::new(host, pattern, order);
    // the monochromatic coloring is always rainbow-free
    let shared = Shared {
        best: AtomicU32::new(1),
        witness: Mutex::new(Some(vec![0; lay.m])),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        start,
        budget,
    };
    if budget.threads <= 1 {
        let mut w = Worker::new(&lay, &shared);
        w.dfs(0);
        w.flush_nodes();
    } else {
        let depth = split_depth(&lay, budget.threads);
        let prefixes = split_prefixes(&lay, &shared, depth);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(budget.threads).build().map_err(|e| {
            SearchError::Unsupported(format!("thread pool: {e}"))
        })?;
        pool.install(|| {
            prefixes.par_iter().for_each(|prefix| {
                let mut w = Worker::new(&lay, &shared);
                if w.replay(prefix) && w.promising() {
                    w.dfs(prefix.len());
                }
                w.flush_nodes();
            });
        });
    }
    let status = if shared.stop.load(Ordering::Relaxed) { SearchStatus::Inconclusive } else { SearchStatus::Proved };
    let value = shared.best.load(Ordering::Relaxed);
    let raw = shared.witness.into_inner().unwrap().expect("initial witness");
    let witness = Coloring::new(host.clone(), raw).expect("length matches host");
    assert_eq!(witness.palette_size(), value, "witness palette disagrees with search value");
    assert!(
        find_rainbow_copy(&witness, pattern).is_none(),
        "search witness contains a rainbow {}",
        pattern.name()
    );
    Ok(SearchOutcome {
        status,
        value,
        witness: Some(witness),
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

fn split_depth(lay: &Layout, threads: usize) -> usize {
    // enough prefixes to balance load: Bell growth passes 8 * threads quickly
    let mut depth = 1;
    while depth < lay.m && crate::search::bell_number(depth) < (threads as u128) * 16 {
        depth += 1;
    }
    depth.min(lay.m)
}

/// `ar(host, p)`: one more than the maximum rainbow-free palette. Only a
/// proved search yields a number.
pub fn anti_ramsey(host: &HostGraph, pattern: &Pattern, budget: SearchBudget) -> Result<u32, SearchError> {
    let out = max_rainbow_free_colors(host, pattern, budget)?;
    match out.status {
        SearchStatus::Proved => Ok(out.value + 1),
        SearchStatus::Inconclusive => Err(SearchError::Inconclusive { nodes: out.nodes }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternKind;

    fn run(host: &HostGraph, p: &Pattern, order: EdgeOrder, threads: usize) -> SearchOutcome {
        let budget = SearchBudget::with_time(600).with_threads(threads);
        max_rainbow_free_colors_with(host, p, budget, order).unwrap()
    }

    #[test]
    fn small_values() {
        let k5 = HostGraph::complete(5).unwrap();
        for order in [EdgeOrder::EdgeId, EdgeOrder::Greedy] {
            let out = run(&k5, &Pattern::tight(), order, 1);
            assert!(out.is_proved());
            assert_eq!(out.value, 2);
        }
    }

    #[test]
    fn thread_count_does_not_change_value() {
        let k5 = HostGraph::complete(5).unwrap();
        for kind in [PatternKind::LooseStarS2, PatternKind::TightStarDs2, PatternKind::Matching2, PatternKind::TightT] {
            let p = Pattern::catalog(kind);
            let a = run(&k5, &p, EdgeOrder::Greedy, 1);
            let b = run(&k5, &p, EdgeOrder::Greedy, 4);
            assert_eq!(a.value, b.value, "{kind}");
            assert!(a.is_proved() && b.is_proved());
        }
    }

    #[test]
    fn one_edge_pattern_rejected() {
        let k5 = HostGraph::complete(5).unwrap();
        let p = Pattern::catalog(PatternKind::SingleEdge);
        assert!(matches!(
            max_rainbow_free_colors(&k5, &p, SearchBudget::default()),
            Err(SearchError::PatternTooSmall { .. })
        ));
    }

    #[test]
    fn node_budget_gives_inconclusive() {
        let k6 = HostGraph::complete(6).unwrap();
        let out = run_budget(&k6, &Pattern::messy(), SearchBudget::with_time(600).with_threads(1).with_nodes(1));
        assert_eq!(out.status, SearchStatus::Inconclusive);
        assert!(anti_ramsey(&k6, &Pattern::messy(), SearchBudget::with_time(600).with_threads(1).with_nodes(1)).is_err());
    }

    fn run_budget(host: &HostGraph, p: &Pattern, b: SearchBudget) -> SearchOutcome {
        max_rainbow_free_colors(host, p, b).unwrap()
    }
}
