//! Brute-force oracles written independently of the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rhl_core::{Coloring, HostGraph, Pattern};

pub type Triple = [u32; 3];

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

/// Is `t` an edge of `host`: distinct vertices, one per part if tripartite.
pub fn is_host_edge(host: &HostGraph, t: Triple) -> bool {
    let n = host.vertex_count();
    if t.iter().any(|&v| v >= n) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return false;
    }
    if host.is_complete() {
        return true;
    }
    let mut parts: Vec<usize> = t.iter().map(|&v| host.part_of(v).unwrap()).collect();
    parts.sort_unstable();
    parts == [0, 1, 2]
}

/// Calls `f` with every injection of `k` template vertices into `0..n`.
pub fn injections(n: u32, k: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(n: u32, k: usize, used: &mut Vec<bool>, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in 0..n {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                go(n, k, used, cur, f);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    go(n, k, &mut vec![false; n as usize], &mut Vec::with_capacity(k), f);
}

/// Distinct edge-set images of `p` in `host`.
pub fn copies(host: &HostGraph, p: &Pattern) -> BTreeSet<Vec<Triple>> {
    let mut seen = BTreeSet::new();
    injections(host.vertex_count(), p.vertex_count(), &mut |img| {
        let mut edges: Vec<Triple> = p.edges().iter().map(|e| sorted([img[e[0] as usize], img[e[1] as usize], img[e[2] as usize]])).collect();
        if edges.iter().all(|&t| is_host_edge(host, t)) {
            edges.sort_unstable();
            seen.insert(edges);
        }
    });
    seen
}

/// Color of a triple, found by scanning the host's edge list.
pub fn color(c: &Coloring, t: Triple) -> u32 {
    let t = sorted(t);
    let i = c.host().edges().iter().position(|e| sorted(*e) == t).expect("host edge");
    c.colors()[i]
}

/// Dense lookup table from sorted triple to color, for repeated queries.
pub struct ColorTable {
    n: usize,
    table: Vec<u32>,
}

pub const NONE: u32 = u32::MAX;

impl ColorTable {
    pub fn new(c: &Coloring) -> Self {
        let n = c.host().vertex_count() as usize;
        let mut table = vec![NONE; n * n * n];
        for (e, &x) in c.host().edges().iter().zip(c.colors()) {
            let [a, b, d] = sorted(*e);
            table[(a as usize * n + b as usize) * n + d as usize] = x;
        }
        ColorTable { n, table }
    }

    pub fn get(&self, t: Triple) -> u32 {
        let [a, b, d] = sorted(t);
        self.table[(a as usize * self.n + b as usize) * self.n + d as usize]
    }
}

/// Is there an injection of `p` whose edges are host edges with pairwise
/// distinct colors (`rainbow`) or one common color (`!rainbow`)?
pub fn brute_copy(c: &Coloring, p: &Pattern, rainbow: bool) -> bool {
    let table = ColorTable::new(c);
    let mut found = false;
    let mut cols = Vec::with_capacity(p.edge_count());
    injections(c.host().vertex_count(), p.vertex_count(), &mut |img| {
        if found {
            return;
        }
        cols.clear();
        for e in p.edges() {
            let x = table.get([img[e[0] as usize], img[e[1] as usize], img[e[2] as usize]]);
            if x == NONE {
                return;
            }
            cols.push(x);
        }
        let mut d = cols.clone();
        d.sort_unstable();
        d.dedup();
        found = if rainbow { d.len() == cols.len() } else { d.len() == 1 };
    });
    found
}

pub fn brute_rainbow(c: &Coloring, p: &Pattern) -> bool {
    brute_copy(c, p, true)
}

/// Every set partition of `0..m` as a restricted growth string.
pub fn set_partitions(m: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(i: usize, m: usize, max: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i == m {
            f(cur);
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for x in 0..=top {
            cur.push(x);
            go(i + 1, m, max.max(x), cur, f);
            cur.pop();
        }
    }
    go(0, m, 0, &mut Vec::with_capacity(m), f);
}

/// Vertices of `e` as a membership test.
pub fn meets(e: Triple, f: Triple) -> bool {
    f.iter().any(|v| e.contains(v))
}
