//! Seeded random colorings carrying a prescribed structure.
//!
//! Every sampler produces a coloring with at least three colors that has the
//! named structure and no rainbow copy of the corresponding path.

use std::fmt;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::error::BadParameters;
use crate::hypergraph::{overlap, HostGraph, Triple, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SampleCase {
    TightPartition,
    MonoMinusVertex,
    SpecialEdge,
    TwoApex,
    NearMonoMinusVertex,
    SpecialEdge3,
    MpApexPartition,
    MpBasePartition,
    MpTwoApex,
    MpUniqueEdge,
    MpFiveVertex,
}

impl SampleCase {
    pub const ALL: [SampleCase; 11] = [
        SampleCase::TightPartition,
        SampleCase::MonoMinusVertex,
        SampleCase::SpecialEdge,
        SampleCase::TwoApex,
        SampleCase::NearMonoMinusVertex,
        SampleCase::SpecialEdge3,
        SampleCase::MpApexPartition,
        SampleCase::MpBasePartition,
        SampleCase::MpTwoApex,
        SampleCase::MpUniqueEdge,
        SampleCase::MpFiveVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleCase::TightPartition => "TIGHT_PARTITION",
            SampleCase::MonoMinusVertex => "MONO_MINUS_VERTEX",
            SampleCase::SpecialEdge => "SPECIAL_EDGE",
            SampleCase::TwoApex => "TWO_APEX",
            SampleCase::NearMonoMinusVertex => "NEAR_MONO_MINUS_VERTEX",
            SampleCase::SpecialEdge3 => "SPECIAL_EDGE3",
            SampleCase::MpApexPartition => "MP_APEX_PARTITION",
            SampleCase::MpBasePartition => "MP_BASE_PARTITION",
            SampleCase::MpTwoApex => "MP_TWO_APEX",
            SampleCase::MpUniqueEdge => "MP_UNIQUE_EDGE",
            SampleCase::MpFiveVertex => "MP_FIVE_VERTEX",
        }
    }

    pub fn is_tripartite(self) -> bool {
        self.name().starts_with("MP_")
    }

    /// Smallest `n` (vertices, or part size for tripartite cases).
    pub fn min_n(self) -> u32 {
        match self {
            SampleCase::TightPartition => 6,
            c if c.is_tripartite() => 3,
            _ => 7,
        }
    }
}

impl fmt::Display for SampleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SampleCase {
    type Err = BadParameters;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        SampleCase::ALL.into_iter().find(|c| c.name() == up).ok_or_else(|| BadParameters(format!("unknown sample case {s:?}")))
    }
}

/// Sample from `ChaCha8` seeded with `seed`; same seed, same coloring.
pub fn sample_structured(case: SampleCase, n: u32, seed: u64) -> Result<Coloring, BadParameters> {
    sample_with(case, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn sample_with<R: Rng + ?Sized>(case: SampleCase, n: u32, rng: &mut R) -> Result<Coloring, BadParameters> {
    if n < case.min_n() {
        return Err(BadParameters(format!("{case} needs n >= {}, got {n}", case.min_n())));
    }
    let host = if case.is_tripartite() { HostGraph::tripartite(n, n, n) } else { HostGraph::complete(n) }
        .map_err(|e| BadParameters(e.to_string()))?;
    let mut s = Sketch { colors: vec![0; host.edge_count()], host };
    match case {
        SampleCase::TightPartition => tight_partition(&mut s, rng),
        SampleCase::MonoMinusVertex => mono_minus_vertex(&mut s, rng),
        SampleCase::SpecialEdge => special_edge(&mut s, rng),
        SampleCase::TwoApex => two_apex(&mut s, rng, None),
        SampleCase::NearMonoMinusVertex => near_mono(&mut s, rng),
        SampleCase::SpecialEdge3 => special_edge3(&mut s, rng),
        SampleCase::MpApexPartition => mp_apex(&mut s, rng),
        SampleCase::MpBasePartition => mp_base(&mut s, rng),
        SampleCase::MpTwoApex => {
            let parts = pick_parts(rng);
            let x1 = part_vertex(&s.host, parts[0], rng);
            let y1 = part_vertex(&s.host, parts[1], rng);
            two_apex(&mut s, rng, Some((x1, y1)))
        }
        SampleCase::MpUniqueEdge => mp_unique_edge(&mut s, rng),
        SampleCase::MpFiveVertex => mp_five_vertex(&mut s, rng),
    }
    let c = Coloring::new(s.host, s.colors).expect("one color per edge");
    debug_assert!(c.palette_size() >= 3, "{case} sample has {} colors", c.palette_size());
    Ok(c)
}

/// Host plus a mutable color per edge; color 0 is the base.
struct Sketch {
    host: HostGraph,
    colors: Vec<Color>,
}

impl Sketch {
    fn set(&mut self, t: Triple, x: Color) {
        let id = self.host.edge_rank(t).expect("sampler edges are host edges");
        self.colors[id.index()] = x;
    }
}

fn shuffled<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = (0..n).collect();
    v.shuffle(rng);
    v
}

/// Number of compositions of `m` into parts of size at least 3.
fn compositions(m: usize) -> Vec<u128> {
    let mut c = vec![0u128; m + 1];
    c[0] = 1;
    for k in 3..=m {
        c[k] = (3..=k).map(|s| c[k - s]).sum();
    }
    c
}

/// Uniform composition of `n` into at least two parts of size at least 3.
fn composition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let counts = compositions(n);
    loop {
        let mut parts = Vec::new();
        let mut left = n;
        while left > 0 {
            let mut r = rng.random_range(0..counts[left]);
            let size = (3..=left)
                .find(|&s| {
                    if r < counts[left - s] {
                        true
                    } else {
                        r -= counts[left - s];
                        false
                    }
                })
                .expect("counts add up");
            parts.push(size);
            left -= size;
        }
        if parts.len() >= 2 {
            return parts;
        }
    }
}

/// Random colors from `1..=k` (or `0..=k` with `base`) with at least two
/// distinct non-base colors among them.
fn varied<R: Rng + ?Sized>(len: usize, k: Color, with_base: bool, rng: &mut R) -> Vec<Color> {
    assert!(len >= 2 && k >= 2);
    let lo = if with_base { 0 } else { 1 };
    loop {
        let v: Vec<Color> = (0..len).map(|_| rng.random_range(lo..=k)).collect();
        let mut nb: Vec<Color> = v.iter().copied().filter(|&x| x != 0).collect();
        nb.sort_unstable();
        nb.dedup();
        if nb.len() >= 2 {
            return v;
        }
    }
}

fn tight_partition<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let n = s.host.vertex_count();
    let order = shuffled(n, rng);
    let sizes = composition(n as usize, rng);
    let mut start = 0;
    for (k, &size) in sizes.iter().enumerate() {
        let mut part: Vec<Vertex> = order[start..start + size].to_vec();
        part.sort_unstable();
        start += size;
        let color = k as Color + 1;
        let inside: Vec<Triple> = s.host.edges().iter().copied().filter(|e| e.iter().all(|v| part.contains(v))).collect();
        loop {
            let pick: Vec<bool> = inside.iter().map(|_| rng.random_bool(0.5)).collect();
            if pick.iter().any(|&b| b) {
                for (e, b) in inside.iter().zip(pick) {
                    s.set(*e, if b { color } else { 0 });
                }
                break;
            }
        }
    }
}

fn mono_minus_vertex<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let order = shuffled(s.host.vertex_count(), rng);
    let u = order[0];
    if rng.random_bool(0.5) {
        // star at w in the link of u: edges u w x
        let w = order[1];
        let xs = &order[2..];
        let k = rng.random_range(2..=xs.len() as Color);
        let cols = varied(xs.len(), k, true, rng);
        for (&x, c) in xs.iter().zip(cols) {
            s.set([u, w, x], c);
        }
    } else {
        // triangle a b c in the link of u
        let (a, b, c) = (order[1], order[2], order[3]);
        let cols = varied(3, 3, false, rng);
        for (t, x) in [[u, a, b], [u, b, c], [u, a, c]].into_iter().zip(cols) {
            s.set(t, x);
        }
    }
}

/// Edges meeting `e` in exactly two vertices, grouped by the pair kept.
fn flank(host: &HostGraph, e: &Triple) -> [Vec<Triple>; 3] {
    let mut sides: [Vec<Triple>; 3] = [vec![], vec![], vec![]];
    for f in host.edges() {
        if overlap(e, f) == 2 {
            let missing = e.iter().position(|v| !f.contains(v)).unwrap();
            sides[missing].push(*f);
        }
    }
    sides
}

fn third(e: &Triple, f: &Triple) -> Vertex {
    *f.iter().find(|v| !e.contains(v)).unwrap()
}

fn random_edge<R: Rng + ?Sized>(host: &HostGraph, rng: &mut R) -> Triple {
    host.edges()[rng.random_range(0..host.edge_count())]
}

fn special_edge<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let e = random_edge(&s.host, rng);
    let sides = flank(&s.host, &e);
    s.set(e, 1);
    match rng.random_range(0..3) {
        0 => {
            // one side only: colors are free
            let side = &sides[rng.random_range(0..3)];
            let take = rng.random_range(2..=side.len());
            let chosen: Vec<Triple> = side.sample(rng, take).copied().collect();
            let k = rng.random_range(2..=take as Color + 1);
            let cols = varied(take, k, false, rng);
            let cols = if cols.iter().all(|&x| x == 1) { vec![2; take] } else { cols };
            for (f, x) in chosen.into_iter().zip(cols) {
                s.set(f, x);
            }
        }
        1 => {
            // any sides, one shared color
            let all: Vec<Triple> = sides.iter().flatten().copied().collect();
            let take = rng.random_range(1..=all.len());
            for f in all.sample(rng, take) {
                s.set(*f, 2);
            }
        }
        _ => {
            // a fan sharing one third vertex: colors are free
            let x = third(&e, &sides[0][rng.random_range(0..sides[0].len())]);
            let fan: Vec<Triple> = sides.iter().map(|side| *side.iter().find(|f| third(&e, f) == x).unwrap()).collect();
            let cols = varied(3, 4, false, rng);
            for (f, c) in fan.into_iter().zip(cols) {
                s.set(f, c);
            }
        }
    }
}

fn two_apex<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R, apex: Option<(Vertex, Vertex)>) {
    let (u, v) = apex.unwrap_or_else(|| {
        let o = shuffled(s.host.vertex_count(), rng);
        (o[0], o[1])
    });
    let through: Vec<Triple> = s.host.edges().iter().copied().filter(|e| e.contains(&u) && e.contains(&v)).collect();
    let k = rng.random_range(2..=through.len() as Color);
    let cols = varied(through.len(), k, true, rng);
    for (e, x) in through.into_iter().zip(cols) {
        s.set(e, x);
    }
}

fn near_mono<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let o = shuffled(s.host.vertex_count(), rng);
    let (v, a, b, c) = (o[0], o[1], o[2], o[3]);
    let cols = varied(4, 4, true, rng);
    for (t, x) in [[v, a, b], [v, a, c], [v, b, c], [a, b, c]].into_iter().zip(cols) {
        s.set(t, x);
    }
}

fn special_edge3<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let e = random_edge(&s.host, rng);
    s.set(e, 1);
    for side in flank(&s.host, &e) {
        let take = rng.random_range(2..=side.len());
        for f in side.sample(rng, take) {
            s.set(*f, 2);
        }
    }
}

fn pick_parts<R: Rng + ?Sized>(rng: &mut R) -> [usize; 3] {
    let mut p = [0, 1, 2];
    p.shuffle(rng);
    p
}

fn part_vertex<R: Rng + ?Sized>(host: &HostGraph, p: usize, rng: &mut R) -> Vertex {
    let r = host.part_range(p).expect("tripartite");
    rng.random_range(r)
}

/// Random map of `items` onto `k` labels, every label used.
fn surjection<R: Rng + ?Sized>(items: &[Vertex], k: usize, rng: &mut R) -> Vec<usize> {
    let mut label: Vec<usize> = (0..items.len()).map(|i| if i < k { i } else { rng.random_range(0..k) }).collect();
    label.shuffle(rng);
    label
}

fn mp_apex<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let part = rng.random_range(0..3);
    let verts: Vec<Vertex> = s.host.part_range(part).unwrap().collect();
    let k = rng.random_range(3..=verts.len());
    let label = surjection(&verts, k, rng);
    for (i, e) in s.host.edges().iter().enumerate() {
        let v = e[part];
        let idx = verts.iter().position(|&w| w == v).unwrap();
        s.colors[i] = label[idx] as Color;
    }
}

fn mp_base<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let n = s.host.vertex_count() / 3;
    let groups = rng.random_range(2..=n as usize);
    let mut owner = vec![0usize; s.host.vertex_count() as usize];
    for p in 0..3 {
        let verts: Vec<Vertex> = s.host.part_range(p).unwrap().collect();
        for (v, g) in verts.iter().zip(surjection(&verts, groups, rng)) {
            owner[*v as usize] = g;
        }
    }
    for g in 0..groups {
        let color = g as Color + 1;
        let inside: Vec<usize> =
            (0..s.host.edge_count()).filter(|&i| s.host.edges()[i].iter().all(|&v| owner[v as usize] == g)).collect();
        loop {
            let pick: Vec<bool> = inside.iter().map(|_| rng.random_bool(0.5)).collect();
            if pick.iter().any(|&b| b) {
                for (&i, b) in inside.iter().zip(pick) {
                    s.colors[i] = if b { color } else { 0 };
                }
                break;
            }
        }
    }
}

fn mp_unique_edge<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let e = random_edge(&s.host, rng);
    let near: Vec<Triple> = flank(&s.host, &e).into_iter().flatten().collect();
    let take = rng.random_range(1..=near.len());
    for f in near.sample(rng, take) {
        s.set(*f, 2);
    }
    s.set(e, 1);
}

fn mp_five_vertex<R: Rng + ?Sized>(s: &mut Sketch, rng: &mut R) {
    let [px, py, pz] = pick_parts(rng);
    let x1 = part_vertex(&s.host, px, rng);
    let ys: Vec<Vertex> = s.host.part_range(py).unwrap().collect::<Vec<_>>().sample(rng, 2).copied().collect();
    let zs: Vec<Vertex> = s.host.part_range(pz).unwrap().collect::<Vec<_>>().sample(rng, 2).copied().collect();
    let (y1, y2, z1, z2) = (ys[0], ys[1], zs[0], zs[1]);
    s.set([x1, y1, z1], 1);
    s.set([x1, y2, z2], 1);
    s.set([x1, y1, z2], 2);
    s.set([x1, y2, z1], 2);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::find_rainbow_copy;
    use crate::pattern::Pattern;

    fn path_for(case: SampleCase) -> Pattern {
        match case {
            SampleCase::TightPartition | SampleCase::MpBasePartition => Pattern::tight(),
            SampleCase::MpApexPartition => Pattern::messy(),
            _ => Pattern::loose(),
        }
    }

    #[test]
    fn samples_are_rainbow_free_with_three_colors() {
        for case in SampleCase::ALL {
            for seed in 0..40 {
                for n in [case.min_n(), case.min_n() + 1] {
                    let c = sample_structured(case, n, seed).unwrap();
                    assert!(c.palette_size() >= 3, "{case} n={n} seed={seed}");
                    assert!(find_rainbow_copy(&c, &path_for(case)).is_none(), "{case} n={n} seed={seed}");
                }
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        for case in SampleCase::ALL {
            let a = sample_structured(case, 8, 11).unwrap();
            let b = sample_structured(case, 8, 11).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn composition_counts() {
        // parts >= 3: 1, 0, 0, 1, 1, 1, 2, 3, 4, 6, 9
        assert_eq!(compositions(10), vec![1, 0, 0, 1, 1, 1, 2, 3, 4, 6, 9]);
    }

    #[test]
    fn case_names_round_trip() {
        for case in SampleCase::ALL {
            assert_eq!(case.name().parse::<SampleCase>().unwrap(), case);
        }
        assert!(sample_structured(SampleCase::TightPartition, 5, 0).is_err());
        assert!(sample_structured(SampleCase::MpFiveVertex, 2, 0).is_err());
    }
}
