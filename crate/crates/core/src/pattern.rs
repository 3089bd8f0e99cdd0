//! Small 3-graph templates: the three paths of length 3 and the auxiliary
//! stars, cycles and matchings, plus user-supplied patterns.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{ParseError, ParseErrorKind, PatternError};
use crate::format::{content_lines, parse_u32};

/// Custom patterns are capped so brute-force automorphism counting stays cheap.
pub const MAX_PATTERN_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PatternKind {
    TightT,
    MessyM,
    LooseL,
    LooseCycleC3,
    LooseStarS2,
    LooseStarS3,
    TightStarDs2,
    TightStarDs3,
    S2PlusS1,
    Ds2PlusDs1,
    Matching2,
    SingleEdge,
    Custom,
}

impl PatternKind {
    pub const CATALOG: [PatternKind; 12] = [
        PatternKind::TightT,
        PatternKind::MessyM,
        PatternKind::LooseL,
        PatternKind::LooseCycleC3,
        PatternKind::LooseStarS2,
        PatternKind::LooseStarS3,
        PatternKind::TightStarDs2,
        PatternKind::TightStarDs3,
        PatternKind::S2PlusS1,
        PatternKind::Ds2PlusDs1,
        PatternKind::Matching2,
        PatternKind::SingleEdge,
    ];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            PatternKind::TightT => "T",
            PatternKind::MessyM => "M",
            PatternKind::LooseL => "L",
            PatternKind::LooseCycleC3 => "C3",
            PatternKind::LooseStarS2 => "S2",
            PatternKind::LooseStarS3 => "S3",
            PatternKind::TightStarDs2 => "DS2",
            PatternKind::TightStarDs3 => "DS3",
            PatternKind::S2PlusS1 => "S2+S1",
            PatternKind::Ds2PlusDs1 => "DS2+DS1",
            PatternKind::Matching2 => "M2",
            PatternKind::SingleEdge => "E",
            PatternKind::Custom => "custom",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            PatternKind::TightT => "TIGHT_T",
            PatternKind::MessyM => "MESSY_M",
            PatternKind::LooseL => "LOOSE_L",
            PatternKind::LooseCycleC3 => "LOOSE_CYCLE_C3",
            PatternKind::LooseStarS2 => "LOOSE_STAR_S2",
            PatternKind::LooseStarS3 => "LOOSE_STAR_S3",
            PatternKind::TightStarDs2 => "TIGHT_STAR_DS2",
            PatternKind::TightStarDs3 => "TIGHT_STAR_DS3",
            PatternKind::S2PlusS1 => "S2_PLUS_S1",
            PatternKind::Ds2PlusDs1 => "DS2_PLUS_DS1",
            PatternKind::Matching2 => "MATCHING2",
            PatternKind::SingleEdge => "SINGLE_EDGE",
            PatternKind::Custom => "CUSTOM",
        }
    }

    fn edges(self) -> &'static [[u32; 3]] {
        match self {
            PatternKind::TightT => &[[0, 1, 2], [1, 2, 3], [2, 3, 4]],
            PatternKind::MessyM => &[[0, 1, 2], [1, 2, 3], [3, 4, 5]],
            PatternKind::LooseL => &[[0, 1, 2], [2, 3, 4], [4, 5, 6]],
            PatternKind::LooseCycleC3 => &[[0, 1, 2], [2, 3, 4], [4, 5, 0]],
            PatternKind::LooseStarS2 => &[[0, 1, 2], [0, 3, 4]],
            PatternKind::LooseStarS3 => &[[0, 1, 2], [0, 3, 4], [0, 5, 6]],
            PatternKind::TightStarDs2 => &[[0, 1, 2], [0, 1, 3]],
            PatternKind::TightStarDs3 => &[[0, 1, 2], [0, 1, 3], [0, 1, 4]],
            PatternKind::S2PlusS1 => &[[0, 1, 2], [0, 3, 4], [5, 6, 7]],
            PatternKind::Ds2PlusDs1 => &[[0, 1, 2], [0, 1, 3], [4, 5, 6]],
            PatternKind::Matching2 => &[[0, 1, 2], [3, 4, 5]],
            PatternKind::SingleEdge => &[[0, 1, 2]],
            PatternKind::Custom => &[],
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.long_name())
    }
}

/// A 3-uniform template on vertices `0..vertex_count`, every vertex covered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pattern {
    kind: PatternKind,
    vertex_count: usize,
    edges: Vec<[u32; 3]>,
    automorphisms: u64,
}

impl Pattern {
    pub fn catalog(kind: PatternKind) -> Pattern {
        assert!(kind != PatternKind::Custom, "custom patterns come from Pattern::custom");
        let edges = kind.edges().to_vec();
        let vertex_count = edges.iter().flatten().max().map_or(0, |&m| m as usize + 1);
        Self::build(kind, vertex_count, edges).expect("catalog patterns are valid")
    }

    pub fn tight() -> Pattern {
        Self::catalog(PatternKind::TightT)
    }

    pub fn messy() -> Pattern {
        Self::catalog(PatternKind::MessyM)
    }

    pub fn loose() -> Pattern {
        Self::catalog(PatternKind::LooseL)
    }

    pub fn custom(vertex_count: usize, edges: Vec<[u32; 3]>) -> Result<Pattern, PatternError> {
        Self::build(PatternKind::Custom, vertex_count, edges)
    }

    fn build(kind: PatternKind, vertex_count: usize, edges: Vec<[u32; 3]>) -> Result<Pattern, PatternError> {
        if vertex_count == 0 || vertex_count > MAX_PATTERN_VERTICES {
            return Err(PatternError::VertexCount { got: vertex_count, max: MAX_PATTERN_VERTICES });
        }
        if edges.is_empty() {
            return Err(PatternError::NoEdges);
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for e in &edges {
            let mut s = *e;
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] || s[2] as usize >= vertex_count {
                return Err(PatternError::BadEdge(*e));
            }
            if sorted.contains(&s) {
                return Err(PatternError::DuplicateEdge(*e));
            }
            sorted.push(s);
        }
        for v in 0..vertex_count as u32 {
            if !sorted.iter().any(|e| e.contains(&v)) {
                return Err(PatternError::IsolatedVertex(v));
            }
        }
        let automorphisms = count_automorphisms(vertex_count, &sorted);
        Ok(Pattern { kind, vertex_count, edges: sorted, automorphisms })
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.long_name()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[[u32; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Size of the automorphism group, found by brute force over all vertex
    /// permutations.
    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    /// Connected in the sense that the vertex-edge incidence graph is connected.
    pub fn is_connected(&self) -> bool {
        let mut reached = vec![false; self.vertex_count];
        reached[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for e in &self.edges {
                if e.iter().any(|&v| reached[v as usize]) {
                    for &v in e {
                        if !reached[v as usize] {
                            reached[v as usize] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Smallest `t` such that the pattern embeds in `K_{t,t,t}`, or `None` if
    /// it is not 3-partite.
    pub fn tripartite_size(&self) -> Option<usize> {
        // brute force over 3-colorings of the template vertices
        let v = self.vertex_count;
        let mut best: Option<usize> = None;
        let mut part = vec![0u8; v];
        let total = 3usize.pow(v as u32);
        for code in 0..total {
            let mut x = code;
            for p in part.iter_mut() {
                *p = (x % 3) as u8;
                x /= 3;
            }
            let proper = self.edges.iter().all(|e| {
                let (a, b, c) = (part[e[0] as usize], part[e[1] as usize], part[e[2] as usize]);
                a != b && b != c && a != c
            });
            if proper {
                let mut counts = [0usize; 3];
                for &p in &part {
                    counts[p as usize] += 1;
                }
                let t = *counts.iter().max().unwrap();
                best = Some(best.map_or(t, |b: usize| b.min(t)));
            }
        }
        best
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    /// Accepts short (`T`, `M2`, `DS2+DS1`) or long (`TIGHT_T`) names,
    /// case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        PatternKind::CATALOG
            .iter()
            .find(|k| k.short_name().eq_ignore_ascii_case(&upper) || k.long_name() == upper)
            .map(|&k| Pattern::catalog(k))
            .ok_or_else(|| PatternError::UnknownName(s.to_string()))
    }
}

fn edge_mask(e: &[u32; 3]) -> u16 {
    (1 << e[0]) | (1 << e[1]) | (1 << e[2])
}

fn count_automorphisms(v: usize, edges: &[[u32; 3]]) -> u64 {
    let mut target: Vec<u16> = edges.iter().map(edge_mask).collect();
    target.sort_unstable();
    let mut perm: Vec<u32> = (0..v as u32).collect();
    let mut count = 0u64;
    let mut image = Vec::with_capacity(edges.len());
    let mut check = |perm: &[u32]| {
        image.clear();
        image.extend(edges.iter().map(|e| edge_mask(&[perm[e[0] as usize], perm[e[1] as usize], perm[e[2] as usize]])));
        image.sort_unstable();
        if image == target {
            count += 1;
        }
    };
    // Heap's algorithm, iterative
    let mut c = vec![0usize; v];
    check(&perm);
    let mut i = 0;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            check(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Parse the custom-pattern file format: `pattern <vertexcount>` then
/// `e <a> <b> <c>` lines.
pub fn parse_pattern(text: &str) -> Result<Pattern, ParseError> {
    let mut lines = content_lines(text);
    let (first, tokens) = lines.next().ok_or(ParseError::new(0, ParseErrorKind::Empty))?;
    let vertex_count = match tokens.as_slice() {
        ["pattern", v] => parse_u32(v, first, "vertex count")? as usize,
        _ => {
            return Err(ParseError::new(
                first,
                ParseErrorKind::Malformed(format!("expected `pattern <vertexcount>`, got `{}`", tokens.join(" "))),
            ))
        }
    };
    let mut edges = Vec::new();
    let mut last = first;
    for (line, tokens) in lines {
        last = line;
        match tokens.as_slice() {
            ["e", a, b, c] => edges.push([
                parse_u32(a, line, "vertex")?,
                parse_u32(b, line, "vertex")?,
                parse_u32(c, line, "vertex")?,
            ]),
            _ => {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::Malformed(format!("expected `e <a> <b> <c>`, got `{}`", tokens.join(" "))),
                ))
            }
        }
    }
    Pattern::custom(vertex_count, edges).map_err(|e| ParseError::new(last, ParseErrorKind::Malformed(e.to_string())))
}

pub fn write_pattern(p: &Pattern) -> String {
    let mut out = format!("pattern {}\n", p.vertex_count());
    for e in p.edges() {
        out.push_str(&format!("e {} {} {}\n", e[0], e[1], e[2]));
    }
    out
}
