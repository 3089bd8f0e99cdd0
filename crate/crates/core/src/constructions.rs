//! Explicit extremal colorings.
//!
//! Vertices are 0-indexed. On a tripartite host `K_{n,n,n}` the parts are
//! `x_i = i`, `y_i = n + i`, `z_i = 2n + i`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::BadParameters;
use crate::hypergraph::HostGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConstructionId {
    TightLb { n: u32 },
    MessyK6,
    LooseLb { n: u32 },
    StarClique2 { n: u32 },
    MpG1 { n: u32 },
    MpG2 { n: u32 },
    MpG3 { n: u32 },
    /// `j` is a bitmask over parts {1, 2, 3}.
    JCanonical { sizes: [u32; 3], j: u8 },
    JCanonicalOrdered { n: u32, j: u8 },
}

/// Construction names accepted on the command line.
pub const CONSTRUCTION_NAMES: [&str; 9] =
    ["tight-lb", "messy-k6", "loose-lb", "star-clique2", "mp-g1", "mp-g2", "mp-g3", "j-canonical", "j-canonical-ordered"];

impl ConstructionId {
    /// Build an id from a command-line name and parameters. `n` defaults are
    /// the smallest legal host.
    pub fn from_name(name: &str, n: Option<u32>, j: u8) -> Result<ConstructionId, BadParameters> {
        let id = match name.to_ascii_lowercase().replace('_', "-").as_str() {
            "tight-lb" => ConstructionId::TightLb { n: n.unwrap_or(5) },
            "messy-k6" => ConstructionId::MessyK6,
            "loose-lb" => ConstructionId::LooseLb { n: n.unwrap_or(7) },
            "star-clique2" => ConstructionId::StarClique2 { n: n.unwrap_or(6) },
            "mp-g1" => ConstructionId::MpG1 { n: n.unwrap_or(3) },
            "mp-g2" => ConstructionId::MpG2 { n: n.unwrap_or(3) },
            "mp-g3" => ConstructionId::MpG3 { n: n.unwrap_or(3) },
            "j-canonical" => {
                let t = n.unwrap_or(3);
                ConstructionId::JCanonical { sizes: [t; 3], j }
            }
            "j-canonical-ordered" => ConstructionId::JCanonicalOrdered { n: n.unwrap_or(5), j },
            other => return Err(BadParameters(format!("unknown construction {other:?}"))),
        };
        Ok(id)
    }

    /// Palette size of the built coloring.
    pub fn expected_palette(&self) -> u32 {
        match *self {
            ConstructionId::TightLb { n } => n / 3 + 1,
            ConstructionId::MessyK6 => 10,
            ConstructionId::LooseLb { n } => n - 1,
            ConstructionId::StarClique2 { .. } => 2,
            ConstructionId::MpG1 { n } => n,
            ConstructionId::MpG2 { n } | ConstructionId::MpG3 { n } => n + 1,
            ConstructionId::JCanonical { sizes, j } => (0..3).filter(|&i| j & (1 << i) != 0).map(|i| sizes[i]).product(),
            ConstructionId::JCanonicalOrdered { n, j } => ordered_palette(n, j),
        }
    }
}

/// Number of distinct `e:J` projections in `K_n`.
fn ordered_palette(n: u32, j: u8) -> u32 {
    let h = HostGraph::complete(n.max(3)).expect("n >= 3");
    let mut keys: Vec<Vec<u32>> = h.edges().iter().map(|e| (0..3).filter(|&i| j & (1 << i) != 0).map(|i| e[i]).collect()).collect();
    keys.sort();
    keys.dedup();
    keys.len() as u32
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionId::TightLb { n } => write!(f, "TIGHT_LB({n})"),
            ConstructionId::MessyK6 => write!(f, "MESSY_K6"),
            ConstructionId::LooseLb { n } => write!(f, "LOOSE_LB({n})"),
            ConstructionId::StarClique2 { n } => write!(f, "STAR_CLIQUE2({n})"),
            ConstructionId::MpG1 { n } => write!(f, "MP_G1({n})"),
            ConstructionId::MpG2 { n } => write!(f, "MP_G2({n})"),
            ConstructionId::MpG3 { n } => write!(f, "MP_G3({n})"),
            ConstructionId::JCanonical { sizes: [a, b, c], j } => write!(f, "J_CANONICAL({a},{b},{c}; {})", j_string(j)),
            ConstructionId::JCanonicalOrdered { n, j } => write!(f, "J_CANONICAL_ORDERED({n}; {})", j_string(j)),
        }
    }
}

fn j_string(j: u8) -> String {
    let m: Vec<String> = (1..=3).filter(|&i| j & (1 << (i - 1)) != 0).map(|i: u8| i.to_string()).collect();
    format!("{{{}}}", m.join(","))
}

/// Parse `J` written as a comma-separated subset of {1, 2, 3}; empty means ∅.
pub fn parse_j(s: &str) -> Result<u8, BadParameters> {
    let mut mask = 0u8;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok {
            "1" => mask |= 1,
            "2" => mask |= 2,
            "3" => mask |= 4,
            _ => return Err(BadParameters(format!("J must be a subset of {{1,2,3}}, got {tok:?}"))),
        }
    }
    Ok(mask)
}

impl FromStr for ConstructionId {
    type Err = BadParameters;

    /// `name` or `name:n`, e.g. `tight-lb:9`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, n) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b.trim().parse::<u32>().map_err(|_| BadParameters(format!("bad n in {s:?}")))?)),
            None => (s, None),
        };
        ConstructionId::from_name(name.trim(), n, 0)
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<(), BadParameters> {
    if ok {
        Ok(())
    } else {
        Err(BadParameters(msg()))
    }
}

fn complete(n: u32) -> Result<HostGraph, BadParameters> {
    HostGraph::complete(n).map_err(|e| BadParameters(e.to_string()))
}

fn balanced(n: u32) -> Result<HostGraph, BadParameters> {
    need(n >= 3, || format!("multipartite constructions need n >= 3, got {n}"))?;
    HostGraph::tripartite(n, n, n).map_err(|e| BadParameters(e.to_string()))
}

fn colored(host: HostGraph, f: impl Fn(&[u32; 3]) -> u32) -> Coloring {
    let colors = host.edges().iter().map(f).collect();
    Coloring::new(host, colors).expect("one color per edge")
}

/// Color edges by their `J`-projection: for a tripartite host the
/// coordinates are the parts, for a complete host the sorted positions.
pub fn j_canonical(host: &HostGraph, j: u8) -> Result<Coloring, BadParameters> {
    need(j <= 7, || format!("J mask {j} is not a subset of {{1,2,3}}"))?;
    let base = host.vertex_count() + 1;
    Ok(colored(host.clone(), |e| (0..3).filter(|&i| j & (1 << i) != 0).fold(0, |acc, i| acc * base + e[i] + 1)))
}

pub fn build(id: ConstructionId) -> Result<Coloring, BadParameters> {
    match id {
        ConstructionId::TightLb { n } => {
            need(n >= 5, || format!("TIGHT_LB needs n >= 5, got {n}"))?;
            let blocks = n / 3;
            Ok(colored(complete(n)?, |e| {
                let b = e[0] / 3;
                if b < blocks && e[1] / 3 == b && e[2] / 3 == b {
                    b + 1
                } else {
                    0
                }
            }))
        }
        ConstructionId::MessyK6 => {
            let host = complete(6)?;
            // color = rank of the pair's member containing vertex 0
            let through_zero: Vec<[u32; 3]> = host.edges().iter().copied().filter(|e| e[0] == 0).collect();
            Ok(colored(host, |e| {
                let rep = if e[0] == 0 {
                    *e
                } else {
                    let mut rest: Vec<u32> = (0..6).filter(|v| !e.contains(v)).collect();
                    rest.sort_unstable();
                    [rest[0], rest[1], rest[2]]
                };
                through_zero.iter().position(|t| *t == rep).expect("complement contains 0") as u32
            }))
        }
        ConstructionId::LooseLb { n } => {
            need(n >= 7, || format!("LOOSE_LB needs n >= 7, got {n}"))?;
            Ok(colored(complete(n)?, |e| if e[1] == n - 2 && e[2] == n - 1 { e[0] + 1 } else { 0 }))
        }
        ConstructionId::StarClique2 { n } => Ok(colored(complete(n)?, |e| u32::from(e[0] != 0))),
        ConstructionId::MpG1 { n } => Ok(colored(balanced(n)?, |e| e[0])),
        ConstructionId::MpG2 { n } => Ok(colored(balanced(n)?, |e| {
            let i = e[0];
            if e[1] == n + i && e[2] == 2 * n + i {
                i + 1
            } else {
                0
            }
        })),
        ConstructionId::MpG3 { n } => Ok(colored(balanced(n)?, |e| if e[0] == 0 && e[1] == n { e[2] - 2 * n + 1 } else { 0 })),
        ConstructionId::JCanonical { sizes: [a, b, c], j } => {
            let host = HostGraph::tripartite(a, b, c).map_err(|e| BadParameters(e.to_string()))?;
            j_canonical(&host, j)
        }
        ConstructionId::JCanonicalOrdered { n, j } => j_canonical(&complete(n)?, j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{find_monochromatic_copy, find_rainbow_copy};
    use crate::pattern::{Pattern, PatternKind};

    #[test]
    fn palettes_match() {
        let ids = [
            ConstructionId::TightLb { n: 5 },
            ConstructionId::TightLb { n: 9 },
            ConstructionId::TightLb { n: 11 },
            ConstructionId::MessyK6,
            ConstructionId::LooseLb { n: 7 },
            ConstructionId::LooseLb { n: 9 },
            ConstructionId::StarClique2 { n: 6 },
            ConstructionId::MpG1 { n: 4 },
            ConstructionId::MpG2 { n: 3 },
            ConstructionId::MpG3 { n: 5 },
            ConstructionId::JCanonical { sizes: [2, 3, 4], j: 0b110 },
            ConstructionId::JCanonicalOrdered { n: 6, j: 0b011 },
        ];
        for id in ids {
            let c = build(id).unwrap();
            assert_eq!(c.palette_size(), id.expected_palette(), "{id}");
        }
        assert_eq!(ConstructionId::JCanonical { sizes: [2, 3, 4], j: 0b110 }.expected_palette(), 12);
        // pairs (a, b) with a < b < 5 in K6
        assert_eq!(ConstructionId::JCanonicalOrdered { n: 6, j: 0b011 }.expected_palette(), 10);
    }

    #[test]
    fn lower_bound_witnesses_are_rainbow_free() {
        let t = Pattern::tight();
        let m = Pattern::messy();
        let l = Pattern::loose();
        for n in 5..=12 {
            assert!(find_rainbow_copy(&build(ConstructionId::TightLb { n }).unwrap(), &t).is_none());
        }
        assert!(find_rainbow_copy(&build(ConstructionId::MessyK6).unwrap(), &m).is_none());
        for n in 7..=9 {
            assert!(find_rainbow_copy(&build(ConstructionId::LooseLb { n }).unwrap(), &l).is_none());
        }
        for n in 3..=4 {
            assert!(find_rainbow_copy(&build(ConstructionId::MpG1 { n }).unwrap(), &m).is_none());
            assert!(find_rainbow_copy(&build(ConstructionId::MpG2 { n }).unwrap(), &t).is_none());
            assert!(find_rainbow_copy(&build(ConstructionId::MpG3 { n }).unwrap(), &l).is_none());
        }
    }

    #[test]
    fn messy_k6_is_a_matching_decomposition() {
        let c = build(ConstructionId::MessyK6).unwrap();
        assert_eq!(c.class_sizes(), vec![2; 10]);
        for k in 0..10 {
            let class: Vec<_> = c.host().edges().iter().zip(c.colors()).filter(|(_, &x)| x == k).map(|(e, _)| *e).collect();
            let mut cover: Vec<u32> = class.iter().flatten().copied().collect();
            cover.sort_unstable();
            assert_eq!(cover, vec![0, 1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn star_clique_is_intersecting() {
        let m2 = Pattern::catalog(PatternKind::Matching2);
        for n in 6..=7 {
            let c = build(ConstructionId::StarClique2 { n }).unwrap();
            let mono = find_monochromatic_copy(&c, &m2);
            assert_eq!(mono.is_none(), n == 6, "n = {n}");
        }
    }

    #[test]
    fn j_extremes() {
        let empty = build(ConstructionId::JCanonical { sizes: [3, 3, 3], j: 0 }).unwrap();
        assert_eq!(empty.palette_size(), 1);
        let full = build(ConstructionId::JCanonical { sizes: [3, 3, 3], j: 7 }).unwrap();
        assert_eq!(full.palette_size(), 27);
    }

    #[test]
    fn parameter_errors() {
        assert!(build(ConstructionId::TightLb { n: 4 }).is_err());
        assert!(build(ConstructionId::LooseLb { n: 6 }).is_err());
        assert!(build(ConstructionId::MpG1 { n: 2 }).is_err());
        assert!(build(ConstructionId::JCanonical { sizes: [3, 3, 3], j: 8 }).is_err());
        assert!("nope".parse::<ConstructionId>().is_err());
        assert_eq!("loose-lb:8".parse::<ConstructionId>().unwrap(), ConstructionId::LooseLb { n: 8 });
        assert_eq!(parse_j("1,3").unwrap(), 0b101);
        assert_eq!(parse_j("").unwrap(), 0);
        assert!(parse_j("4").is_err());
    }
}
