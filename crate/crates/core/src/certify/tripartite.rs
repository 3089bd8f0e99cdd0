//! Certifiers on balanced tripartite hosts `K_{n,n,n}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::certify::complete::{checked, color_spans, disjoint_spans, require_palette, require_rainbow_free};
use crate::certify::{verify_certificate, AlignedGroup, ColorClass, Precondition, Rejection, TriCertificate};
use crate::coloring::{Color, Coloring};
use crate::hypergraph::{overlap, HostKind, Triple, Vertex};
use crate::pattern::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TriTheorem {
    MpTight,
    MpMessy,
    MpLoose,
}

impl TriTheorem {
    /// The path the theorem forbids.
    pub fn pattern(self) -> Pattern {
        match self {
            TriTheorem::MpTight => Pattern::tight(),
            TriTheorem::MpMessy => Pattern::messy(),
            TriTheorem::MpLoose => Pattern::loose(),
        }
    }
}

impl fmt::Display for TriTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriTheorem::MpTight => "MP_TIGHT",
            TriTheorem::MpMessy => "MP_MESSY",
            TriTheorem::MpLoose => "MP_LOOSE",
        })
    }
}

impl FromStr for TriTheorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "MP_TIGHT" | "TIGHT" | "T" => Ok(TriTheorem::MpTight),
            "MP_MESSY" | "MESSY" | "M" => Ok(TriTheorem::MpMessy),
            "MP_LOOSE" | "LOOSE" | "L" => Ok(TriTheorem::MpLoose),
            _ => Err(format!("unknown tripartite theorem {s:?}")),
        }
    }
}

fn require_balanced(c: &Coloring) -> Result<u32, Precondition> {
    match c.host().kind() {
        HostKind::Tripartite { sizes: [a, b, d] } if a == b && b == d => {
            if a < 3 {
                Err(Precondition::HostTooSmall { n: a, min: 3 })
            } else {
                Ok(a)
            }
        }
        _ => Err(Precondition::WrongHost(format!("need K(n,n,n), got {}", c.host()))),
    }
}

/// Color of every edge through `v`, or `None` if they differ.
fn single_colors(c: &Coloring) -> Vec<Option<Color>> {
    let n = c.host().vertex_count() as usize;
    let mut seen: Vec<Option<Color>> = vec![None; n];
    let mut mixed = vec![false; n];
    for (e, &x) in c.host().edges().iter().zip(c.colors()) {
        for &v in e {
            let v = v as usize;
            match seen[v] {
                None => seen[v] = Some(x),
                Some(y) if y != x => mixed[v] = true,
                _ => {}
            }
        }
    }
    seen.into_iter().zip(mixed).map(|(s, m)| if m { None } else { s }).collect()
}

fn apex_partition(c: &Coloring) -> Option<TriCertificate> {
    let single = single_colors(c);
    for part in 0..3 {
        let range = c.host().part_range(part).expect("tripartite");
        if range.clone().any(|v| single[v as usize].is_none()) {
            continue;
        }
        let mut classes: Vec<ColorClass> = Vec::new();
        for v in range {
            let x = single[v as usize].unwrap();
            match classes.iter_mut().find(|k| k.color == x) {
                Some(k) => k.vertices.push(v),
                None => classes.push(ColorClass { color: x, vertices: vec![v] }),
            }
        }
        classes.sort_by_key(|k| k.color);
        return Some(TriCertificate::MpApexPartition { part, classes });
    }
    None
}

fn base_partition(c: &Coloring) -> Option<TriCertificate> {
    let spans = color_spans(c);
    let n = c.host().vertex_count();
    for base in 0..c.palette_size() {
        let Some(groups) = disjoint_spans(&spans, base) else { continue };
        let mut owner = vec![usize::MAX; n as usize];
        for (k, (_, vs)) in groups.iter().enumerate() {
            for &v in vs {
                owner[v as usize] = k;
            }
        }
        let mut aligned: Vec<AlignedGroup> =
            groups.iter().map(|(color, _)| AlignedGroup { color: *color, parts: [vec![], vec![], vec![]] }).collect();
        for v in 0..n {
            let p = c.host().part_of(v).expect("tripartite");
            let k = if owner[v as usize] == usize::MAX { 0 } else { owner[v as usize] };
            aligned[k].parts[p].push(v);
        }
        let cert = TriCertificate::MpBasePartition { base_color: base, groups: aligned };
        if verify_certificate(c, &cert.clone().into()).is_ok() {
            return Some(cert);
        }
    }
    None
}

fn two_apex(c: &Coloring) -> Option<TriCertificate> {
    let n = c.host().vertex_count() as usize;
    for base in 0..c.palette_size() {
        let mut common = vec![true; n];
        for (e, &x) in c.host().edges().iter().zip(c.colors()) {
            if x != base {
                for (v, keep) in common.iter_mut().enumerate() {
                    *keep &= e.contains(&(v as Vertex));
                }
            }
        }
        let mut apex = (0..n).filter(|&v| common[v]);
        if let (Some(x1), Some(y1)) = (apex.next(), apex.next()) {
            return Some(TriCertificate::MpTwoApex { x1: x1 as Vertex, y1: y1 as Vertex, base_color: base });
        }
    }
    None
}

fn unique_edge(c: &Coloring) -> Option<TriCertificate> {
    if c.palette_size() != 3 {
        return None;
    }
    let sizes = c.class_sizes();
    let edges = c.host().edges();
    for unique in 0..3u32 {
        if sizes[unique as usize] != 1 {
            continue;
        }
        let i = c.colors().iter().position(|&x| x == unique).unwrap();
        let e = edges[i];
        for second in (0..3).filter(|&s| s != unique) {
            let ok = edges.iter().zip(c.colors()).all(|(f, &x)| x != second || overlap(&e, f) == 2);
            if ok {
                return Some(TriCertificate::MpUniqueEdge { edge: e, unique_color: unique, second_color: second });
            }
        }
    }
    None
}

fn five_vertex(c: &Coloring) -> Option<TriCertificate> {
    if c.palette_size() != 3 {
        return None;
    }
    let sizes = c.class_sizes();
    let class = |x: Color| -> Vec<Triple> {
        c.host().edges().iter().zip(c.colors()).filter(|(_, &y)| y == x).map(|(e, _)| *e).collect()
    };
    for color1 in 0..3u32 {
        for color2 in (0..3).filter(|&x| x != color1) {
            if sizes[color1 as usize] != 2 || sizes[color2 as usize] != 2 {
                continue;
            }
            let color3 = 3 - color1 - color2;
            let (a, b) = (class(color1), class(color2));
            let (e1, e2) = (a[0], a[1]);
            // x1 is the single shared vertex of the two color1 edges
            let shared: Vec<Vertex> = e1.iter().copied().filter(|v| e2.contains(v)).collect();
            let [x1] = shared[..] else { continue };
            let px = c.host().part_of(x1).unwrap();
            let (py, pz) = match px {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let in_part = |e: &Triple, p: usize| *e.iter().find(|&&v| c.host().part_of(v) == Some(p)).unwrap();
            let (y1, z1, y2, z2) = (in_part(&e1, py), in_part(&e1, pz), in_part(&e2, py), in_part(&e2, pz));
            let mut want = vec![sort3([x1, y1, z2]), sort3([x1, y2, z1])];
            want.sort_unstable();
            let mut got = b.clone();
            got.sort_unstable();
            if want == got {
                return Some(TriCertificate::MpFiveVertex { x1, y1, y2, z1, z2, color1, color2, color3 });
            }
        }
    }
    None
}

fn sort3(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

/// Certify a rainbow-path-free coloring of `K_{n,n,n}` against the
/// structure theorem for the chosen path, cases in the theorem's order.
pub fn certify_tripartite(c: &Coloring, theorem: TriTheorem) -> Result<TriCertificate, Rejection> {
    require_balanced(c)?;
    require_palette(c, 3)?;
    require_rainbow_free(c, &theorem.pattern())?;
    let found = match theorem {
        TriTheorem::MpTight => apex_partition(c).or_else(|| base_partition(c)),
        TriTheorem::MpMessy => apex_partition(c),
        TriTheorem::MpLoose => two_apex(c).or_else(|| unique_edge(c)).or_else(|| five_vertex(c)),
    };
    match found {
        Some(cert) => checked(c, cert),
        None => Err(Rejection::violation(format!("rainbow-free coloring matches no {theorem} case"), c)),
    }
}
