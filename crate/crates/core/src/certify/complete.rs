//! Certifiers on complete hosts.

use serde::Serialize;

use crate::certify::{
    verify_certificate, Certificate, ColorClass, LooseCertificate, LoosePlusCertificate, Precondition, Rejection,
    TightCertificate,
};
use crate::coloring::{Color, Coloring};
use crate::embed::{find_rainbow_copy, Embedding};
use crate::hypergraph::{overlap, Triple, Vertex};
use crate::pattern::Pattern;

pub(crate) fn require_complete(c: &Coloring, min_n: u32) -> Result<(), Precondition> {
    if !c.host().is_complete() {
        return Err(Precondition::WrongHost(format!("need a complete host, got {}", c.host())));
    }
    let n = c.host().vertex_count();
    if n < min_n {
        return Err(Precondition::HostTooSmall { n, min: min_n });
    }
    Ok(())
}

pub(crate) fn require_palette(c: &Coloring, min: u32) -> Result<(), Precondition> {
    let palette = c.palette_size();
    if palette < min {
        return Err(Precondition::PaletteTooSmall { palette, min });
    }
    Ok(())
}

pub(crate) fn require_rainbow_free(c: &Coloring, p: &Pattern) -> Result<(), Precondition> {
    match find_rainbow_copy(c, p) {
        Some(witness) => Err(Precondition::RainbowFound { pattern: p.name().to_string(), witness }),
        None => Ok(()),
    }
}

/// Return `cert` if it verifies, otherwise escalate.
pub(crate) fn checked<T: Clone + Into<Certificate>>(c: &Coloring, cert: T) -> Result<T, Rejection> {
    match verify_certificate(c, &cert.clone().into()) {
        Ok(()) => Ok(cert),
        Err(e) => Err(Rejection::violation(format!("certifier produced an invalid certificate: {}", e.0), c)),
    }
}

/// Vertex span of every color class.
pub(crate) fn color_spans(c: &Coloring) -> Vec<Vec<bool>> {
    let n = c.host().vertex_count() as usize;
    let mut spans = vec![vec![false; n]; c.palette_size() as usize];
    for (e, &x) in c.host().edges().iter().zip(c.colors()) {
        for &v in e {
            spans[x as usize][v as usize] = true;
        }
    }
    spans
}

/// Non-base classes with pairwise disjoint spans, as vertex lists by color;
/// `None` if two spans overlap.
pub(crate) fn disjoint_spans(spans: &[Vec<bool>], base: Color) -> Option<Vec<(Color, Vec<Vertex>)>> {
    let n = spans.first().map_or(0, Vec::len);
    let mut owner: Vec<Option<Color>> = vec![None; n];
    let mut out = Vec::new();
    for (x, span) in spans.iter().enumerate() {
        if x as Color == base {
            continue;
        }
        let mut verts = Vec::new();
        for (v, &inside) in span.iter().enumerate() {
            if inside {
                if owner[v].is_some() {
                    return None;
                }
                owner[v] = Some(x as Color);
                verts.push(v as Vertex);
            }
        }
        out.push((x as Color, verts));
    }
    Some(out)
}

/// Partition into parts `V_i` with `{i} ⊆ C(V_i) ⊆ {base, i}` and all other
/// edges of the base color.
///
/// Base colors are tried in increasing order; for each, part `V_i` is the
/// span of color `i`, and vertices outside every span join the part of the
/// lowest non-base color.
pub fn certify_tight(c: &Coloring) -> Result<TightCertificate, Rejection> {
    require_complete(c, 5)?;
    require_palette(c, 3)?;
    require_rainbow_free(c, &Pattern::tight())?;
    let spans = color_spans(c);
    let n = c.host().vertex_count();
    for base in 0..c.palette_size() {
        let Some(mut groups) = disjoint_spans(&spans, base) else { continue };
        let mut covered = vec![false; n as usize];
        for (_, vs) in &groups {
            for &v in vs {
                covered[v as usize] = true;
            }
        }
        groups[0].1.extend((0..n).filter(|&v| !covered[v as usize]));
        groups[0].1.sort_unstable();
        let cert = TightCertificate {
            base_color: base,
            parts: groups.into_iter().map(|(color, vertices)| ColorClass { color, vertices }).collect(),
        };
        if verify_certificate(c, &cert.clone().into()).is_ok() {
            return Ok(cert);
        }
    }
    Err(Rejection::violation("rainbow-T-free coloring with no tight partition", c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MessyVerdict {
    /// At most two colors: nothing to certify.
    Consistent { palette: u32 },
    /// Three or more colors and the forced rainbow copy.
    RainbowWitness { palette: u32, witness: Embedding },
}

/// On `K_n`, `n >= 7`, three or more colors must produce a rainbow messy
/// path.
pub fn certify_messy(c: &Coloring) -> Result<MessyVerdict, Rejection> {
    require_complete(c, 7)?;
    let palette = c.palette_size();
    if palette <= 2 {
        return Ok(MessyVerdict::Consistent { palette });
    }
    match find_rainbow_copy(c, &Pattern::messy()) {
        Some(witness) => Ok(MessyVerdict::RainbowWitness { palette, witness }),
        None => Err(Rejection::violation(format!("rainbow-M-free coloring of K{} with {palette} colors", c.host().vertex_count()), c)),
    }
}

fn mono_minus_vertex(c: &Coloring) -> Option<(Vertex, Color)> {
    let n = c.host().vertex_count();
    (0..n).find_map(|u| {
        let mut it = c.host().edges().iter().zip(c.colors()).filter(|(e, _)| !e.contains(&u)).map(|(_, &x)| x);
        let first = it.next()?;
        it.all(|x| x == first).then_some((u, first))
    })
}

/// Every edge other than `e` not colored `base` meets `e` in two vertices.
fn is_special(c: &Coloring, e: &Triple, base: Color) -> bool {
    c.host().edges().iter().zip(c.colors()).all(|(f, &x)| f == e || x == base || overlap(e, f) == 2)
}

fn special_edge(c: &Coloring, palette_filter: Option<u32>) -> Option<(Triple, Color)> {
    if palette_filter.is_some_and(|p| p != c.palette_size()) {
        return None;
    }
    let edges = c.host().edges();
    for (e, &ce) in edges.iter().zip(c.colors()) {
        for base in 0..c.palette_size() {
            if base != ce && is_special(c, e, base) {
                return Some((*e, base));
            }
        }
    }
    None
}

/// Loose structure: a vertex whose deletion leaves one color (lowest vertex
/// first), else a special edge (lowest `(edge, color)` pair first).
pub fn certify_loose(c: &Coloring) -> Result<LooseCertificate, Rejection> {
    require_complete(c, 7)?;
    require_palette(c, 3)?;
    require_rainbow_free(c, &Pattern::loose())?;
    if let Some((u, mono_color)) = mono_minus_vertex(c) {
        return checked(c, LooseCertificate::MonoMinusVertex { u, mono_color });
    }
    if let Some((edge, base_color)) = special_edge(c, None) {
        return checked(c, LooseCertificate::SpecialEdge { edge, base_color });
    }
    Err(Rejection::violation("rainbow-L-free coloring with neither loose structure", c))
}

fn two_apex(c: &Coloring) -> Option<(Vertex, Vertex, Color)> {
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
        if let (Some(u), Some(v)) = (apex.next(), apex.next()) {
            return Some((u as Vertex, v as Vertex, base));
        }
    }
    None
}

fn near_mono_minus_vertex(c: &Coloring) -> Option<(Vertex, Option<Triple>, Color)> {
    if !(3..=5).contains(&c.palette_size()) {
        return None;
    }
    let n = c.host().vertex_count();
    for v in 0..n {
        let mut counts = vec![0usize; c.palette_size() as usize];
        let mut total = 0;
        for (e, &x) in c.host().edges().iter().zip(c.colors()) {
            if !e.contains(&v) {
                counts[x as usize] += 1;
                total += 1;
            }
        }
        let (mono, &top) = counts.iter().enumerate().max_by_key(|&(x, k)| (*k, std::cmp::Reverse(x)))?;
        if top == total {
            return Some((v, None, mono as Color));
        }
        if top + 1 == total {
            let odd = c
                .host()
                .edges()
                .iter()
                .zip(c.colors())
                .find(|(e, &x)| !e.contains(&v) && x as usize != mono)
                .map(|(e, _)| *e);
            return Some((v, odd, mono as Color));
        }
    }
    None
}

/// Strengthened loose structure, cases tried in order (i), (ii), (iii).
pub fn certify_loose_plus(c: &Coloring) -> Result<LoosePlusCertificate, Rejection> {
    require_complete(c, 7)?;
    require_palette(c, 3)?;
    require_rainbow_free(c, &Pattern::loose())?;
    if let Some((u, v, base_color)) = two_apex(c) {
        return checked(c, LoosePlusCertificate::TwoApex { u, v, base_color });
    }
    if let Some((v, exceptional_edge, mono_color)) = near_mono_minus_vertex(c) {
        return checked(c, LoosePlusCertificate::NearMonoMinusVertex { v, exceptional_edge, mono_color });
    }
    if let Some((edge, base_color)) = special_edge(c, Some(3)) {
        return checked(c, LoosePlusCertificate::SpecialEdge3 { edge, base_color });
    }
    Err(Rejection::violation("rainbow-L-free coloring with none of the three loose structures", c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionId};
    use crate::hypergraph::HostGraph;

    #[test]
    fn tight_lower_bound_n9() {
        let c = build(ConstructionId::TightLb { n: 9 }).unwrap();
        let cert = certify_tight(&c).unwrap();
        assert_eq!(cert.base_color, c.color_of([0, 1, 3]));
        let parts: Vec<_> = cert.parts.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(parts, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
    }

    #[test]
    fn tight_leftover_vertices_merge_into_lowest_part() {
        let c = build(ConstructionId::TightLb { n: 11 }).unwrap();
        let cert = certify_tight(&c).unwrap();
        assert_eq!(cert.parts[0].vertices, vec![0, 1, 2, 9, 10]);
    }

    #[test]
    fn tight_preconditions() {
        let mono = Coloring::monochromatic(HostGraph::complete(7).unwrap());
        assert!(matches!(
            certify_tight(&mono),
            Err(Rejection::PreconditionFailed(Precondition::PaletteTooSmall { palette: 1, min: 3 }))
        ));
        let rainbow = Coloring::rainbow(HostGraph::complete(5).unwrap());
        match certify_tight(&rainbow) {
            Err(Rejection::PreconditionFailed(Precondition::RainbowFound { witness, .. })) => {
                let cols: Vec<_> = witness.edge_images.iter().map(|&e| rainbow.color(e)).collect();
                assert!(crate::embed::all_distinct(&cols));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn messy_verdicts() {
        let two = build(ConstructionId::StarClique2 { n: 7 }).unwrap();
        assert_eq!(certify_messy(&two).unwrap(), MessyVerdict::Consistent { palette: 2 });
        let lb = build(ConstructionId::LooseLb { n: 7 }).unwrap();
        assert!(matches!(certify_messy(&lb).unwrap(), MessyVerdict::RainbowWitness { .. }));
        let k6 = build(ConstructionId::MessyK6).unwrap();
        assert!(matches!(certify_messy(&k6), Err(Rejection::PreconditionFailed(Precondition::HostTooSmall { n: 6, min: 7 }))));
    }

    #[test]
    fn loose_lower_bound() {
        let c = build(ConstructionId::LooseLb { n: 7 }).unwrap();
        assert_eq!(certify_loose(&c).unwrap(), LooseCertificate::MonoMinusVertex { u: 5, mono_color: 0 });
        let c = build(ConstructionId::LooseLb { n: 8 }).unwrap();
        assert_eq!(certify_loose_plus(&c).unwrap(), LoosePlusCertificate::TwoApex { u: 6, v: 7, base_color: 0 });
    }

    #[test]
    fn loose_rejects_rainbow() {
        let c = Coloring::rainbow(HostGraph::complete(7).unwrap());
        assert!(matches!(certify_loose(&c), Err(Rejection::PreconditionFailed(Precondition::RainbowFound { .. }))));
        assert!(matches!(certify_loose_plus(&c), Err(Rejection::PreconditionFailed(Precondition::RainbowFound { .. }))));
    }
}
