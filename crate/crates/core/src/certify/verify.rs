//! Direct, edge-by-edge certificate checks.

use thiserror::Error;

use crate::certify::{
    AlignedGroup, Certificate, ColorClass, LooseCertificate, LoosePlusCertificate, TightCertificate, TriCertificate,
};
use crate::coloring::{Color, Coloring};
use crate::hypergraph::{overlap as meet, HostKind, Triple, Vertex};

/// The first certificate clause that fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate rejected: {0}")]
pub struct VerifyError(pub String);

type Check = Result<(), VerifyError>;

fn fail<T>(msg: impl Into<String>) -> Result<T, VerifyError> {
    Err(VerifyError(msg.into()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        fail(msg())
    }
}

/// Check every invariant of `cert` against `c`.
pub fn verify_certificate(c: &Coloring, cert: &Certificate) -> Check {
    match cert {
        Certificate::Tight(t) => verify_tight(c, t),
        Certificate::Loose(l) => verify_loose(c, l),
        Certificate::LoosePlus(l) => verify_loose_plus(c, l),
        Certificate::Tripartite(t) => verify_tri(c, t),
    }
}

fn edges(c: &Coloring) -> impl Iterator<Item = (&Triple, Color)> {
    c.host().edges().iter().zip(c.colors().iter().copied())
}

fn need_complete(c: &Coloring) -> Check {
    ensure(c.host().is_complete(), || "certificate needs a complete host".into())
}

fn check_vertex(c: &Coloring, v: Vertex) -> Check {
    ensure(v < c.host().vertex_count(), || format!("vertex {v} is outside the host"))
}

fn check_color(c: &Coloring, x: Color) -> Check {
    ensure(x < c.palette_size(), || format!("color {x} is not used by the coloring"))
}

fn edge_color(c: &Coloring, e: &Triple) -> Result<Color, VerifyError> {
    c.host().edge_rank(*e).map(|id| c.color(id)).map_err(|_| VerifyError(format!("{e:?} is not an edge of the host")))
}

/// Owner index of each vertex in `classes`, which must cover `domain`
/// exactly once with nonempty classes.
fn class_owner(n: u32, classes: &[&[Vertex]], domain: &[Vertex], what: &str) -> Result<Vec<Option<usize>>, VerifyError> {
    let mut owner = vec![None; n as usize];
    for (k, class) in classes.iter().enumerate() {
        ensure(!class.is_empty(), || format!("{what} {k} is empty"))?;
        for &v in *class {
            ensure(v < n, || format!("vertex {v} is outside the host"))?;
            ensure(owner[v as usize].is_none(), || format!("vertex {v} appears twice in the {what}s"))?;
            owner[v as usize] = Some(k);
        }
    }
    for &v in domain {
        ensure(owner[v as usize].is_some(), || format!("vertex {v} is in no {what}"))?;
    }
    let covered = owner.iter().filter(|o| o.is_some()).count();
    ensure(covered == domain.len(), || format!("{what}s contain vertices outside the partitioned set"))?;
    Ok(owner)
}

fn distinct_colors(colors: impl Iterator<Item = Color>, base: Option<Color>) -> Check {
    let mut seen: Vec<Color> = Vec::new();
    for x in colors {
        ensure(Some(x) != base, || format!("class color {x} equals the base color"))?;
        ensure(!seen.contains(&x), || format!("class color {x} is used twice"))?;
        seen.push(x);
    }
    Ok(())
}

fn verify_tight(c: &Coloring, t: &TightCertificate) -> Check {
    need_complete(c)?;
    check_color(c, t.base_color)?;
    let n = c.host().vertex_count();
    let all: Vec<Vertex> = (0..n).collect();
    let slices: Vec<&[Vertex]> = t.parts.iter().map(|p| p.vertices.as_slice()).collect();
    let owner = class_owner(n, &slices, &all, "part")?;
    distinct_colors(t.parts.iter().map(|p| p.color), Some(t.base_color))?;
    let mut has_own = vec![false; t.parts.len()];
    for (e, x) in edges(c) {
        let (a, b, d) = (owner[e[0] as usize], owner[e[1] as usize], owner[e[2] as usize]);
        if a == b && b == d {
            let k = a.expect("covered");
            let own = t.parts[k].color;
            ensure(x == t.base_color || x == own, || format!("internal edge {e:?} of part {k} has color {x}"))?;
            has_own[k] |= x == own;
        } else {
            ensure(x == t.base_color, || format!("crossing edge {e:?} has color {x}, not base {}", t.base_color))?;
        }
    }
    if let Some(k) = has_own.iter().position(|&h| !h) {
        return fail(format!("part {k} has no edge of its color {}", t.parts[k].color));
    }
    Ok(())
}

fn check_mono_minus(c: &Coloring, u: Vertex, mono: Color) -> Check {
    check_vertex(c, u)?;
    for (e, x) in edges(c) {
        if !e.contains(&u) {
            ensure(x == mono, || format!("edge {e:?} avoids {u} but has color {x}, not {mono}"))?;
        }
    }
    Ok(())
}

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

fn check_special_edge(c: &Coloring, edge: &Triple, base: Color) -> Check {
    let edge = &sorted(*edge);
    let ce = edge_color(c, edge)?;
    ensure(ce != base, || format!("special edge {edge:?} has the base color {base}"))?;
    for (f, x) in edges(c) {
        if f != edge && x != base {
            ensure(meet(f, edge) == 2, || format!("edge {f:?} of color {x} meets {edge:?} in {} vertices", meet(f, edge)))?;
        }
    }
    Ok(())
}

fn check_two_apex(c: &Coloring, u: Vertex, v: Vertex, base: Color) -> Check {
    check_vertex(c, u)?;
    check_vertex(c, v)?;
    ensure(u != v, || "apex vertices coincide".into())?;
    for (e, x) in edges(c) {
        if x != base {
            ensure(e.contains(&u) && e.contains(&v), || format!("edge {e:?} of color {x} misses an apex"))?;
        }
    }
    Ok(())
}

fn verify_loose(c: &Coloring, l: &LooseCertificate) -> Check {
    need_complete(c)?;
    match l {
        LooseCertificate::MonoMinusVertex { u, mono_color } => check_mono_minus(c, *u, *mono_color),
        LooseCertificate::SpecialEdge { edge, base_color } => check_special_edge(c, edge, *base_color),
    }
}

fn verify_loose_plus(c: &Coloring, l: &LoosePlusCertificate) -> Check {
    need_complete(c)?;
    match l {
        LoosePlusCertificate::TwoApex { u, v, base_color } => check_two_apex(c, *u, *v, *base_color),
        LoosePlusCertificate::NearMonoMinusVertex { v, exceptional_edge, mono_color } => {
            let p = c.palette_size();
            ensure((3..=5).contains(&p), || format!("palette size {p} is not in 3..=5"))?;
            check_vertex(c, *v)?;
            let exceptional_edge = &exceptional_edge.map(sorted);
            if let Some(x) = exceptional_edge {
                edge_color(c, x)?;
                ensure(!x.contains(v), || format!("exceptional edge {x:?} contains {v}"))?;
            }
            for (e, x) in edges(c) {
                if !e.contains(v) && Some(*e) != *exceptional_edge {
                    ensure(x == *mono_color, || format!("edge {e:?} avoids {v} but has color {x}, not {mono_color}"))?;
                }
            }
            Ok(())
        }
        LoosePlusCertificate::SpecialEdge3 { edge, base_color } => {
            let p = c.palette_size();
            ensure(p == 3, || format!("palette size {p} is not 3"))?;
            check_special_edge(c, edge, *base_color)
        }
    }
}

fn tripartite_parts(c: &Coloring) -> Result<[Vec<Vertex>; 3], VerifyError> {
    match c.host().kind() {
        HostKind::Tripartite { .. } => Ok([0, 1, 2].map(|p| c.host().part_range(p).expect("tripartite").collect())),
        HostKind::Complete { .. } => fail("certificate needs a tripartite host"),
    }
}

fn verify_tri(c: &Coloring, t: &TriCertificate) -> Check {
    let parts = tripartite_parts(c)?;
    let n = c.host().vertex_count();
    let palette = c.palette_size();
    match t {
        TriCertificate::MpApexPartition { part, classes } => {
            ensure(*part < 3, || format!("part index {part} out of range"))?;
            let slices: Vec<&[Vertex]> = classes.iter().map(|k: &ColorClass| k.vertices.as_slice()).collect();
            let owner = class_owner(n, &slices, &parts[*part], "class")?;
            distinct_colors(classes.iter().map(|k| k.color), None)?;
            for (e, x) in edges(c) {
                let v = e.iter().copied().find(|v| owner[*v as usize].is_some()).expect("edge meets every part");
                let want = classes[owner[v as usize].unwrap()].color;
                ensure(x == want, || format!("edge {e:?} through {v} has color {x}, class color {want}"))?;
            }
            Ok(())
        }
        TriCertificate::MpBasePartition { base_color, groups } => {
            check_color(c, *base_color)?;
            distinct_colors(groups.iter().map(|g: &AlignedGroup| g.color), Some(*base_color))?;
            let mut owner = vec![None; n as usize];
            for (p, dom) in parts.iter().enumerate() {
                let slices: Vec<&[Vertex]> = groups.iter().map(|g| g.parts[p].as_slice()).collect();
                // groups may be empty within one part; cover check only
                for (k, s) in slices.iter().enumerate() {
                    for &v in *s {
                        ensure(dom.contains(&v), || format!("vertex {v} listed in part {p} of group {k} lies elsewhere"))?;
                        ensure(owner[v as usize].is_none(), || format!("vertex {v} appears twice"))?;
                        owner[v as usize] = Some(k);
                    }
                }
                for &v in dom {
                    ensure(owner[v as usize].is_some(), || format!("vertex {v} of part {p} is in no group"))?;
                }
            }
            for (e, x) in edges(c) {
                let (a, b, d) = (owner[e[0] as usize], owner[e[1] as usize], owner[e[2] as usize]);
                if a == b && b == d {
                    let g = groups[a.unwrap()].color;
                    ensure(x == *base_color || x == g, || format!("edge {e:?} inside group of color {g} has color {x}"))?;
                } else {
                    ensure(x == *base_color, || format!("edge {e:?} across groups has color {x}, not base {base_color}"))?;
                }
            }
            Ok(())
        }
        TriCertificate::MpTwoApex { x1, y1, base_color } => check_two_apex(c, *x1, *y1, *base_color),
        TriCertificate::MpUniqueEdge { edge, unique_color, second_color } => {
            ensure(palette == 3, || format!("palette size {palette} is not 3"))?;
            ensure(unique_color != second_color, || "unique and second colors coincide".into())?;
            let edge = &sorted(*edge);
            let ce = edge_color(c, edge)?;
            ensure(ce == *unique_color, || format!("edge {edge:?} has color {ce}, not {unique_color}"))?;
            for (f, x) in edges(c) {
                if f != edge {
                    ensure(x != *unique_color, || format!("edge {f:?} also has color {unique_color}"))?;
                }
                if x == *second_color {
                    ensure(meet(f, edge) == 2, || format!("edge {f:?} of color {x} meets {edge:?} in {} vertices", meet(f, edge)))?;
                }
            }
            Ok(())
        }
        TriCertificate::MpFiveVertex { x1, y1, y2, z1, z2, color1, color2, color3 } => {
            ensure(palette == 3, || format!("palette size {palette} is not 3"))?;
            ensure(color1 != color2 && color2 != color3 && color1 != color3, || "role colors are not distinct".into())?;
            ensure(y1 != y2 && z1 != z2, || "five vertices are not distinct".into())?;
            let special = [([*x1, *y1, *z1], *color1), ([*x1, *y2, *z2], *color1), ([*x1, *y1, *z2], *color2), ([*x1, *y2, *z1], *color2)];
            let mut special_edges = Vec::with_capacity(4);
            for (t, want) in special {
                let got = edge_color(c, &t)?;
                ensure(got == want, || format!("edge {t:?} has color {got}, not {want}"))?;
                special_edges.push(sorted(t));
            }
            for (e, x) in edges(c) {
                if !special_edges.contains(e) {
                    ensure(x == *color3, || format!("edge {e:?} has color {x}, not {color3}"))?;
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionId};

    #[test]
    fn tight_partition_on_lower_bound() {
        let c = build(ConstructionId::TightLb { n: 9 }).unwrap();
        let block = |i: u32| vec![3 * i, 3 * i + 1, 3 * i + 2];
        let good = TightCertificate {
            base_color: c.color_of([0, 1, 3]),
            parts: (0..3).map(|i| ColorClass { color: c.color_of([3 * i, 3 * i + 1, 3 * i + 2]), vertices: block(i) }).collect(),
        };
        assert_eq!(verify_certificate(&c, &good.clone().into()), Ok(()));

        let mut bad_colors = c.colors().to_vec();
        // a crossing edge recolored to a part color
        let id = c.host().edge_rank([0, 1, 3]).unwrap();
        bad_colors[id.index()] = c.color_of([0, 1, 2]);
        let bad = Coloring::new(c.host().clone(), bad_colors).unwrap();
        let err = verify_certificate(&bad, &good.into()).unwrap_err();
        assert!(err.0.contains("crossing edge"), "{err}");
    }

    #[test]
    fn hand_built_mono_minus_vertex() {
        let c = build(ConstructionId::LooseLb { n: 7 }).unwrap();
        let cert = LooseCertificate::MonoMinusVertex { u: 5, mono_color: 0 };
        assert!(verify_certificate(&c, &cert.into()).is_ok());
        let wrong = LooseCertificate::MonoMinusVertex { u: 0, mono_color: 0 };
        assert!(verify_certificate(&c, &wrong.into()).is_err());
    }

    #[test]
    fn host_kind_mismatch_fails() {
        let c = build(ConstructionId::MpG1 { n: 3 }).unwrap();
        let cert = LooseCertificate::MonoMinusVertex { u: 0, mono_color: 0 };
        assert!(verify_certificate(&c, &cert.into()).is_err());
        let k = build(ConstructionId::LooseLb { n: 7 }).unwrap();
        let tri = TriCertificate::MpTwoApex { x1: 0, y1: 3, base_color: 0 };
        assert!(verify_certificate(&k, &tri.into()).is_err());
    }

    #[test]
    fn apex_partition_of_g1() {
        let c = build(ConstructionId::MpG1 { n: 4 }).unwrap();
        let classes = (0..4).map(|i| ColorClass { color: i, vertices: vec![i] }).collect();
        let cert = TriCertificate::MpApexPartition { part: 0, classes };
        assert!(verify_certificate(&c, &cert.into()).is_ok());
        let cert = TriCertificate::MpApexPartition { part: 1, classes: vec![ColorClass { color: 0, vertices: vec![4, 5, 6, 7] }] };
        assert!(verify_certificate(&c, &cert.into()).is_err());
    }
}
