//! Structural certificates for rainbow-path-free colorings.
//!
//! Each certifier checks its preconditions, searches for a decomposition in a
//! fixed order, and runs the independent verifier on what it found before
//! returning it. Failing to find one under the preconditions is reported as
//! [`Rejection::TheoremViolation`] carrying the coloring.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::embed::Embedding;
use crate::hypergraph::{Triple, Vertex};

mod complete;
mod tripartite;
mod verify;

pub use complete::{certify_loose, certify_loose_plus, certify_messy, certify_tight, MessyVerdict};
pub use tripartite::{certify_tripartite, TriTheorem};
pub use verify::{verify_certificate, VerifyError};

/// A vertex class carrying one color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorClass {
    pub color: Color,
    pub vertices: Vec<Vertex>,
}

/// Vertex partition into parts `V_i`, each containing its own color; all
/// other edges carry the base color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename = "TIGHT_PARTITION")]
pub struct TightCertificate {
    pub base_color: Color,
    pub parts: Vec<ColorClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LooseCertificate {
    /// Every edge avoiding `u` has `mono_color`.
    MonoMinusVertex { u: Vertex, mono_color: Color },
    /// `c(edge) != base_color`, and every other edge not of the base color
    /// meets `edge` in exactly two vertices.
    SpecialEdge { edge: Triple, base_color: Color },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LoosePlusCertificate {
    /// Every edge not of the base color contains both `u` and `v`.
    TwoApex { u: Vertex, v: Vertex, base_color: Color },
    /// Palette of 3 to 5 colors; every edge avoiding `v` except possibly
    /// `exceptional_edge` has `mono_color`.
    NearMonoMinusVertex { v: Vertex, exceptional_edge: Option<Triple>, mono_color: Color },
    /// Palette of 3 colors, otherwise as [`LooseCertificate::SpecialEdge`].
    #[serde(rename = "SPECIAL_EDGE3")]
    SpecialEdge3 { edge: Triple, base_color: Color },
}

/// Classes of part `p` inside one group of an aligned partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignedGroup {
    pub color: Color,
    /// Vertices of the group in each of the three parts.
    pub parts: [Vec<Vertex>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TriCertificate {
    /// Part `part` (0-based) splits into classes; every edge through a
    /// vertex of a class has the class color.
    MpApexPartition { part: usize, classes: Vec<ColorClass> },
    /// Edges inside a group are the group color or base; all others base.
    MpBasePartition { base_color: Color, groups: Vec<AlignedGroup> },
    /// Every edge not of the base color contains `x1` and `y1`.
    MpTwoApex { x1: Vertex, y1: Vertex, base_color: Color },
    /// Palette 3: `edge` is the only edge of `unique_color`, and every edge
    /// of `second_color` meets it in two vertices.
    MpUniqueEdge { edge: Triple, unique_color: Color, second_color: Color },
    /// Palette 3: `x1y1z1`, `x1y2z2` have `color1`, `x1y1z2`, `x1y2z1` have
    /// `color2`, everything else `color3`.
    MpFiveVertex {
        x1: Vertex,
        y1: Vertex,
        y2: Vertex,
        z1: Vertex,
        z2: Vertex,
        color1: Color,
        color2: Color,
        color3: Color,
    },
}

/// Any certificate. Serialized as the inner certificate; the `case` tag
/// tells them apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Tight(TightCertificate),
    Loose(LooseCertificate),
    LoosePlus(LoosePlusCertificate),
    Tripartite(TriCertificate),
}

impl Certificate {
    pub fn case(&self) -> &'static str {
        match self {
            Certificate::Tight(_) => "TIGHT_PARTITION",
            Certificate::Loose(LooseCertificate::MonoMinusVertex { .. }) => "MONO_MINUS_VERTEX",
            Certificate::Loose(LooseCertificate::SpecialEdge { .. }) => "SPECIAL_EDGE",
            Certificate::LoosePlus(LoosePlusCertificate::TwoApex { .. }) => "TWO_APEX",
            Certificate::LoosePlus(LoosePlusCertificate::NearMonoMinusVertex { .. }) => "NEAR_MONO_MINUS_VERTEX",
            Certificate::LoosePlus(LoosePlusCertificate::SpecialEdge3 { .. }) => "SPECIAL_EDGE3",
            Certificate::Tripartite(TriCertificate::MpApexPartition { .. }) => "MP_APEX_PARTITION",
            Certificate::Tripartite(TriCertificate::MpBasePartition { .. }) => "MP_BASE_PARTITION",
            Certificate::Tripartite(TriCertificate::MpTwoApex { .. }) => "MP_TWO_APEX",
            Certificate::Tripartite(TriCertificate::MpUniqueEdge { .. }) => "MP_UNIQUE_EDGE",
            Certificate::Tripartite(TriCertificate::MpFiveVertex { .. }) => "MP_FIVE_VERTEX",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl From<TightCertificate> for Certificate {
    fn from(c: TightCertificate) -> Self {
        Certificate::Tight(c)
    }
}

impl From<LooseCertificate> for Certificate {
    fn from(c: LooseCertificate) -> Self {
        Certificate::Loose(c)
    }
}

impl From<LoosePlusCertificate> for Certificate {
    fn from(c: LoosePlusCertificate) -> Self {
        Certificate::LoosePlus(c)
    }
}

impl From<TriCertificate> for Certificate {
    fn from(c: TriCertificate) -> Self {
        Certificate::Tripartite(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("{0}")]
    WrongHost(String),
    #[error("host has {n} vertices, need at least {min}")]
    HostTooSmall { n: u32, min: u32 },
    #[error("palette size {palette} is below {min}")]
    PaletteTooSmall { palette: u32, min: u32 },
    #[error("rainbow {pattern} found at vertices {:?}", witness.images)]
    RainbowFound { pattern: String, witness: Embedding },
}

#[derive(Debug, Clone, Error)]
pub enum Rejection {
    #[error("precondition failed: {0}")]
    PreconditionFailed(#[from] Precondition),
    #[error("theorem violation: {reason}")]
    TheoremViolation { reason: String, coloring: Box<Coloring> },
}

impl Rejection {
    pub(crate) fn violation(reason: impl Into<String>, c: &Coloring) -> Rejection {
        Rejection::TheoremViolation { reason: reason.into(), coloring: Box::new(c.clone()) }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Rejection::TheoremViolation { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_case_tags() {
        let certs: Vec<Certificate> = vec![
            TightCertificate { base_color: 0, parts: vec![ColorClass { color: 1, vertices: vec![0, 1, 2] }] }.into(),
            LooseCertificate::MonoMinusVertex { u: 5, mono_color: 0 }.into(),
            LooseCertificate::SpecialEdge { edge: [0, 1, 2], base_color: 0 }.into(),
            LoosePlusCertificate::TwoApex { u: 6, v: 7, base_color: 0 }.into(),
            LoosePlusCertificate::NearMonoMinusVertex { v: 1, exceptional_edge: None, mono_color: 2 }.into(),
            LoosePlusCertificate::SpecialEdge3 { edge: [1, 2, 3], base_color: 0 }.into(),
            TriCertificate::MpApexPartition { part: 0, classes: vec![] }.into(),
            TriCertificate::MpBasePartition { base_color: 0, groups: vec![AlignedGroup { color: 1, parts: [vec![0], vec![3], vec![6]] }] }
                .into(),
            TriCertificate::MpTwoApex { x1: 0, y1: 3, base_color: 0 }.into(),
            TriCertificate::MpUniqueEdge { edge: [0, 3, 6], unique_color: 1, second_color: 2 }.into(),
            TriCertificate::MpFiveVertex { x1: 0, y1: 3, y2: 4, z1: 6, z2: 7, color1: 0, color2: 1, color3: 2 }.into(),
        ];
        for c in certs {
            let s = c.to_json();
            assert!(s.starts_with(&format!("{{\"case\":\"{}\"", c.case())), "{s}");
            assert_eq!(Certificate::from_json(&s).unwrap(), c);
        }
    }

    #[test]
    fn key_order_is_stable() {
        let c: Certificate = LooseCertificate::SpecialEdge { edge: [0, 1, 2], base_color: 3 }.into();
        assert_eq!(c.to_json(), r#"{"case":"SPECIAL_EDGE","edge":[0,1,2],"base_color":3}"#);
    }
}
