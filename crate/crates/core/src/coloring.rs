//! Edge colorings as edge-indexed color arrays.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::HostError;
use crate::hypergraph::{EdgeId, HostGraph, Vertex};

/// Color id. Normalized colorings use `0..palette_size`.
pub type Color = u32;

/// A total edge coloring of a host, always held in normalized form: color ids
/// appear in first-appearance order `0, 1, 2, ...` along increasing [`EdgeId`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    host: HostGraph,
    colors: Vec<Color>,
    palette: u32,
}

/// Relabel ids in first-appearance order.
pub fn normalize_colors(colors: &[Color]) -> Vec<Color> {
    let mut map: HashMap<Color, Color> = HashMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len() as Color;
            *map.entry(c).or_insert(next)
        })
        .collect()
}

impl Coloring {
    /// Build from arbitrary color ids; the result is normalized.
    pub fn new(host: HostGraph, colors: Vec<Color>) -> Result<Self, HostError> {
        if colors.len() != host.edge_count() {
            return Err(HostError::LengthMismatch { expected: host.edge_count(), got: colors.len() });
        }
        let colors = normalize_colors(&colors);
        Ok(Self::from_normalized(host, colors))
    }

    /// Every edge gets the same color.
    pub fn monochromatic(host: HostGraph) -> Self {
        let colors = vec![0; host.edge_count()];
        Self { host, colors, palette: 1 }
    }

    /// Every edge gets its own color.
    pub fn rainbow(host: HostGraph) -> Self {
        let colors: Vec<Color> = (0..host.edge_count() as Color).collect();
        let palette = colors.len() as u32;
        Self { host, colors, palette }
    }

    /// Caller guarantees `colors` is already a restricted growth string.
    pub(crate) fn from_normalized(host: HostGraph, colors: Vec<Color>) -> Self {
        debug_assert_eq!(colors.len(), host.edge_count());
        debug_assert_eq!(normalize_colors(&colors), colors);
        let palette = colors.iter().max().map_or(0, |&m| m + 1);
        Self { host, colors, palette }
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.index()]
    }

    /// Color of the edge on three vertices; panics if the triple is not an edge.
    pub fn color_of(&self, triple: [Vertex; 3]) -> Color {
        let id = self.host.edge_rank(triple).expect("triple is not a host edge");
        self.color(id)
    }

    pub fn palette_size(&self) -> u32 {
        self.palette
    }

    /// Same color partition, ids already normalized, so this is a clone.
    pub fn normalized(&self) -> Coloring {
        self.clone()
    }

    /// Sizes of the color classes, indexed by color id.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.palette as usize];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Push the coloring through a vertex automorphism of the host: the edge
    /// `perm(e)` of the output carries the color of `e` in the input.
    pub fn relabel_vertices(&self, perm: &[Vertex]) -> Result<Coloring, HostError> {
        let n = self.host.vertex_count() as usize;
        if perm.len() != n {
            return Err(HostError::InvalidPermutation(format!(
                "expected {n} images, got {}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p as usize >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(HostError::InvalidPermutation(format!("{perm:?} is not a bijection")));
            }
        }
        let mut out = vec![0; self.colors.len()];
        for (i, t) in self.host.edges().iter().enumerate() {
            let image = [perm[t[0] as usize], perm[t[1] as usize], perm[t[2] as usize]];
            let id = self.host.edge_rank(image).map_err(|_| {
                HostError::InvalidPermutation(format!("edge {t:?} maps to non-edge {image:?}"))
            })?;
            out[id.index()] = self.colors[i];
        }
        Coloring::new(self.host.clone(), out)
    }

    pub fn summary(&self) -> ColorSummary {
        let n = self.host.vertex_count() as usize;
        let mut seen: Vec<Vec<bool>> = vec![vec![false; self.palette as usize]; n];
        let mut degree = vec![0u32; n];
        for (t, &c) in self.host.edges().iter().zip(&self.colors) {
            for &v in t {
                if !std::mem::replace(&mut seen[v as usize][c as usize], true) {
                    degree[v as usize] += 1;
                }
            }
        }
        let max = degree.iter().copied().max().unwrap_or(0);
        ColorSummary { palette_size: self.palette, color_degree: degree, max_color_degree: max }
    }

    /// Edges whose vertex set avoids all of `removed`.
    pub fn edges_avoiding<'a>(&'a self, removed: &'a [Vertex]) -> impl Iterator<Item = EdgeId> + 'a {
        self.host
            .edge_ids()
            .filter(move |&e| !self.host.triple(e).iter().any(|v| removed.contains(v)))
    }
}

/// Palette size, per-vertex color degree and maximum color degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorSummary {
    pub palette_size: u32,
    pub color_degree: Vec<u32>,
    pub max_color_degree: u32,
}

pub fn color_summary(c: &Coloring) -> ColorSummary {
    c.summary()
}
