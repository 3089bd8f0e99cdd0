//! Constrained Ramsey numbers `f(h, path)` for the three 3-edge paths.
//!
//! `f(h, g)` is the least `n` such that every coloring of `K_n` (any number
//! of colors) has a monochromatic `h` or a rainbow `g`. The check computes
//! `R2(h)`, uses the avoiding 2-coloring at `R2 - 1` as the lower bound, and
//! proves the upper bound at `R2` by exhausting all colorings of `K_{R2}`
//! that avoid both a monochromatic `h` and a rainbow path.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::embed::{find_monochromatic_copy, find_rainbow_copy};
use crate::hypergraph::HostGraph;
use crate::pattern::{Pattern, PatternKind};
use crate::search::ramsey::avoiding_search;
use crate::search::{max_rainbow_free_colors, ramsey_number_2, SearchBudget, SearchError, SearchOutcome, SearchStatus};

/// Largest host the report will search for `R2`.
pub const MAX_RAMSEY_N: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PathKind {
    TightT,
    MessyM,
    LooseL,
}

impl PathKind {
    pub fn pattern(self) -> Pattern {
        match self {
            PathKind::TightT => Pattern::tight(),
            PathKind::MessyM => Pattern::messy(),
            PathKind::LooseL => Pattern::loose(),
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pattern().kind().short_name())
    }
}

impl FromStr for PathKind {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<Pattern>().map(|p| p.kind()) {
            Ok(PatternKind::TightT) => Ok(PathKind::TightT),
            Ok(PatternKind::MessyM) => Ok(PathKind::MessyM),
            Ok(PatternKind::LooseL) => Ok(PathKind::LooseL),
            _ => Err(SearchError::Unsupported(format!("path must be T, M or L, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub held: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstrainedReport {
    pub target: Pattern,
    pub path: PathKind,
    pub r2: u32,
    /// 2-coloring of `K_{R2-1}` with no monochromatic target; absent when
    /// `R2 - 1 < 3`.
    #[serde(skip)]
    pub r2_witness: Option<Coloring>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub lower_bound_verified: bool,
    pub upper_bound_verified: bool,
    pub f: Option<u32>,
    /// Smallest `t` with the target inside `K_{t,t,t}`, if it is 3-partite.
    pub t_h: Option<usize>,
    pub trace: Vec<String>,
    pub nodes: u64,
}

/// Search `host` for a coloring with neither a monochromatic `h` nor a
/// rainbow `g`. `value` is 1 with a witness when one exists.
pub fn counterexample_search(host: &HostGraph, h: &Pattern, g: &Pattern, budget: SearchBudget) -> SearchOutcome {
    avoiding_search(host, Some(h), Some(g), u32::MAX, budget)
}

fn hypotheses(h: &Pattern, path: PathKind, r2: u32) -> Vec<HypothesisCheck> {
    let v = h.vertex_count() as u32;
    match path {
        PathKind::TightT => vec![HypothesisCheck { name: "target connected".into(), held: h.is_connected() }],
        PathKind::MessyM => vec![HypothesisCheck { name: "R2 >= 7".into(), held: r2 >= 7 }],
        PathKind::LooseL => vec![HypothesisCheck { name: format!("R2 >= max(|V|+1, 7) = {}", (v + 1).max(7)), held: r2 >= (v + 1).max(7) }],
    }
}

fn remaining(budget: SearchBudget, start: Instant) -> SearchBudget {
    SearchBudget { time_limit: budget.time_limit.saturating_sub(start.elapsed()), ..budget }
}

/// Compute `R2(h)` and establish `f(h, path) = R2(h)` computationally.
///
/// Fails with `HypothesisNotMet` when the target does not meet the
/// hypotheses under which equality is claimed, and with `TheoremViolation`
/// when a counterexample coloring turns up at `n = R2`.
pub fn constrained_ramsey_check(h: &Pattern, path: PathKind, budget: SearchBudget) -> Result<ConstrainedReport, SearchError> {
    let start = Instant::now();
    let g = path.pattern();
    let mut trace = Vec::new();
    let (r2, witness) = ramsey_number_2(h, MAX_RAMSEY_N, budget)?;
    trace.push(format!("R2({}) = {r2} by exhaustive 2-coloring search", h.name()));
    if h.kind() == PatternKind::Matching2 && r2 != 7 {
        return Err(SearchError::TheoremViolation(format!("R2 of the 2-edge matching computed as {r2}, expected 7")));
    }
    let hyps = hypotheses(h, path, r2);
    for c in &hyps {
        trace.push(format!("hypothesis {}: {}", c.name, if c.held { "held" } else { "failed" }));
    }
    if let Some(bad) = hyps.iter().find(|c| !c.held) {
        return Err(SearchError::HypothesisNotMet(format!(
            "f({}, {path}) = R2 not claimed: {} does not hold (R2 = {r2})",
            h.name(),
            bad.name
        )));
    }

    let lower = match &witness {
        Some(w) => {
            let ok = find_monochromatic_copy(w, h).is_none() && find_rainbow_copy(w, &g).is_none();
            trace.push(format!(
                "lower bound: {}-coloring of K{} has no monochromatic {} and no rainbow {path}",
                w.palette_size(),
                r2 - 1,
                h.name()
            ));
            ok
        }
        None => {
            trace.push(format!("lower bound: K{} has no edges to color", r2 - 1));
            true
        }
    };

    let host = HostGraph::complete(r2).map_err(|e| SearchError::Unsupported(e.to_string()))?;
    let out = counterexample_search(&host, h, &g, remaining(budget, start));
    let mut nodes = out.nodes;
    if out.status == SearchStatus::Inconclusive {
        return Err(SearchError::Inconclusive { nodes });
    }
    if out.witness.is_some() {
        return Err(SearchError::TheoremViolation(format!(
            "K{r2} has a coloring with no monochromatic {} and no rainbow {path}",
            h.name()
        )));
    }
    trace.push(format!(
        "upper bound: every coloring of K{r2} has a monochromatic {} or a rainbow {path} ({} nodes)",
        h.name(),
        out.nodes
    ));
    if path == PathKind::MessyM {
        // the structural route: at n >= 7 a rainbow-free coloring has at most 2 colors
        let pal = max_rainbow_free_colors(&host, &g, remaining(budget, start))?;
        nodes += pal.nodes;
        if !pal.is_proved() {
            return Err(SearchError::Inconclusive { nodes });
        }
        if pal.value > 2 {
            return Err(SearchError::TheoremViolation(format!(
                "K{r2} has a rainbow-M-free coloring with {} colors",
                pal.value
            )));
        }
        trace.push(format!("structure: rainbow-M-free colorings of K{r2} use at most {} colors", pal.value));
    }

    Ok(ConstrainedReport {
        target: h.clone(),
        path,
        r2,
        r2_witness: witness,
        hypotheses: hyps,
        lower_bound_verified: lower,
        upper_bound_verified: true,
        f: lower.then_some(r2),
        t_h: h.tripartite_size(),
        trace,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_with_tight_path() {
        let r = constrained_ramsey_check(&Pattern::catalog(PatternKind::SingleEdge), PathKind::TightT, SearchBudget::with_time(60)).unwrap();
        assert_eq!(r.r2, 3);
        assert_eq!(r.f, Some(3));
        assert!(r.r2_witness.is_none());
        assert!(r.hypotheses.iter().all(|c| c.held));
    }

    #[test]
    fn messy_needs_r2_at_least_seven() {
        let e = constrained_ramsey_check(&Pattern::catalog(PatternKind::SingleEdge), PathKind::MessyM, SearchBudget::with_time(60));
        assert!(matches!(e, Err(SearchError::HypothesisNotMet(_))));
    }

    #[test]
    fn disconnected_target_refused_for_tight() {
        let e = constrained_ramsey_check(&Pattern::catalog(PatternKind::Matching2), PathKind::TightT, SearchBudget::with_time(60));
        assert!(matches!(e, Err(SearchError::HypothesisNotMet(_))));
    }

    #[test]
    fn path_names() {
        assert_eq!("m".parse::<PathKind>().unwrap(), PathKind::MessyM);
        assert_eq!("LOOSE_L".parse::<PathKind>().unwrap(), PathKind::LooseL);
        assert!("S2".parse::<PathKind>().is_err());
    }
}
