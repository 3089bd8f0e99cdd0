//! Named verification bundles behind `rhl verify --suite`.
//!
//! Each suite recomputes one published value or structural claim and reports
//! a line per check. A suite that runs out of budget is marked inconclusive
//! and never counts as passed.

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certify::{
    certify_loose, certify_loose_plus, certify_messy, certify_tight, certify_tripartite, verify_certificate, Certificate,
    MessyVerdict, Rejection, TriTheorem,
};
use crate::coloring::Coloring;
use crate::constructions::{build, ConstructionId};
use crate::embed::{count_copies, find_rainbow_copy, rainbow_copies};
use crate::error::BadParameters;
use crate::hypergraph::{HostGraph, Vertex};
use crate::pattern::{Pattern, PatternKind};
use crate::samplers::{sample_structured, SampleCase};
use crate::search::{
    anti_ramsey, canonical_existence_check, constrained_ramsey_check, enumerate_color_partitions, max_rainbow_free_colors,
    ramsey2_search, CanonicalHost, PathKind, SearchBudget, SearchError,
};

/// Suite names in criterion order.
pub const SUITE_NAMES: [&str; 11] = [
    "ar-tight",
    "ar-messy",
    "ar-loose",
    "tight-exhaustive",
    "messy-random",
    "certifier-roundtrip",
    "lemmas",
    "constrained",
    "mp-ar",
    "canonical",
    "copy-counts",
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub budget: SearchBudget,
    /// Structured samples per certificate case.
    pub samples: usize,
    /// Random 3-colorings for the messy suite.
    pub random: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { budget: SearchBudget::default(), samples: 1000, random: 10_000, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Inconclusive,
    Violation,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub criterion: usize,
    pub status: SuiteStatus,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Run {
    checks: Vec<Check>,
    inconclusive: bool,
    violation: bool,
}

impl Run {
    fn new() -> Self {
        Run { checks: Vec::new(), inconclusive: false, violation: false }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        self.check(name, passed, format!("got {got:?}, expected {want:?}"));
    }

    fn search(&mut self, name: impl Into<String>, r: Result<u32, SearchError>, want: u32) {
        match r {
            Ok(v) => self.eq(name, v, want),
            Err(e) => {
                if matches!(e, SearchError::Inconclusive { .. }) {
                    self.inconclusive = true;
                }
                if matches!(e, SearchError::TheoremViolation(_)) {
                    self.violation = true;
                }
                self.check(name, false, e.to_string());
            }
        }
    }

    fn rejection(&mut self, name: impl Into<String>, r: &Rejection) {
        self.violation |= r.is_violation();
        self.check(name, false, r.to_string());
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, BadParameters> {
    let criterion = SUITE_NAMES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| BadParameters(format!("unknown suite {name:?}; expected one of {}", SUITE_NAMES.join(", "))))?;
    let start = Instant::now();
    let mut run = Run::new();
    match criterion {
        0 => ar_tight(&mut run, cfg),
        1 => ar_messy(&mut run, cfg),
        2 => ar_loose(&mut run, cfg),
        3 => tight_exhaustive(&mut run),
        4 => messy_random(&mut run, cfg),
        5 => roundtrip(&mut run, cfg),
        6 => lemmas(&mut run, cfg),
        7 => constrained(&mut run, cfg),
        8 => mp_ar(&mut run, cfg),
        9 => canonical(&mut run),
        _ => copy_counts(&mut run),
    }
    let status = if run.violation {
        SuiteStatus::Violation
    } else if run.inconclusive {
        SuiteStatus::Inconclusive
    } else if run.checks.iter().all(|c| c.passed) {
        SuiteStatus::Pass
    } else {
        SuiteStatus::Fail
    };
    Ok(SuiteReport { suite: SUITE_NAMES[criterion], criterion: criterion + 1, status, checks: run.checks, elapsed: start.elapsed() })
}

fn complete(n: u32) -> HostGraph {
    HostGraph::complete(n).expect("valid host")
}

fn witness(run: &mut Run, name: &str, id: ConstructionId, p: &Pattern, palette: u32) {
    let c = build(id).expect("valid construction");
    let free = find_rainbow_copy(&c, p).is_none();
    run.check(format!("{name} rainbow-{}-free", p.kind().short_name()), free, format!("{} colors", c.palette_size()));
    run.eq(format!("{name} palette"), c.palette_size(), palette);
}

fn ar_tight(run: &mut Run, cfg: &SuiteConfig) {
    let t = Pattern::tight();
    let mut best = 0;
    enumerate_color_partitions(&complete(5), |c| {
        if c.palette_size() > best && find_rainbow_copy(c, &t).is_none() {
            best = c.palette_size();
        }
    })
    .expect("K5 fits");
    run.eq("ar(5,T) by partition enumeration", best + 1, 3);
    for n in [5, 6] {
        run.search(format!("ar({n},T) by branch and bound"), anti_ramsey(&complete(n), &t, cfg.budget), n / 3 + 2);
    }
    for n in 7..=12 {
        witness(run, &format!("TIGHT_LB({n})"), ConstructionId::TightLb { n }, &t, n / 3 + 1);
    }
}

fn ar_messy(run: &mut Run, cfg: &SuiteConfig) {
    let m = Pattern::messy();
    run.search("ar(6,M)", anti_ramsey(&complete(6), &m, cfg.budget), 11);
    run.search("ar(7,M)", anti_ramsey(&complete(7), &m, cfg.budget), 3);
    witness(run, "MESSY_K6", ConstructionId::MessyK6, &m, 10);
}

fn ar_loose(run: &mut Run, cfg: &SuiteConfig) {
    let l = Pattern::loose();
    witness(run, "LOOSE_LB(7)", ConstructionId::LooseLb { n: 7 }, &l, 6);
    run.search("ar(7,L)", anti_ramsey(&complete(7), &l, cfg.budget), 7);
}

fn tight_exhaustive(run: &mut Run) {
    let t = Pattern::tight();
    let (mut three, mut free, mut rainbow) = (0u64, 0u64, 0u64);
    let stats = enumerate_color_partitions(&complete(5), |c| {
        if c.palette_size() >= 3 {
            three += 1;
            if find_rainbow_copy(c, &t).is_some() {
                rainbow += 1;
            } else {
                free += 1;
            }
        }
    })
    .expect("K5 fits");
    run.eq("partitions of K5 edges", stats.visited, 115_975);
    run.eq("rainbow-T-free with >= 3 colors", free, 0);
    run.eq("3+ color partitions with a rainbow T", rainbow, three);
}

fn random_three_coloring(n: u32, rng: &mut ChaCha8Rng) -> Coloring {
    let host = complete(n);
    loop {
        let colors: Vec<u32> = (0..host.edge_count()).map(|_| rng.random_range(0..3)).collect();
        let c = Coloring::new(host.clone(), colors).expect("sized");
        if c.palette_size() == 3 {
            return c;
        }
    }
}

fn messy_random(run: &mut Run, cfg: &SuiteConfig) {
    let out = max_rainbow_free_colors(&complete(7), &Pattern::messy(), cfg.budget);
    match out {
        Ok(o) if o.is_proved() => run.eq("max rainbow-M-free palette on K7", o.value, 2),
        Ok(o) => {
            run.inconclusive = true;
            run.check("max rainbow-M-free palette on K7", false, format!("inconclusive after {} nodes", o.nodes));
        }
        Err(e) => run.check("max rainbow-M-free palette on K7", false, e.to_string()),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut found = 0;
    for _ in 0..cfg.random {
        let c = random_three_coloring(7, &mut rng);
        match certify_messy(&c) {
            Ok(MessyVerdict::RainbowWitness { .. }) => found += 1,
            Ok(MessyVerdict::Consistent { .. }) => {}
            Err(r) => {
                run.rejection("random 3-coloring", &r);
                return;
            }
        }
    }
    run.eq("random 3-colorings of K7 with a rainbow M", found, cfg.random);
}

/// Which certifiers apply to a sample case.
fn certifiers(case: SampleCase) -> Vec<(&'static str, Pattern)> {
    match case {
        SampleCase::TightPartition => vec![("tight", Pattern::tight())],
        SampleCase::MpApexPartition => vec![("mp-tight", Pattern::tight()), ("mp-messy", Pattern::messy())],
        SampleCase::MpBasePartition => vec![("mp-tight", Pattern::tight())],
        c if c.is_tripartite() => vec![("mp-loose", Pattern::loose())],
        _ => vec![("loose", Pattern::loose()), ("loose-plus", Pattern::loose())],
    }
}

fn certify_by(name: &str, c: &Coloring) -> Result<Certificate, Rejection> {
    Ok(match name {
        "tight" => certify_tight(c)?.into(),
        "loose" => certify_loose(c)?.into(),
        "loose-plus" => certify_loose_plus(c)?.into(),
        "mp-tight" => certify_tripartite(c, TriTheorem::MpTight)?.into(),
        "mp-messy" => certify_tripartite(c, TriTheorem::MpMessy)?.into(),
        _ => certify_tripartite(c, TriTheorem::MpLoose)?.into(),
    })
}

/// Sample `per_case` colorings of every case, with `n` cycling over the
/// three smallest admissible sizes.
pub fn structured_samples(per_case: usize, seed: u64) -> Vec<(SampleCase, Coloring)> {
    let mut out = Vec::with_capacity(per_case * SampleCase::ALL.len());
    for case in SampleCase::ALL {
        for i in 0..per_case {
            let n = case.min_n() + (i % 3) as u32;
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            out.push((case, sample_structured(case, n, s).expect("n in range")));
        }
    }
    out
}

fn roundtrip(run: &mut Run, cfg: &SuiteConfig) {
    for case in SampleCase::ALL {
        let mut ok = 0;
        let mut failure = None;
        for (_, c) in structured_samples(cfg.samples, cfg.seed).into_iter().filter(|(k, _)| *k == case) {
            let mut good = true;
            for (certifier, p) in certifiers(case) {
                if find_rainbow_copy(&c, &p).is_some() {
                    failure.get_or_insert(format!("sample has a rainbow {}", p.kind().short_name()));
                    good = false;
                    continue;
                }
                match certify_by(certifier, &c) {
                    Ok(cert) => {
                        if let Err(e) = verify_certificate(&c, &cert) {
                            failure.get_or_insert(format!("{certifier}: {e}"));
                            good = false;
                        }
                    }
                    Err(r) => {
                        run.violation |= r.is_violation();
                        failure.get_or_insert(format!("{certifier}: {r}"));
                        good = false;
                    }
                }
            }
            ok += usize::from(good);
        }
        let detail = failure.unwrap_or_else(|| format!("{ok} samples certified and verified"));
        run.check(format!("{case} round trip"), ok == cfg.samples, detail);
    }
}

/// Result of one lemma over one coloring: `Err` names the failing clause.
pub fn lemma_obs_s2(c: &Coloring) -> Result<(), String> {
    if c.palette_size() < 2 {
        return Ok(());
    }
    for kind in [PatternKind::LooseStarS2, PatternKind::TightStarDs2] {
        if find_rainbow_copy(c, &Pattern::catalog(kind)).is_none() {
            return Err(format!("no rainbow {}", kind.short_name()));
        }
    }
    Ok(())
}

fn forbidden(c: &Coloring, kinds: &[PatternKind]) -> Result<(), String> {
    for &kind in kinds {
        if let Some(w) = find_rainbow_copy(c, &Pattern::catalog(kind)) {
            return Err(format!("rainbow {} at {:?}", kind.short_name(), w.images));
        }
    }
    Ok(())
}

/// For rainbow-T-free colorings: no rainbow C3, S3 or tight S3.
pub fn lemma_t1(c: &Coloring) -> Result<(), String> {
    forbidden(c, &[PatternKind::LooseCycleC3, PatternKind::LooseStarS3, PatternKind::TightStarDs3])
}

/// For rainbow-T-free colorings: an edge meeting both edges of a rainbow
/// S2 repeats one of their colors.
pub fn lemma_t2(c: &Coloring) -> Result<(), String> {
    let host = c.host();
    for s2 in rainbow_copies(c, &Pattern::catalog(PatternKind::LooseStarS2)) {
        let (a, b) = (s2.edge_images[0], s2.edge_images[1]);
        let (ea, eb) = (host.triple(a), host.triple(b));
        let allowed = [c.color(a), c.color(b)];
        for (f, &x) in host.edges().iter().zip(c.colors()) {
            let meets = |e: &[Vertex; 3]| f.iter().any(|v| e.contains(v));
            if meets(&ea) && meets(&eb) && !allowed.contains(&x) {
                return Err(format!("edge {f:?} meets {ea:?} and {eb:?} with a third color"));
            }
        }
    }
    Ok(())
}

/// For rainbow-L-free colorings of `K_n`, `n >= 7`.
pub fn lemma_l1(c: &Coloring) -> Result<(), String> {
    forbidden(c, &[PatternKind::LooseCycleC3, PatternKind::LooseStarS3, PatternKind::S2PlusS1])
}

/// For rainbow-L-free colorings of `K_n`, `n >= 7`, with 3+ colors: some
/// pair of vertices whose removal leaves one color.
pub fn lemma_l2(c: &Coloring) -> Result<(), String> {
    if c.palette_size() < 3 {
        return Ok(());
    }
    let n = c.host().vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let removed = [u, v];
            let mut left = c.edges_avoiding(&removed).map(|e| c.color(e));
            let first = left.next();
            if left.all(|x| Some(x) == first) {
                return Ok(());
            }
        }
    }
    Err("no pair of vertices leaves a monochromatic remainder".into())
}

/// Run every lemma whose hypotheses hold for `c`; count checks made.
pub fn lemma_checks(c: &Coloring) -> Result<usize, String> {
    let mut made = 1;
    let small_enough = if c.host().is_complete() { c.host().vertex_count() >= 5 } else { c.host().vertex_count() >= 9 };
    if small_enough {
        lemma_obs_s2(c).map_err(|e| format!("two-edge stars: {e}"))?;
    }
    if c.host().is_complete() {
        if find_rainbow_copy(c, &Pattern::tight()).is_none() {
            lemma_t1(c).map_err(|e| format!("tight triples: {e}"))?;
            lemma_t2(c).map_err(|e| format!("tight pairs: {e}"))?;
            made += 2;
        }
        if c.host().vertex_count() >= 7 && find_rainbow_copy(c, &Pattern::loose()).is_none() {
            lemma_l1(c).map_err(|e| format!("loose triples: {e}"))?;
            lemma_l2(c).map_err(|e| format!("loose pair deletion: {e}"))?;
            made += 2;
        }
    }
    Ok(made)
}

fn lemmas(run: &mut Run, cfg: &SuiteConfig) {
    let mut made = 0;
    let mut failure = None;
    enumerate_color_partitions(&complete(5), |c| match lemma_checks(c) {
        Ok(k) => made += k,
        Err(e) => {
            failure.get_or_insert(e);
        }
    })
    .expect("K5 fits");
    run.check("lemmas over all K5 partitions", failure.is_none(), failure.unwrap_or_else(|| format!("{made} checks")));
    let (mut made, mut failure) = (0, None);
    for (case, c) in structured_samples(cfg.samples, cfg.seed) {
        match lemma_checks(&c) {
            Ok(k) => made += k,
            Err(e) => {
                failure.get_or_insert(format!("{case}: {e}"));
            }
        }
    }
    run.check("lemmas over structured samples", failure.is_none(), failure.unwrap_or_else(|| format!("{made} checks")));
}

fn constrained(run: &mut Run, cfg: &SuiteConfig) {
    let m2 = Pattern::catalog(PatternKind::Matching2);
    let k6 = ramsey2_search(&complete(6), &m2, cfg.budget);
    run.check(
        "K6 has a 2-coloring without a monochromatic M2",
        k6.is_proved() && k6.witness.is_some(),
        format!("{:?}, {} nodes", k6.status, k6.nodes),
    );
    let k7 = ramsey2_search(&complete(7), &m2, cfg.budget);
    run.inconclusive |= !k6.is_proved() || !k7.is_proved();
    run.check(
        "K7 has none (search exhausted)",
        k7.is_proved() && k7.witness.is_none(),
        format!("{:?}, {} nodes", k7.status, k7.nodes),
    );
    match constrained_ramsey_check(&m2, PathKind::MessyM, cfg.budget) {
        Ok(r) => {
            run.eq("R2(M2)", r.r2, 7);
            run.eq("f(M2, M)", r.f, Some(7));
        }
        Err(e) => run.search("f(M2, M)", Err(e), 7),
    }
}

fn mp_ar(run: &mut Run, cfg: &SuiteConfig) {
    let host = HostGraph::tripartite(3, 3, 3).expect("valid host");
    witness(run, "MP_G1(3)", ConstructionId::MpG1 { n: 3 }, &Pattern::messy(), 3);
    witness(run, "MP_G2(3)", ConstructionId::MpG2 { n: 3 }, &Pattern::tight(), 4);
    witness(run, "MP_G3(3)", ConstructionId::MpG3 { n: 3 }, &Pattern::loose(), 4);
    run.search("ar(K333,M)", anti_ramsey(&host, &Pattern::messy(), cfg.budget), 4);
    run.search("ar(K333,T)", anti_ramsey(&host, &Pattern::tight(), cfg.budget), 5);
    run.search("ar(K333,L)", anti_ramsey(&host, &Pattern::loose(), cfg.budget), 5);
}

fn canonical(run: &mut Run) {
    let h = Pattern::catalog(PatternKind::SingleEdge);
    let singles: [&[u8]; 3] = [&[1], &[2], &[3]];
    let pairs: [&[u8]; 3] = [&[1, 2], &[1, 3], &[2, 3]];
    for g in [Pattern::tight(), Pattern::messy()] {
        let mut any = false;
        for t in 1..=4 {
            let table = canonical_existence_check(&h, &g, t, CanonicalHost::Tripartite).expect("t fits");
            any |= singles.iter().any(|j| table.row(j).is_some_and(|r| r.rainbow));
        }
        run.check(format!("no rainbow {} under |J|=1, t<=4", g.kind().short_name()), !any, "");
    }
    let l = canonical_existence_check(&h, &Pattern::loose(), 3, CanonicalHost::Tripartite).expect("t fits");
    let l_rows: Vec<bool> = singles.iter().map(|j| l.row(j).is_some_and(|r| r.rainbow)).collect();
    run.check("rainbow L under |J|=1 at t=3", l_rows.iter().all(|&b| b), format!("{l_rows:?}"));
    for g in [Pattern::tight(), Pattern::messy(), Pattern::loose()] {
        let table = canonical_existence_check(&h, &g, 3, CanonicalHost::Tripartite).expect("t fits");
        let rows: Vec<bool> = pairs.iter().map(|j| table.row(j).is_some_and(|r| r.rainbow)).collect();
        run.check(format!("rainbow {} under |J|=2 at t=3", g.kind().short_name()), rows.iter().all(|&b| b), format!("{rows:?}"));
    }
}

fn falling(n: u64, k: u64) -> u64 {
    (n - k + 1..=n).product()
}

fn copy_counts(run: &mut Run) {
    for (p, n, want) in [(Pattern::tight(), 5u32, 60usize), (Pattern::messy(), 6, 180), (Pattern::loose(), 7, 630)] {
        let got = count_copies(&complete(n), &p);
        let closed = falling(n as u64, p.vertex_count() as u64) / p.automorphisms();
        run.eq(format!("copies of {} in K{n}", p.kind().short_name()), got, want);
        run.eq(format!("injections over automorphisms for {}", p.kind().short_name()), closed as usize, want);
    }
}
