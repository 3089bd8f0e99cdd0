//! The `rhl` command line.
//!
//! Reports are `key: value` lines (or one JSON object with `--format json`),
//! optionally followed by a certificate as a JSON line. Exit codes: 0 success,
//! 1 negative finding, 2 inconclusive, 3 usage or file error, 4 theorem
//! violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certify::{
    certify_loose, certify_loose_plus, certify_messy, certify_tight, certify_tripartite, verify_certificate, Certificate,
    MessyVerdict, Precondition, Rejection, TriTheorem,
};
use crate::coloring::Coloring;
use crate::constructions::{build, parse_j, ConstructionId, CONSTRUCTION_NAMES};
use crate::embed::{find_monochromatic_copy, find_rainbow_copy, Embedding};
use crate::format::{parse_coloring, write_coloring};
use crate::hypergraph::HostGraph;
use crate::pattern::{parse_pattern, Pattern};
use crate::samplers::{sample_structured, SampleCase};
use crate::search::{
    canonical_existence_check, constrained_ramsey_check, max_rainbow_free_colors_with, ramsey2_search,
    CanonicalHost, EdgeOrder, PathKind, SearchBudget, SearchError, SearchStatus,
};
use crate::suites::{run_suite, SuiteConfig, SuiteStatus, SUITE_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "rhl", version, about = "Rainbow paths in edge-colored 3-uniform hypergraphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Worker threads for searches (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Node limit for the search.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds (default: RHL_DEFAULT_BUDGET_SECS or 3600).
    #[arg(long)]
    budget_secs: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a construction or a structured random sample as a coloring file.
    Gen {
        #[arg(long, conflicts_with = "sample")]
        construction: Option<String>,
        /// Structured sample case, e.g. TWO_APEX.
        #[arg(long)]
        sample: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinate set for canonical colorings, e.g. 1,3.
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Look for a rainbow (or monochromatic) copy of a pattern.
    Check {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        mono: bool,
        file: PathBuf,
    },
    /// Certify a rainbow-path-free coloring against a structure theorem.
    Certify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Also write the certificate JSON here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Anti-Ramsey number by branch and bound.
    Ar {
        #[arg(long, value_enum, default_value_t = HostArg::Complete)]
        host: HostArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Greedy)]
        order: OrderArg,
        /// Write the extremal rainbow-free coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for a 2-coloring of K_n with no monochromatic target.
    Ramsey2 {
        #[arg(long)]
        n: u32,
        /// Catalog pattern name or pattern file.
        #[arg(long)]
        target: String,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check f(H, path) = R2(H).
    Constrained {
        #[arg(long)]
        target: String,
        #[arg(long)]
        path: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Canonical-coloring table for every J.
    Canonical {
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = CanonicalArg::Tripartite)]
        host: CanonicalArg,
        #[arg(long = "H")]
        h: String,
        #[arg(long = "G")]
        g: String,
    },
    /// Run an acceptance suite, or check a certificate against a coloring.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "certificate", conflicts_with = "certificate")]
        suite: Option<String>,
        #[arg(long, requires = "file")]
        certificate: Option<PathBuf>,
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 10_000)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Tight,
    Messy,
    Loose,
    LoosePlus,
    MpTight,
    MpMessy,
    MpLoose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HostArg {
    Complete,
    Tripartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Greedy,
    EdgeId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CanonicalArg {
    Ordered,
    Tripartite,
}

/// A failure that ends the command with a specific exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::Inconclusive { .. } => EXIT_INCONCLUSIVE,
            SearchError::TheoremViolation(_) => EXIT_VIOLATION,
            SearchError::HypothesisNotMet(_) => EXIT_NEGATIVE,
            SearchError::TooLarge { .. } | SearchError::PatternTooSmall { .. } | SearchError::Unsupported(_) => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Ordered report fields plus an optional trailing certificate.
#[derive(Default)]
struct Report {
    fields: Vec<(String, Value)>,
    certificate: Option<Value>,
    code: i32,
}

impl Report {
    fn put(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.fields.push((key.to_string(), serde_json::to_value(value).expect("serializable")));
        self
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    match v {
                        Value::Array(items) if items.iter().all(Value::is_string) => {
                            for item in items {
                                out.push_str(&format!("{k}: {}\n", item.as_str().unwrap()));
                            }
                        }
                        Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                        Value::Null => out.push_str(&format!("{k}: none\n")),
                        other => out.push_str(&format!("{k}: {other}\n")),
                    }
                }
                if let Some(c) = &self.certificate {
                    out.push_str(&format!("{c}\n"));
                }
                out
            }
            OutputFormat::Json => {
                let mut map = serde_json::Map::new();
                for (k, v) in &self.fields {
                    map.insert(k.clone(), v.clone());
                }
                if let Some(c) = &self.certificate {
                    map.insert("certificate".into(), c.clone());
                }
                format!("{}\n", Value::Object(map))
            }
        }
    }
}

/// Parse `args` (including the program name), run, write the report to
/// `out` and diagnostics to `err`, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            report.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn budget(cli: &Cli, b: &BudgetArgs) -> SearchBudget {
    let mut budget = SearchBudget::default();
    if let Some(n) = b.budget_nodes {
        budget = budget.with_nodes(n);
    }
    if let Some(s) = b.budget_secs {
        budget.time_limit = Duration::from_secs(s.max(1));
    }
    if let Some(t) = cli.threads {
        budget = budget.with_threads(t);
    }
    budget
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path) -> Result<Coloring, Failure> {
    parse_coloring(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Catalog name first, then a pattern file.
fn load_pattern(spec: &str) -> Result<Pattern, Failure> {
    if let Ok(p) = spec.parse::<Pattern>() {
        return Ok(p);
    }
    let path = Path::new(spec);
    if path.exists() {
        return parse_pattern(&read(path)?).map_err(|e| usage(format!("{spec}: {e}")));
    }
    Err(usage(format!("unknown pattern {spec:?} (not a catalog name or a file)")))
}

fn embedding_json(c: &Coloring, w: &Embedding) -> Value {
    let edges: Vec<Value> = w.edge_images.iter().map(|&e| json!({ "edge": c.host().triple(e), "color": c.color(e) })).collect();
    json!({ "vertices": w.images, "edges": edges })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Report, Failure> {
    let mut r = Report::default();
    match &cli.command {
        Command::Gen { construction, sample, n, seed, j, output } => {
            let (label, c) = match (construction, sample) {
                (Some(name), None) => {
                    let mask = parse_j(j).map_err(|e| usage(e.0))?;
                    let id = ConstructionId::from_name(name, *n, mask).map_err(|e| {
                        usage(format!("{}; known constructions: {}", e.0, CONSTRUCTION_NAMES.join(", ")))
                    })?;
                    (id.to_string(), build(id).map_err(|e| usage(e.0))?)
                }
                (None, Some(case)) => {
                    let case: SampleCase = case.parse().map_err(|e: crate::error::BadParameters| usage(e.0))?;
                    let n = n.unwrap_or(case.min_n());
                    (format!("{case}"), sample_structured(case, n, *seed).map_err(|e| usage(e.0))?)
                }
                _ => return Err(usage("gen needs exactly one of --construction or --sample")),
            };
            let text = write_coloring(&c);
            match output {
                Some(path) => {
                    write(path, &text)?;
                    r.put("construction", label).put("host", c.host().to_string()).put("palette", c.palette_size());
                    r.put("output", path.display().to_string());
                }
                None => {
                    out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))?;
                    r.fields.clear();
                }
            }
        }
        Command::Check { pattern, mono, file } => {
            let c = load_coloring(file)?;
            let p = load_pattern(pattern)?;
            r.put("pattern", p.name()).put("host", c.host().to_string()).put("palette", c.palette_size());
            let (key, found) = if *mono {
                ("monochromatic", find_monochromatic_copy(&c, &p))
            } else {
                ("rainbow", find_rainbow_copy(&c, &p))
            };
            match found {
                None => {
                    r.put(key, "none");
                }
                Some(w) => {
                    r.put(key, "found").put("witness", embedding_json(&c, &w));
                    r.code = EXIT_NEGATIVE;
                }
            }
        }
        Command::Certify { theorem, cert_out, file } => {
            let c = load_coloring(file)?;
            r.put("host", c.host().to_string()).put("palette", c.palette_size());
            let result: Result<Certificate, Rejection> = match theorem {
                Theorem::Messy => {
                    match certify_messy(&c) {
                        Ok(MessyVerdict::Consistent { palette }) => {
                            r.put("verdict", "CONSISTENT").put("palette_checked", palette);
                        }
                        Ok(MessyVerdict::RainbowWitness { witness, .. }) => {
                            r.put("verdict", "RAINBOW_WITNESS").put("witness", embedding_json(&c, &witness));
                        }
                        Err(rej) => return Ok(rejected(r, rej)),
                    }
                    return Ok(r);
                }
                Theorem::Tight => certify_tight(&c).map(Into::into),
                Theorem::Loose => certify_loose(&c).map(Into::into),
                Theorem::LoosePlus => certify_loose_plus(&c).map(Into::into),
                Theorem::MpTight => certify_tripartite(&c, TriTheorem::MpTight).map(Into::into),
                Theorem::MpMessy => certify_tripartite(&c, TriTheorem::MpMessy).map(Into::into),
                Theorem::MpLoose => certify_tripartite(&c, TriTheorem::MpLoose).map(Into::into),
            };
            match result {
                Ok(cert) => {
                    r.put("status", "CERTIFIED").put("case", cert.case());
                    if let Some(path) = cert_out {
                        write(path, &format!("{}\n", cert.to_json()))?;
                        r.put("certificate_file", path.display().to_string());
                    }
                    r.certificate = Some(serde_json::to_value(&cert).expect("serializable"));
                }
                Err(rej) => return Ok(rejected(r, rej)),
            }
        }
        Command::Ar { host, n, pattern, order, witness, budget: b } => {
            let host = match host {
                HostArg::Complete => HostGraph::complete(*n),
                HostArg::Tripartite => HostGraph::tripartite(*n, *n, *n),
            }
            .map_err(|e| usage(e.to_string()))?;
            let p = load_pattern(pattern)?;
            let order = match order {
                OrderArg::Greedy => EdgeOrder::Greedy,
                OrderArg::EdgeId => EdgeOrder::EdgeId,
            };
            let o = max_rainbow_free_colors_with(&host, &p, budget(cli, b), order)?;
            r.put("host", host.to_string()).put("pattern", p.name()).put("status", o.status);
            match o.status {
                SearchStatus::Proved => {
                    r.put("value", o.value + 1).put("max_rainbow_free_colors", o.value);
                }
                SearchStatus::Inconclusive => {
                    r.put("value", Value::Null).put("best_found", o.value);
                    r.code = EXIT_INCONCLUSIVE;
                }
            }
            r.put("nodes", o.nodes).put("elapsed_ms", o.elapsed.as_millis() as u64);
            witness_file(&mut r, witness.as_deref(), o.witness.as_ref())?;
        }
        Command::Ramsey2 { n, target, witness, budget: b } => {
            let host = HostGraph::complete(*n).map_err(|e| usage(e.to_string()))?;
            let h = load_pattern(target)?;
            let o = ramsey2_search(&host, &h, budget(cli, b));
            r.put("host", host.to_string()).put("target", h.name()).put("status", o.status);
            match (o.status, &o.witness) {
                (SearchStatus::Inconclusive, _) => {
                    r.put("avoiding_coloring", "unknown");
                    r.code = EXIT_INCONCLUSIVE;
                }
                (SearchStatus::Proved, Some(_)) => {
                    r.put("avoiding_coloring", "found").put("bound", format!("R2 > {n}"));
                }
                (SearchStatus::Proved, None) => {
                    r.put("avoiding_coloring", "none").put("bound", format!("R2 <= {n}"));
                }
            }
            r.put("nodes", o.nodes).put("elapsed_ms", o.elapsed.as_millis() as u64);
            witness_file(&mut r, witness.as_deref(), o.witness.as_ref())?;
        }
        Command::Constrained { target, path, budget: b } => {
            let h = load_pattern(target)?;
            let path: PathKind = path.parse()?;
            let report = constrained_ramsey_check(&h, path, budget(cli, b))?;
            r.put("target", report.target.name()).put("path", path.to_string()).put("r2", report.r2);
            for hyp in &report.hypotheses {
                r.put(&format!("hypothesis {}", hyp.name), if hyp.held { "held" } else { "failed" });
            }
            r.put("lower_bound_verified", report.lower_bound_verified);
            r.put("upper_bound_verified", report.upper_bound_verified);
            r.put("f", report.f).put("nodes", report.nodes).put("trace", &report.trace);
        }
        Command::Canonical { t, host, h, g } => {
            let kind = match host {
                CanonicalArg::Ordered => CanonicalHost::Ordered,
                CanonicalArg::Tripartite => CanonicalHost::Tripartite,
            };
            let (h, g) = (load_pattern(h)?, load_pattern(g)?);
            let table = canonical_existence_check(&h, &g, *t, kind)?;
            r.put("host", kind.to_string()).put("t", t).put("H", h.name()).put("G", g.name());
            let rows: Vec<String> = table
                .rows
                .iter()
                .map(|row| {
                    let j: Vec<String> = row.j.iter().map(u8::to_string).collect();
                    format!("J={{{}}} palette={} mono={} rainbow={}", j.join(","), row.palette, row.mono, row.rainbow)
                })
                .collect();
            r.put("row", rows).put("exists", table.exists());
        }
        Command::Verify { suite, certificate, file, samples, random, seed, budget: b } => {
            if let (Some(cert_path), Some(file)) = (certificate, file) {
                let c = load_coloring(file)?;
                let cert = Certificate::from_json(&read(cert_path)?)
                    .map_err(|e| usage(format!("{}: {e}", cert_path.display())))?;
                r.put("case", cert.case());
                match verify_certificate(&c, &cert) {
                    Ok(()) => {
                        r.put("verified", true);
                    }
                    Err(e) => {
                        r.put("verified", false).put("reason", e.0);
                        r.code = EXIT_NEGATIVE;
                    }
                }
                return Ok(r);
            }
            let name = suite.as_deref().expect("clap requires a suite");
            let names: Vec<&str> = if name == "all" { SUITE_NAMES.to_vec() } else { vec![name] };
            let cfg = SuiteConfig { budget: budget(cli, b), samples: *samples, random: *random, seed: *seed };
            let mut worst = EXIT_OK;
            for name in names {
                let report = run_suite(name, &cfg).map_err(|e| usage(e.0))?;
                let code = match report.status {
                    SuiteStatus::Pass => EXIT_OK,
                    SuiteStatus::Fail => EXIT_NEGATIVE,
                    SuiteStatus::Inconclusive => EXIT_INCONCLUSIVE,
                    SuiteStatus::Violation => EXIT_VIOLATION,
                };
                worst = worst.max(code);
                let lines: Vec<String> = report
                    .checks
                    .iter()
                    .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                    .collect();
                r.put(&format!("suite {} (criterion {})", report.suite, report.criterion), report.status);
                r.put(&format!("checks {}", report.suite), lines);
            }
            r.code = worst;
        }
    }
    Ok(r)
}

fn rejected(mut r: Report, rej: Rejection) -> Report {
    match &rej {
        Rejection::PreconditionFailed(p) => {
            r.put("status", "PRECONDITION_FAILED").put("reason", p.to_string());
            if let Precondition::RainbowFound { pattern, witness } = p {
                r.put("witness_pattern", pattern).put("witness_vertices", &witness.images);
            }
            r.code = EXIT_NEGATIVE;
        }
        Rejection::TheoremViolation { reason, coloring } => {
            r.put("status", "THEOREM_VIOLATION").put("reason", reason).put("coloring", write_coloring(coloring));
            r.code = EXIT_VIOLATION;
        }
    }
    r
}

fn witness_file(r: &mut Report, path: Option<&Path>, w: Option<&Coloring>) -> Result<(), Failure> {
    match (path, w) {
        (Some(path), Some(c)) => {
            write(path, &write_coloring(c))?;
            r.put("witness", path.display().to_string());
        }
        (_, Some(c)) => {
            r.put("witness_palette", c.palette_size());
        }
        (_, None) => {
            r.put("witness", Value::Null);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["rhl"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ar_k6_messy() {
        let (code, out, _) = call(&["ar", "--host", "complete", "--n", "6", "--pattern", "M"]);
        assert_eq!(code, 0);
        assert!(out.contains("value: 11\n"), "{out}");
    }

    #[test]
    fn usage_errors_exit_3() {
        assert_eq!(call(&["ar", "--n", "x", "--pattern", "M"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["check", "--pattern", "T", "/no/such/file"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("/no/such/file"));
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn budget_exhaustion_exits_2() {
        let (code, out, _) = call(&["ar", "--n", "7", "--pattern", "M", "--budget-nodes", "1", "--order", "edge-id"]);
        assert_eq!(code, EXIT_INCONCLUSIVE, "{out}");
        assert!(out.contains("status: INCONCLUSIVE"));
    }

    #[test]
    fn json_keeps_key_order() {
        let (_, out, _) = call(&["--format", "json", "ar", "--n", "5", "--pattern", "T"]);
        let keys: Vec<String> = serde_json::from_str::<Value>(&out).unwrap().as_object().unwrap().keys().cloned().collect();
        assert_eq!(&keys[..4], ["host", "pattern", "status", "value"]);
    }
}
