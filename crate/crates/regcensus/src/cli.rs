//! The `regcensus` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 resource cap, 4 tolerance
//! failure, 5 verification mismatch, 1 anything else.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use regcensus_core::enumerator::{oracle_counts, oracle_genfun, ORACLE_MAX_EDGES};
use regcensus_core::planner::{plan_greedy, simulate_complexity};
use regcensus_core::tensor::DEFAULT_MAX_ENTRIES;
use regcensus_core::{Engine, Error as CoreError, MultiGraph, MultiPoly, Partition};

use crate::corpus::{corpus, CorpusSpec};
use crate::formats::{self, FormatError};
use crate::named;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Greedy contraction order and its complexity
    Plan,
    /// Number of k-factors
    Count,
    /// Number of connected k-factors
    Connected,
    /// All counts of k-regular subgraphs by component type
    Genfun,
    /// The same counts by brute-force enumeration
    Oracle,
    /// Compare genfun against the oracle
    Verify,
    /// Time k-factor counting on a fixed family of graphs
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum GraphFormat {
    #[default]
    Edgelist,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "regcensus", version, about = "Count k-regular subgraphs by tensor network contraction")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Graph file, or a built-in name: k<n>, c<n>, p<n>, ladder<n>, grid<m>x<n>, kb<m>,<n>, petersen
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    pub format: GraphFormat,
    #[arg(long)]
    pub k: Option<usize>,
    /// Tensor dimension (plan report, genfun, oracle)
    #[arg(long)]
    pub r: Option<usize>,
    /// Plan file to contract along instead of the greedy order
    #[arg(long)]
    pub order: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ENTRIES, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_tensor_entries: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also evaluate at roots of unity in floating point (connected)
    #[arg(long)]
    pub float_check: bool,
    /// Number of random multigraphs to verify
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0} verification case(s) failed")]
    Mismatch(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Format(_) => 2,
            CliError::Core(e) => match e {
                CoreError::TensorTooLarge { .. } => 3,
                CoreError::ToleranceExceeded { .. } => 4,
                CoreError::TooManyEdges { .. }
                | CoreError::InsufficientVariables { .. }
                | CoreError::NotAPermutation
                | CoreError::InvalidDegree
                | CoreError::DimensionTooSmall(_)
                | CoreError::EmptyGraph
                | CoreError::IndexOutOfRange { .. } => 2,
                _ => 1,
            },
            CliError::Mismatch(_) => 5,
            CliError::Io(_) => 1,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    match cfg.command {
        Command::Plan => cmd_plan(cfg, out),
        Command::Count => cmd_count(cfg, out),
        Command::Connected => cmd_connected(cfg, out),
        Command::Genfun => cmd_genfun(cfg, out),
        Command::Oracle => cmd_oracle(cfg, out),
        Command::Verify => cmd_verify(cfg, out),
        Command::Bench => cmd_bench(cfg, out),
    }
}

fn load_graph(cfg: &RunConfig) -> CliResult<MultiGraph> {
    let spec = cfg.graph.as_deref().ok_or_else(|| CliError::Input("--graph is required".into()))?;
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok(match cfg.format {
            GraphFormat::Edgelist => formats::parse_edge_list(&text)?,
            GraphFormat::Json => formats::graph_from_json(&text)?,
        });
    }
    named::by_name(spec)
        .ok_or_else(|| CliError::Input(format!("`{spec}` is neither a readable file nor a built-in graph")))
}

fn require_k(cfg: &RunConfig) -> CliResult<usize> {
    match cfg.k {
        Some(0) => Err(CliError::Input("--k must be at least 1".into())),
        Some(k) => Ok(k),
        None => Err(CliError::Input("--k is required".into())),
    }
}

fn engine_for(cfg: &RunConfig, g: &MultiGraph) -> CliResult<Engine> {
    let mut engine = Engine::default().with_max_entries(cfg.max_tensor_entries);
    if let Some(path) = &cfg.order {
        let text = std::fs::read_to_string(path)?;
        engine = engine.with_plan(formats::parse_plan(&text, g)?);
    }
    Ok(engine)
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> CliResult {
    writeln!(out, "{}", serde_json::to_string(value).expect("json values serialize"))?;
    Ok(())
}

fn cmd_plan(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let g = load_graph(cfg)?;
    let plan = match &cfg.order {
        Some(path) => formats::parse_plan(&std::fs::read_to_string(path)?, &g)?,
        None => plan_greedy(&g),
    };
    let stats = simulate_complexity(&g, plan.order())?;
    let r = cfg.r.unwrap_or(2);
    let peak = stats.peak_projected_entries(r);
    if cfg.json {
        let steps: Vec<_> = stats.per_step.iter().map(|s| json!({"edge": s.edge.0, "degree": s.degree})).collect();
        return emit_json(
            out,
            &json!({
                "n": g.vertex_count(),
                "edges": g.edge_count(),
                "complexity": plan.complexity(),
                "r": r,
                "peak_projected_entries": peak,
                "order": plan.order().iter().map(|e| e.0).collect::<Vec<_>>(),
                "steps": steps,
            }),
        );
    }
    // the report is itself a valid plan file: everything but the plan is a comment
    writeln!(out, "# graph: {} vertices, {} edges", g.vertex_count(), g.edge_count())?;
    writeln!(out, "# step edge degree")?;
    for (i, s) in stats.per_step.iter().enumerate() {
        writeln!(out, "# {} {} {}", i + 1, s.edge, s.degree)?;
    }
    writeln!(out, "# complexity {}", plan.complexity())?;
    writeln!(out, "# peak_projected_entries {peak} (r={r})")?;
    writeln!(out, "# line-graph treewidth: not computed (best possible complexity = tw + 1)")?;
    write!(out, "{}", formats::write_plan(&plan))?;
    Ok(())
}

fn cmd_count(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let g = load_graph(cfg)?;
    let k = require_k(cfg)?;
    let count = engine_for(cfg, &g)?.count_k_factors(&g, k)?;
    if cfg.json {
        return emit_json(out, &json!({"n": g.vertex_count(), "k": k, "k_factors": count.to_string()}));
    }
    writeln!(out, "{count}")?;
    Ok(())
}

fn cmd_connected(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let g = load_graph(cfg)?;
    let k = require_k(cfg)?;
    let engine = engine_for(cfg, &g)?;
    let exact = engine.count_connected_k_factors(&g, k)?;
    let check = if cfg.float_check { Some(engine.check_roots_of_unity(&g, k)?) } else { None };
    if cfg.json {
        let mut v = json!({"n": g.vertex_count(), "k": k, "connected_k_factors": exact.to_string()});
        if let Some(c) = &check {
            v["float_check"] = json!({"count": c.count.to_string(), "residual": c.residual});
        }
        emit_json(out, &v)?;
    } else if let Some(c) = &check {
        writeln!(out, "exact {exact}")?;
        writeln!(out, "roots_of_unity {} (residual {:.3e})", c.count, c.residual)?;
    } else {
        writeln!(out, "{exact}")?;
    }
    match check {
        Some(c) if c.count != exact => Err(CliError::Mismatch(1)),
        _ => Ok(()),
    }
}

fn write_counts(out: &mut dyn Write, counts: &BTreeMap<Partition, BigInt>, poly: &MultiPoly) -> CliResult {
    for (lambda, c) in counts {
        writeln!(out, "{lambda}: {c}")?;
    }
    writeln!(out, "F = {poly}")?;
    Ok(())
}

fn genfun_r(cfg: &RunConfig, g: &MultiGraph) -> usize {
    cfg.r.unwrap_or((g.vertex_count() + 1).max(2))
}

fn cmd_genfun(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let g = load_graph(cfg)?;
    let k = require_k(cfg)?;
    let r = genfun_r(cfg, &g);
    let gf = engine_for(cfg, &g)?.genfun_at(&g, k, r)?;
    if cfg.json {
        return emit_json(out, &serde_json::to_value(formats::genfun_json(&gf)).expect("serializable"));
    }
    write_counts(out, &gf.counts, &gf.polynomial(r - 1))
}

fn cmd_oracle(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let g = load_graph(cfg)?;
    let k = require_k(cfg)?;
    let r = genfun_r(cfg, &g);
    let oc = oracle_counts(&g, k)?;
    let gf = regcensus_core::GeneratingFunction { n: oc.n, k, counts: oc.counts.clone() };
    if cfg.json {
        return emit_json(out, &serde_json::to_value(formats::genfun_json(&gf)).expect("serializable"));
    }
    write_counts(out, &oc.counts, &oracle_genfun(&oc, r)?)
}

struct Case {
    label: String,
    k: usize,
    outcome: Result<Option<String>, CoreError>, // Ok(None) = agreement
}

fn check_case(engine: &Engine, g: &MultiGraph, k: usize) -> Result<Option<String>, CoreError> {
    let oracle = oracle_counts(g, k)?;
    let gf = engine.genfun(g, k)?;
    if gf.counts == oracle.counts {
        Ok(None)
    } else {
        Ok(Some(format!("engine {} vs oracle {}", show_counts(&gf.counts), show_counts(&oracle.counts))))
    }
}

fn show_counts(c: &BTreeMap<Partition, BigInt>) -> String {
    let parts: Vec<String> = c.iter().map(|(l, n)| format!("{l}:{n}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let ks = match cfg.k {
        Some(_) => vec![require_k(cfg)?],
        None => vec![1, 2, 3],
    };
    let mut graphs: Vec<(String, MultiGraph)> = Vec::new();
    if cfg.graph.is_some() {
        let g = load_graph(cfg)?;
        if g.edge_count() > ORACLE_MAX_EDGES {
            return Err(CoreError::TooManyEdges { edges: g.edge_count(), cap: ORACLE_MAX_EDGES }.into());
        }
        graphs.push((cfg.graph.clone().unwrap_or_default(), g));
    }
    if let Some(count) = cfg.random {
        for (i, g) in corpus(cfg.seed, count, &CorpusSpec::default()).into_iter().enumerate() {
            graphs.push((format!("random#{i}(n={},m={})", g.vertex_count(), g.edge_count()), g));
        }
    }
    if graphs.is_empty() {
        return Err(CliError::Input("verify needs --graph or --random".into()));
    }
    let engine = Engine::default().with_max_entries(cfg.max_tensor_entries);
    let jobs: Vec<(&str, &MultiGraph, usize)> =
        graphs.iter().flat_map(|(l, g)| ks.iter().map(move |&k| (l.as_str(), g, k))).collect();
    // par_iter keeps the input order in the collected vector
    let cases: Vec<Case> = jobs
        .par_iter()
        .map(|&(label, g, k)| Case { label: label.to_string(), k, outcome: check_case(&engine, g, k) })
        .collect();

    let mut failed = 0;
    let mut rows = Vec::new();
    for case in cases {
        let note = case.outcome?;
        failed += note.is_some() as usize;
        if cfg.json {
            rows.push(json!({"graph": case.label, "k": case.k, "pass": note.is_none()}));
        } else {
            match note {
                None => writeln!(out, "PASS {} k={}", case.label, case.k)?,
                Some(why) => writeln!(out, "FAIL {} k={}: {why}", case.label, case.k)?,
            }
        }
    }
    let total = jobs.len();
    if cfg.json {
        emit_json(out, &json!({"cases": rows, "passed": total - failed, "failed": failed}))?;
    } else {
        writeln!(out, "{} {}/{} cases agree", if failed == 0 { "PASS" } else { "FAIL" }, total - failed, total)?;
    }
    if failed > 0 {
        Err(CliError::Mismatch(failed))
    } else {
        Ok(())
    }
}

/// Graphs timed by `bench`, in report order.
pub fn bench_family() -> Vec<(String, MultiGraph)> {
    let mut v: Vec<(String, MultiGraph)> = Vec::new();
    for n in [10, 100, 1000] {
        v.push((format!("p{n}"), named::path(n)));
    }
    for n in [10, 100, 1000] {
        v.push((format!("c{n}"), named::cycle(n)));
    }
    for n in [10, 50, 100] {
        v.push((format!("ladder{n}"), named::ladder(n)));
    }
    v.push(("grid3x100".into(), named::grid(3, 100)));
    for n in 4..=8 {
        v.push((format!("k{n}"), named::complete(n)));
    }
    v
}

fn cmd_bench(cfg: &RunConfig, out: &mut dyn Write) -> CliResult {
    let k = cfg.k.map(|_| require_k(cfg)).transpose()?.unwrap_or(2);
    let engine = Engine::default().with_max_entries(cfg.max_tensor_entries);
    let mut rows = Vec::new();
    if !cfg.json {
        writeln!(
            out,
            "{:<10} {:>5} {:>5} {:>10} {:>12} {:>10} {:>14} {:>10}",
            "graph", "n", "m", "complexity", "peak_entries", "max_nnz", "k_factors", "ms"
        )?;
    }
    for (name, g) in bench_family() {
        let start = Instant::now();
        let plan = plan_greedy(&g);
        let peak = simulate_complexity(&g, plan.order())?.peak_projected_entries(2);
        // a capped row still reports its plan; the remaining graphs keep running
        let counted = match engine.clone().with_plan(plan.clone()).count_k_factors_with_stats(&g, k) {
            Ok(pair) => Some(pair),
            Err(CoreError::TensorTooLarge { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        if cfg.json {
            let (count, max_nnz) = match &counted {
                Some((c, s)) => (json!(c.to_string()), json!(s.max_nnz)),
                None => (json!(null), json!(null)),
            };
            rows.push(json!({
                "graph": name, "n": g.vertex_count(), "m": g.edge_count(), "k": k,
                "complexity": plan.complexity(), "peak_projected_entries": peak,
                "max_nnz": max_nnz, "k_factors": count, "capped": counted.is_none(), "ms": ms,
            }));
        } else {
            let (shown, max_nnz) = match &counted {
                Some((c, s)) => (abbreviate(c), s.max_nnz.to_string()),
                None => ("cap".to_string(), "-".to_string()),
            };
            writeln!(
                out,
                "{:<10} {:>5} {:>5} {:>10} {:>12} {:>10} {:>14} {:>10.1}",
                name,
                g.vertex_count(),
                g.edge_count(),
                plan.complexity(),
                peak,
                max_nnz,
                shown,
                ms
            )?;
        }
    }
    if cfg.json {
        emit_json(out, &json!({"k": k, "rows": rows}))?;
    }
    Ok(())
}

fn abbreviate(n: &impl Display) -> String {
    let s = n.to_string();
    if s.len() <= 14 {
        s
    } else {
        format!("{}..e{}", &s[..6], s.len() - 1)
    }
}
