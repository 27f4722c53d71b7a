//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use regcensus::corpus::{corpus, CorpusSpec};
use regcensus::named;
use regcensus_core::enumerator::{oracle_counts, oracle_genfun};
use regcensus_core::planner::{plan_from_order, plan_greedy, simulate_complexity};
use regcensus_core::ring::Scalar;
use regcensus_core::tensor::VertexWeights;
use regcensus_core::{EdgeId, Engine, MultiGraph, MultiPoly, Partition};

const SEED: u64 = 20240601;
const CORPUS_SIZE: usize = 240;
const KS: [usize; 3] = [1, 2, 3];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let graphs = corpus(SEED, CORPUS_SIZE, &CorpusSpec::default());
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(|| oracle_equivalence(&graphs))),
        ("polynomial identity at r = n+1", Box::new(|| polynomial_identity(&graphs))),
        ("k-factor constants", Box::new(k_factor_constants)),
        ("connected k-factors and roots of unity", Box::new(|| connected_counts(&graphs))),
        ("plan invariance", Box::new(|| plan_invariance(&graphs))),
        ("multiplicativity and degenerate cases", Box::new(|| multiplicativity(&graphs))),
        ("planner quality", Box::new(|| planner_quality(&graphs))),
        ("performance smoke", Box::new(performance_smoke)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn describe(g: &MultiGraph) -> String {
    format!("n={} edges={:?}", g.vertex_count(), g.edges().iter().map(|(u, v)| (u.0, v.0)).collect::<Vec<_>>())
}

fn oracle_equivalence(graphs: &[MultiGraph]) -> Outcome {
    let engine = Engine::default();
    let bad: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| KS.iter().map(move |&k| (g, k)))
        .filter_map(|(g, k)| {
            let gf = engine.genfun(g, k).map_err(|e| e.to_string());
            let oracle = oracle_counts(g, k).map_err(|e| e.to_string());
            match (gf, oracle) {
                (Ok(a), Ok(b)) if a.counts == b.counts => None,
                (a, b) => Some(format!(
                    "{} k={k}: engine {:?} oracle {:?}",
                    describe(g),
                    a.map(|x| x.counts),
                    b.map(|x| x.counts)
                )),
            }
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} graphs x 3 degrees agree exactly", graphs.len()))
    } else {
        Err(format!("{} mismatches, first: {}", bad.len(), bad[0]))
    }
}

fn polynomial_identity(graphs: &[MultiGraph]) -> Outcome {
    let engine = Engine::default();
    let bad: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| KS.iter().map(move |&k| (g, k)))
        .filter_map(|(g, k)| {
            let r = g.vertex_count() + 1;
            let f = engine.symbolic(g, k, r).map_err(|e| e.to_string());
            let expected = oracle_counts(g, k).and_then(|c| oracle_genfun(&c, r)).map_err(|e| e.to_string());
            match (f, expected) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("{} k={k}: engine {a:?} oracle {b:?}", describe(g))),
            }
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} graphs x 3 degrees, polynomials identical", graphs.len()))
    } else {
        Err(format!("{} mismatches, first: {}", bad.len(), bad[0]))
    }
}

fn k_factor_constants() -> Outcome {
    let mut cases: Vec<(String, MultiGraph, usize, u64)> = vec![
        ("K4".into(), named::complete(4), 1, 3),
        ("K3,3".into(), named::complete_bipartite(3, 3), 1, 6),
        ("K6".into(), named::complete(6), 1, 15),
        ("Petersen".into(), named::petersen(), 1, 6),
        ("K4".into(), named::complete(4), 3, 1),
    ];
    for n in 3..=8 {
        cases.push((format!("C{n}"), named::cycle(n), 2, 1));
    }
    let engine = Engine::default();
    let mut slowest = Duration::ZERO;
    for (name, g, k, expected) in &cases {
        let start = Instant::now();
        let got = engine.count_k_factors(g, *k).map_err(|e| format!("{name} k={k}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        if got != BigInt::from(*expected) {
            return Err(format!("{name} k={k}: got {got}, expected {expected}"));
        }
        if took >= Duration::from_secs(1) {
            return Err(format!("{name} k={k} took {took:?}"));
        }
        let oracle = oracle_counts(g, *k).map_err(|e| e.to_string())?;
        let oracle_total: BigInt =
            oracle.counts.iter().filter(|(l, _)| l.weight() as usize == g.vertex_count()).map(|(_, c)| c.clone()).sum();
        if oracle_total != got {
            return Err(format!("{name} k={k}: oracle gives {oracle_total}"));
        }
    }
    Ok(format!("{} constants match, slowest {:.1} ms", cases.len(), slowest.as_secs_f64() * 1e3))
}

fn connected_counts(graphs: &[MultiGraph]) -> Outcome {
    let engine = Engine::default();
    let constants = [
        ("K4", named::complete(4), 3u64),
        ("K5", named::complete(5), 12),
        ("Petersen", named::petersen(), 0),
        ("C6", named::cycle(6), 1),
    ];
    for (name, g, expected) in &constants {
        let got = engine.count_connected_k_factors(g, 2).map_err(|e| format!("{name}: {e}"))?;
        if got != BigInt::from(*expected) {
            return Err(format!("{name}: got {got}, expected {expected}"));
        }
    }
    let mut small: Vec<MultiGraph> = graphs.to_vec();
    small.extend([named::complete(4), named::complete(5), named::cycle(6), named::complete_bipartite(3, 3)]);
    let results: Vec<Result<f64, String>> = small
        .par_iter()
        .filter(|g| g.vertex_count() <= 6)
        .flat_map_iter(|g| KS.iter().map(move |&k| (g, k)))
        .map(|(g, k)| {
            let exact = engine.count_connected_k_factors(g, k).map_err(|e| e.to_string())?;
            let check = engine.check_roots_of_unity(g, k).map_err(|e| format!("{} k={k}: {e}", describe(g)))?;
            if check.count != exact || check.residual > 1e-6 {
                return Err(format!("{} k={k}: exact {exact}, roots of unity {:?}", describe(g), check));
            }
            Ok(check.residual)
        })
        .collect();
    let mut worst: f64 = 0.0;
    for r in &results {
        worst = worst.max(r.clone()?);
    }
    Ok(format!("4 constants match; {} roots-of-unity checks agree, worst residual {worst:.2e}", results.len()))
}

fn plan_invariance(graphs: &[MultiGraph]) -> Outcome {
    let picked: Vec<&MultiGraph> = graphs.iter().filter(|g| (4..=7).contains(&g.edge_count())).take(20).collect();
    if picked.len() < 20 {
        return Err(format!("corpus has only {} graphs with 4..=7 edges", picked.len()));
    }
    let mut orders = 0usize;
    for g in &picked {
        let r = g.vertex_count() + 1;
        let m = g.edge_count();
        let expected = Engine::default().symbolic(g, 2, r).map_err(|e| e.to_string())?;
        let perms: Vec<Vec<EdgeId>> = (0..m).map(EdgeId).permutations(m).collect();
        orders += perms.len();
        let bad = perms.into_par_iter().find_any(|order| {
            let plan = plan_from_order(g, order.clone()).expect("permutation");
            Engine::default().with_plan(plan).symbolic(g, 2, r).as_ref() != Ok(&expected)
        });
        if let Some(order) = bad {
            return Err(format!("{} differs under order {order:?}", describe(g)));
        }
    }
    Ok(format!("20 graphs, {orders} orders, identical symbolic values (k=2, r=n+1)"))
}

fn multiplicativity(graphs: &[MultiGraph]) -> Outcome {
    let engine = Engine::default();
    let r = 4;
    for i in 0..50 {
        let (a, b) = (&graphs[2 * i], &graphs[2 * i + 1]);
        let k = KS[i % 3];
        let u = a.disjoint_union(b);
        let fa = engine.symbolic(a, k, r).map_err(|e| e.to_string())?;
        let fb = engine.symbolic(b, k, r).map_err(|e| e.to_string())?;
        let fu = engine.symbolic(&u, k, r).map_err(|e| e.to_string())?;
        if fu != &fa * &fb {
            return Err(format!("pair {i} k={k}: {} and {}", describe(a), describe(b)));
        }
    }
    for g in graphs.iter().take(60) {
        let n = g.vertex_count();
        let r = n + 1;
        let nvars = r - 1;
        let weights = VertexWeights { x: vec![MultiPoly::zero(nvars); nvars], t: MultiPoly::t(nvars) };
        for k in KS {
            let (value, _) = engine.evaluate(g, k, &weights).map_err(|e| e.to_string())?;
            if value != MultiPoly::t(nvars).pow_u32(n as u32) {
                return Err(format!("all-x-zero on {} k={k} gave {value}", describe(g)));
            }
        }
        let k = g.max_degree() + 1;
        let gf = engine.genfun(g, k).map_err(|e| e.to_string())?;
        let only_empty: BTreeMap<Partition, BigInt> = [(Partition::empty(), BigInt::from(1))].into();
        if gf.counts != only_empty {
            return Err(format!("k={k} above max degree on {} gave {:?}", describe(g), gf.counts));
        }
    }
    Ok("50 disjoint-union pairs multiply; all-x-zero gives t^n and k > max degree gives {[]: 1} on 60 graphs".into())
}

fn planner_quality(graphs: &[MultiGraph]) -> Outcome {
    let mut gaps: BTreeMap<usize, usize> = BTreeMap::new();
    let mut beats_identity = 0;
    let mut loses_to_identity = Vec::new();
    let small: Vec<&MultiGraph> = graphs.iter().filter(|g| g.edge_count() <= 8).collect();
    for g in &small {
        let m = g.edge_count();
        let greedy = plan_greedy(g).complexity();
        let best = (0..m)
            .map(EdgeId)
            .permutations(m)
            .par_bridge()
            .map(|order| simulate_complexity(g, &order).expect("permutation").complexity)
            .min()
            .unwrap_or(0);
        let identity: Vec<EdgeId> = (0..m).map(EdgeId).collect();
        let naive = simulate_complexity(g, &identity).map_err(|e| e.to_string())?.complexity;
        if greedy > best + 2 {
            return Err(format!("greedy {greedy} vs exhaustive {best} on {}", describe(g)));
        }
        if greedy > naive {
            loses_to_identity.push(describe(g));
        } else if greedy < naive {
            beats_identity += 1;
        }
        *gaps.entry(greedy - best).or_default() += 1;
    }
    let dist = gaps.iter().map(|(gap, c)| format!("gap {gap}: {c}")).join(", ");
    let mut detail =
        format!("{} graphs with <= 8 edges; {dist}; greedy beats identity order on {beats_identity}", small.len());
    if !loses_to_identity.is_empty() {
        detail.push_str(&format!(
            "; loses to identity order on {} (first: {})",
            loses_to_identity.len(),
            loses_to_identity[0]
        ));
    }
    Ok(detail)
}

fn performance_smoke() -> Outcome {
    let engine = Engine::default();
    let mut parts = Vec::new();
    for (name, g) in [("C1000", named::cycle(1000)), ("3x100 grid", named::grid(3, 100))] {
        let start = Instant::now();
        let count = engine.count_k_factors(&g, 2).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        if took >= Duration::from_secs(5) {
            return Err(format!("{name} took {took:?}"));
        }
        parts.push(format!("{name} {count} 2-factors in {:.0} ms", took.as_secs_f64() * 1e3));
    }
    if parts[0].starts_with("C1000 1 ") {
        Ok(parts.join(", "))
    } else {
        Err(format!("C1000 should have exactly one 2-factor: {}", parts[0]))
    }
}
