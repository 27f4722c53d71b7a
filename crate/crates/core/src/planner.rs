//! Edge-contraction orders and their complexity.
//!
//! Contracting a non-loop edge merges its endpoints; the merged vertex has
//! degree `deg(u) + deg(v) - 2`, and any other edges between `u` and `v`
//! become loops there. Contracting a loop drops the degree by 2. The
//! complexity of an order is the largest post-step degree it produces.
//!
//! The minimum over all orders equals the treewidth of the line graph plus
//! one; this crate does not compute treewidth.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, UnionFind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionPlan {
    order: Vec<EdgeId>,
    complexity: usize,
}

impl ContractionPlan {
    pub fn order(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn complexity(&self) -> usize {
        self.complexity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanStep {
    pub edge: EdgeId,
    /// Degree of the merged or traced vertex after the step.
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanStats {
    pub per_step: Vec<PlanStep>,
    pub complexity: usize,
}

impl PlanStats {
    /// `r^complexity`, saturating: the size of a dense tensor at the widest step.
    pub fn peak_projected_entries(&self, r: usize) -> u64 {
        (0..self.complexity).fold(1u64, |acc, _| acc.saturating_mul(r as u64))
    }
}

/// Structural state of a partially contracted graph.
struct Contraction<'g> {
    g: &'g MultiGraph,
    uf: UnionFind,
    degree: Vec<usize>,
    done: Vec<bool>,
}

impl<'g> Contraction<'g> {
    fn new(g: &'g MultiGraph) -> Self {
        Contraction { g, uf: UnionFind::new(g.vertex_count()), degree: g.degrees(), done: vec![false; g.edge_count()] }
    }

    fn roots(&mut self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.g.endpoints(e);
        (self.uf.find(u.0), self.uf.find(v.0))
    }

    /// Post-step degree without performing the step.
    fn preview(&mut self, e: EdgeId) -> usize {
        let (a, b) = self.roots(e);
        if a == b {
            self.degree[a] - 2
        } else {
            self.degree[a] + self.degree[b] - 2
        }
    }

    fn step(&mut self, e: EdgeId) -> Result<usize> {
        if self.done[e.0] {
            return Err(Error::EdgeAlreadyContracted(e));
        }
        self.done[e.0] = true;
        let (a, b) = self.roots(e);
        let d = if a == b {
            self.degree[a] -= 2;
            self.degree[a]
        } else {
            let d = self.degree[a] + self.degree[b] - 2;
            let root = self.uf.union(a, b);
            self.degree[root] = d;
            d
        };
        Ok(d)
    }
}

fn check_permutation(g: &MultiGraph, order: &[EdgeId]) -> Result<()> {
    let m = g.edge_count();
    if order.len() != m {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; m];
    for e in order {
        if e.0 >= m || core::mem::replace(&mut seen[e.0], true) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

pub fn simulate_complexity(g: &MultiGraph, order: &[EdgeId]) -> Result<PlanStats> {
    check_permutation(g, order)?;
    let mut state = Contraction::new(g);
    let mut per_step = Vec::with_capacity(order.len());
    for &edge in order {
        let degree = state.step(edge)?;
        per_step.push(PlanStep { edge, degree });
    }
    let complexity = per_step.iter().map(|s| s.degree).max().unwrap_or(0);
    Ok(PlanStats { per_step, complexity })
}

pub fn plan_from_order(g: &MultiGraph, order: Vec<EdgeId>) -> Result<ContractionPlan> {
    let complexity = simulate_complexity(g, &order)?.complexity;
    Ok(ContractionPlan { order, complexity })
}

/// Greedy order: any pending loop goes first (smallest id), otherwise the edge
/// whose contraction leaves the smallest degree, ties to the smallest id.
pub fn plan_greedy(g: &MultiGraph) -> ContractionPlan {
    let mut state = Contraction::new(g);
    let mut pending: Vec<EdgeId> = g.edge_ids().collect();
    let mut order = Vec::with_capacity(pending.len());
    let mut complexity = 0;
    while !pending.is_empty() {
        let mut best: Option<(bool, usize, usize)> = None; // (not a loop, degree, slot)
        for (slot, &e) in pending.iter().enumerate() {
            let (a, b) = state.roots(e);
            let key = (a != b, state.preview(e), slot);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
            if !key.0 {
                break;
            }
        }
        let (_, _, slot) = best.expect("pending is non-empty");
        let e = pending.remove(slot);
        complexity = complexity.max(state.step(e).expect("each edge is taken once"));
        order.push(e);
    }
    ContractionPlan { order, complexity }
}
