//! Tensor network assembly and contraction.
//!
//! Every vertex of degree `d` carries `A_{d,k}`, its index positions bound to
//! the incident half-edges in edge order, and every edge contracts the two
//! positions of its half-edges through the bilinear form. With the identity
//! form and `r = n + 1` the resulting polynomial is
//! `Σ_λ N_{k,λ}(G) t^{n-|λ|} p_λ(x1..x_{r-1})`, where `N_{k,λ}` counts the
//! k-regular subgraphs whose component sizes form `λ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::graph::{HalfEdge, MultiGraph, UnionFind, VertexId};
use crate::planner::{plan_greedy, simulate_complexity, ContractionPlan};
use crate::ring::{extract_partition_coefficients, power_sum_product, Monomial, MultiPoly, Partition, Scalar};
use crate::tensor::{
    build_vertex_tensor, contract_pair, self_trace, BilinearForm, SparseTensor, VertexWeights, DEFAULT_MAX_ENTRIES,
};

/// Residual allowed when rounding the floating roots-of-unity evaluation.
pub const ROOTS_TOLERANCE: f64 = 1e-6;

/// A graph with a tensor at every vertex.
#[derive(Debug, Clone)]
pub struct TensorNetwork<S> {
    graph: MultiGraph,
    k: usize,
    vertex_tensors: Vec<SparseTensor<S>>,
    // per vertex: position -> half-edge occupying it
    slots: Vec<Vec<HalfEdge>>,
    form: BilinearForm<S>,
    one: S,
}

impl<S: Scalar> TensorNetwork<S> {
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.form.dim()
    }

    pub fn vertex_tensor(&self, v: VertexId) -> &SparseTensor<S> {
        &self.vertex_tensors[v.0]
    }

    /// Half-edges in index-position order at `v`.
    pub fn slots(&self, v: VertexId) -> &[HalfEdge] {
        &self.slots[v.0]
    }
}

/// Places `A_{d,k}` (with dimension `r`) on every vertex of `g`.
pub fn build_network<S: Scalar>(
    g: &MultiGraph,
    k: usize,
    r: usize,
    weights: &VertexWeights<S>,
    form: BilinearForm<S>,
) -> Result<TensorNetwork<S>> {
    if r < 2 {
        return Err(Error::DimensionTooSmall(r));
    }
    if k == 0 {
        return Err(Error::InvalidDegree);
    }
    if weights.dim() != r {
        return Err(Error::VariableCountMismatch { left: r - 1, right: weights.x.len() });
    }
    if form.dim() != r {
        return Err(Error::DimensionMismatch { left: r, right: form.dim() });
    }
    let mut vertex_tensors = Vec::with_capacity(g.vertex_count());
    let mut slots = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let halves = g.half_edges_at(VertexId(v))?;
        vertex_tensors.push(build_vertex_tensor(halves.len(), k, weights)?);
        slots.push(halves.to_vec());
    }
    Ok(TensorNetwork { graph: g.clone(), k, vertex_tensors, slots, form, one: weights.t.one_like() })
}

/// Size statistics gathered while contracting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ContractionStats {
    /// Largest number of stored entries in any intermediate tensor.
    pub max_nnz: usize,
    pub max_arity: usize,
}

pub fn contract_network<S: Scalar>(net: &TensorNetwork<S>, plan: &ContractionPlan, max_entries: u64) -> Result<S> {
    contract_network_with_stats(net, plan, max_entries).map(|(v, _)| v)
}

pub fn contract_network_with_stats<S: Scalar>(
    net: &TensorNetwork<S>,
    plan: &ContractionPlan,
    max_entries: u64,
) -> Result<(S, ContractionStats)> {
    let g = &net.graph;
    simulate_complexity(g, plan.order())?;

    let mut live: Vec<Option<(SparseTensor<S>, Vec<HalfEdge>)>> =
        net.vertex_tensors.iter().cloned().zip(net.slots.iter().cloned()).map(Some).collect();
    let mut owner = UnionFind::new(g.vertex_count());
    let mut stats = ContractionStats::default();
    for t in &net.vertex_tensors {
        stats.max_nnz = stats.max_nnz.max(t.nnz());
        stats.max_arity = stats.max_arity.max(t.arity());
    }

    let position = |slots: &[HalfEdge], h: HalfEdge| {
        slots.iter().position(|&s| s == h).ok_or(Error::InternalSlotError("half-edge not found at its owner"))
    };
    for (step, &e) in plan.order().iter().enumerate() {
        let at_step = |err: Error| match err {
            Error::TensorTooLarge { projected, cap, .. } => {
                Error::TensorTooLarge { projected, cap, step: Some((step, e)) }
            }
            other => other,
        };
        let (h0, h1) = e.half_edges();
        let a = owner.find(g.attachment(h0).0);
        let b = owner.find(g.attachment(h1).0);
        let (tensor, slots) = if a == b {
            let (t, s) = live[a].take().ok_or(Error::InternalSlotError("owner has no tensor"))?;
            let (p, q) = (position(&s, h0)?, position(&s, h1)?);
            let traced = self_trace(&t, p, q, &net.form)?;
            let rest = s.into_iter().filter(|&x| x != h0 && x != h1).collect();
            (traced, rest)
        } else {
            let (ta, sa) = live[a].take().ok_or(Error::InternalSlotError("owner has no tensor"))?;
            let (tb, sb) = live[b].take().ok_or(Error::InternalSlotError("owner has no tensor"))?;
            let (p, q) = (position(&sa, h0)?, position(&sb, h1)?);
            let merged = contract_pair(&ta, p, &tb, q, &net.form, max_entries).map_err(at_step)?;
            let rest = sa.into_iter().filter(|&x| x != h0).chain(sb.into_iter().filter(|&x| x != h1)).collect();
            (merged, rest)
        };
        stats.max_nnz = stats.max_nnz.max(tensor.nnz());
        stats.max_arity = stats.max_arity.max(tensor.arity());
        let root = owner.union(a, b);
        live[root] = Some((tensor, slots));
    }

    // one scalar per connected component; the network value is their product
    let mut value = net.one.clone();
    for (t, s) in live.into_iter().flatten() {
        if t.arity() != 0 || !s.is_empty() {
            return Err(Error::InternalSlotError("uncontracted index left over"));
        }
        match t.as_scalar() {
            Some(v) => value = value.mul_ref(v),
            None => return Ok((net.one.zero_like(), stats)),
        }
    }
    Ok((value, stats))
}

/// The counts `N_{k,λ}(G)` for every partition `λ`, zeros omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunction {
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<Partition, BigInt>,
}

impl GeneratingFunction {
    pub fn count(&self, lambda: &Partition) -> BigInt {
        self.counts.get(lambda).cloned().unwrap_or_default()
    }

    /// `Σ_λ N_λ t^{n-|λ|} p_λ` in `nvars` x-variables.
    pub fn polynomial(&self, nvars: usize) -> MultiPoly {
        let mut f = MultiPoly::zero(nvars);
        for (lambda, c) in &self.counts {
            let t_part =
                MultiPoly::monomial(Monomial::new(alloc::vec![0; nvars], self.n as u32 - lambda.weight()), c.clone());
            f = &f + &(&t_part * &power_sum_product(lambda, nvars));
        }
        f
    }
}

/// Outcome of the floating roots-of-unity evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct RootsOfUnityCheck {
    pub count: BigInt,
    /// `F / n` before rounding.
    pub value: Complex64,
    pub residual: f64,
}

/// Contraction settings shared by the counting entry points.
#[derive(Debug, Clone)]
pub struct Engine {
    pub max_entries: u64,
    /// Contraction order to use instead of the greedy one.
    pub plan: Option<ContractionPlan>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine { max_entries: DEFAULT_MAX_ENTRIES, plan: None }
    }
}

impl Engine {
    pub fn with_max_entries(mut self, max_entries: u64) -> Self {
        self.max_entries = max_entries;
        self
    }

    pub fn with_plan(mut self, plan: ContractionPlan) -> Self {
        self.plan = Some(plan);
        self
    }

    fn plan_for(&self, g: &MultiGraph) -> ContractionPlan {
        self.plan.clone().unwrap_or_else(|| plan_greedy(g))
    }

    /// Contracts the identity-form network with the given vertex weights.
    pub fn evaluate<S: Scalar>(
        &self,
        g: &MultiGraph,
        k: usize,
        weights: &VertexWeights<S>,
    ) -> Result<(S, ContractionStats)> {
        let r = weights.dim();
        let net = build_network(g, k, r, weights, BilinearForm::identity(r))?;
        contract_network_with_stats(&net, &self.plan_for(g), self.max_entries)
    }

    /// The symbolic network value at dimension `r`.
    pub fn symbolic(&self, g: &MultiGraph, k: usize, r: usize) -> Result<MultiPoly> {
        if r < 2 {
            return Err(Error::DimensionTooSmall(r));
        }
        self.evaluate(g, k, &VertexWeights::symbolic(r)).map(|(v, _)| v)
    }

    /// All `N_{k,λ}(G)`, contracting symbolically at `r = n + 1`.
    pub fn genfun(&self, g: &MultiGraph, k: usize) -> Result<GeneratingFunction> {
        self.genfun_at(g, k, (g.vertex_count() + 1).max(2))
    }

    /// As [`Engine::genfun`] with an explicit `r`, which must be at least `n + 1`.
    pub fn genfun_at(&self, g: &MultiGraph, k: usize, r: usize) -> Result<GeneratingFunction> {
        let n = g.vertex_count();
        if r < n + 1 {
            return Err(Error::InsufficientVariables { needed: n, have: r.saturating_sub(1) });
        }
        let f = self.symbolic(g, k, r)?;
        let counts = extract_partition_coefficients(&f, n as u32)?;
        Ok(GeneratingFunction { n, k, counts })
    }

    /// Number of k-factors: the network value at `r = 2`, `x1 = 1`, `t = 0`.
    pub fn count_k_factors(&self, g: &MultiGraph, k: usize) -> Result<BigInt> {
        self.count_k_factors_with_stats(g, k).map(|(v, _)| v)
    }

    pub fn count_k_factors_with_stats(&self, g: &MultiGraph, k: usize) -> Result<(BigInt, ContractionStats)> {
        self.evaluate(g, k, &VertexWeights::numeric(alloc::vec![BigInt::one()], BigInt::zero()))
    }

    /// Number of connected k-factors, read from the exact generating function as `N_{k,[n]}`.
    pub fn count_connected_k_factors(&self, g: &MultiGraph, k: usize) -> Result<BigInt> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.genfun(g, k)?.count(&Partition::from([n as u32])))
    }

    /// Connected k-factors through floating evaluation at `x_j = e^{2πij/n}`, `t = 0`,
    /// `r = n + 1`, divided by `n` and rounded.
    pub fn check_roots_of_unity(&self, g: &MultiGraph, k: usize) -> Result<RootsOfUnityCheck> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let x = (1..=n).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64)).collect();
        let (f, _) = self.evaluate(g, k, &VertexWeights::numeric(x, Complex64::new(0.0, 0.0)))?;
        let value = f / n as f64;
        let nearest = Float::round(value.re);
        let residual = (value - Complex64::new(nearest, 0.0)).norm();
        if residual.is_nan() || residual > ROOTS_TOLERANCE {
            return Err(Error::ToleranceExceeded { value: value.re, residual });
        }
        let count = BigInt::from_f64(nearest).ok_or(Error::ToleranceExceeded { value: value.re, residual })?;
        Ok(RootsOfUnityCheck { count, value, residual })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;
    use crate::planner::plan_from_order;
    use alloc::string::ToString;
    use alloc::vec;

    fn g(n: usize, e: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::new(n, e.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn counts(pairs: &[(&[u32], i64)]) -> BTreeMap<Partition, BigInt> {
        pairs.iter().map(|&(p, c)| (Partition::from(p), BigInt::from(c))).collect()
    }

    #[test]
    fn network_layout() {
        let k2 = g(2, &[(0, 1)]);
        let net = build_network(&k2, 1, 2, &VertexWeights::symbolic(2), BilinearForm::identity(2)).unwrap();
        for v in 0..2 {
            let t = net.vertex_tensor(VertexId(v));
            assert_eq!(t.arity(), 1);
            assert_eq!(t.get(&[1]).unwrap().to_string(), "x1");
            assert_eq!(t.get(&[2]).unwrap().to_string(), "t");
        }

        let one_loop = g(1, &[(0, 0)]);
        let net = build_network(&one_loop, 2, 2, &VertexWeights::symbolic(2), BilinearForm::identity(2)).unwrap();
        assert_eq!(net.slots(VertexId(0)), &[HalfEdge(0), HalfEdge(1)]);

        let isolated = g(2, &[]);
        let net = build_network(&isolated, 3, 2, &VertexWeights::symbolic(2), BilinearForm::identity(2)).unwrap();
        assert_eq!(net.vertex_tensor(VertexId(1)).as_scalar().unwrap().to_string(), "t");
    }

    #[test]
    fn network_errors() {
        let k2 = g(2, &[(0, 1)]);
        let w = VertexWeights::symbolic(3);
        assert_eq!(build_network(&k2, 1, 1, &w, BilinearForm::identity(1)).unwrap_err(), Error::DimensionTooSmall(1));
        assert_eq!(build_network(&k2, 0, 3, &w, BilinearForm::identity(3)).unwrap_err(), Error::InvalidDegree);
        assert_eq!(
            build_network(&k2, 1, 4, &w, BilinearForm::identity(4)).unwrap_err(),
            Error::VariableCountMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn small_symbolic_values() {
        let e = Engine::default();
        assert_eq!(e.symbolic(&g(2, &[(0, 1)]), 1, 2).unwrap().to_string(), "x1^2 + t^2");
        assert_eq!(e.symbolic(&g(1, &[(0, 0)]), 2, 2).unwrap().to_string(), "x1 + t");
        assert_eq!(e.symbolic(&g(2, &[(0, 1), (0, 1)]), 2, 2).unwrap().to_string(), "x1^2 + t^2");
        assert_eq!(e.symbolic(&MultiGraph::empty(0), 1, 3).unwrap(), MultiPoly::one(2));
    }

    #[test]
    fn plan_choice_does_not_matter_for_k2() {
        let k2 = g(2, &[(0, 1)]);
        let net = build_network(&k2, 1, 2, &VertexWeights::symbolic(2), BilinearForm::identity(2)).unwrap();
        let plan = plan_from_order(&k2, vec![EdgeId(0)]).unwrap();
        assert_eq!(contract_network(&net, &plan, DEFAULT_MAX_ENTRIES).unwrap().to_string(), "x1^2 + t^2");
        let bad = plan_from_order(&g(2, &[(0, 1), (0, 1)]), vec![EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(contract_network(&net, &bad, DEFAULT_MAX_ENTRIES), Err(Error::NotAPermutation));
    }

    #[test]
    fn generating_functions() {
        let e = Engine::default();
        assert_eq!(e.genfun(&cycle(3), 2).unwrap().counts, counts(&[(&[], 1), (&[3], 1)]));
        // K4: 4 triangles and 3 four-cycles, matching the exhaustive 2^6 subset scan
        assert_eq!(e.genfun(&complete(4), 2).unwrap().counts, counts(&[(&[], 1), (&[3], 4), (&[4], 3)]));
        assert_eq!(e.genfun(&cycle(5), 3).unwrap().counts, counts(&[(&[], 1)]));
        assert_eq!(e.genfun(&MultiGraph::empty(0), 1).unwrap().counts, counts(&[(&[], 1)]));
    }

    #[test]
    fn genfun_polynomial_round_trip() {
        let gf = Engine::default().genfun(&complete(4), 2).unwrap();
        assert_eq!(gf.polynomial(1).to_string(), "3*x1^4 + 4*t*x1^3 + t^4");
        assert_eq!(gf.polynomial(4), Engine::default().symbolic(&complete(4), 2, 5).unwrap());
    }

    #[test]
    fn genfun_r_override() {
        let e = Engine::default();
        let tri = cycle(3);
        assert_eq!(e.genfun_at(&tri, 2, 6).unwrap(), e.genfun(&tri, 2).unwrap());
        assert_eq!(e.genfun_at(&tri, 2, 3), Err(Error::InsufficientVariables { needed: 3, have: 2 }));
    }

    #[test]
    fn k_factor_counts() {
        let e = Engine::default();
        assert_eq!(e.count_k_factors(&complete(4), 1).unwrap(), BigInt::from(3));
        assert_eq!(e.count_k_factors(&cycle(5), 2).unwrap(), BigInt::from(1));
        let k33 = MultiGraph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        assert_eq!(e.count_k_factors(&k33, 1).unwrap(), BigInt::from(6));
        assert_eq!(e.count_k_factors(&cycle(5), 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn connected_counts() {
        let e = Engine::default();
        assert_eq!(e.count_connected_k_factors(&complete(4), 2).unwrap(), BigInt::from(3));
        assert_eq!(e.count_connected_k_factors(&cycle(6), 2).unwrap(), BigInt::from(1));
        assert_eq!(e.count_connected_k_factors(&MultiGraph::empty(0), 2), Err(Error::EmptyGraph));

        assert_eq!(e.check_roots_of_unity(&cycle(4), 2).unwrap().count, BigInt::from(1));
        assert_eq!(e.check_roots_of_unity(&complete(4), 2).unwrap().count, BigInt::from(3));
        let two_triangles = cycle(3).disjoint_union(&cycle(3));
        assert_eq!(e.check_roots_of_unity(&two_triangles, 2).unwrap().count, BigInt::from(0));
    }

    #[test]
    fn cap_reports_the_step() {
        let e = Engine::default().with_max_entries(3);
        match e.count_k_factors(&complete(4), 1) {
            Err(Error::TensorTooLarge { step: Some(_), cap: 3, .. }) => {}
            other => panic!("expected a step-tagged cap error, got {other:?}"),
        }
    }
}
