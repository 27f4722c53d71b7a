//! Brute-force oracle: every edge subset is tested directly for k-regularity,
//! with no tensor machinery involved.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, UnionFind, VertexId};
use crate::ring::{power_sum_product, Monomial, MultiPoly, Partition};

/// Largest edge count the oracle will scan (2^24 subsets).
pub const ORACLE_MAX_EDGES: usize = 24;

/// One k-regular subgraph, identified with its edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphRecord {
    pub edges: Vec<EdgeId>,
    /// Endpoints of `edges`; vertices of degree 0 are never included.
    pub vertices: Vec<VertexId>,
    /// Component vertex counts, weakly decreasing.
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCounts {
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<Partition, BigInt>,
}

/// Every endpoint of `edges` has degree exactly `k` in the subset, loops counting twice.
pub fn is_k_regular(g: &MultiGraph, edges: &[EdgeId], k: usize) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u.0] += 1;
        deg[v.0] += 1;
    }
    deg.iter().all(|&d| d == 0 || d == k)
}

pub fn enumerate_k_regular_subgraphs(g: &MultiGraph, k: usize) -> Result<Vec<SubgraphRecord>> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::TooManyEdges { edges: m, cap: ORACLE_MAX_EDGES });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let edges: Vec<EdgeId> = (0..m).filter(|i| mask >> i & 1 == 1).map(EdgeId).collect();
        if is_k_regular(g, &edges, k) {
            out.push(record(g, edges));
        }
    }
    Ok(out)
}

fn record(g: &MultiGraph, edges: Vec<EdgeId>) -> SubgraphRecord {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    let mut uf = UnionFind::new(n);
    for &e in &edges {
        let (u, v) = g.endpoints(e);
        covered[u.0] = true;
        covered[v.0] = true;
        uf.union(u.0, v.0);
    }
    let vertices: Vec<VertexId> = (0..n).filter(|&v| covered[v]).map(VertexId).collect();
    let mut size: BTreeMap<usize, u32> = BTreeMap::new();
    for v in &vertices {
        *size.entry(uf.find(v.0)).or_default() += 1;
    }
    let partition = Partition::new(size.into_values().collect()).expect("component sizes are positive");
    SubgraphRecord { edges, vertices, partition }
}

pub fn oracle_counts(g: &MultiGraph, k: usize) -> Result<OracleCounts> {
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for rec in enumerate_k_regular_subgraphs(g, k)? {
        *counts.entry(rec.partition).or_default() += 1;
    }
    Ok(OracleCounts { n: g.vertex_count(), k, counts })
}

/// `Σ_λ N_λ t^{n-|λ|} p_λ(x1..x_{r-1})` from the enumerated counts.
pub fn oracle_genfun(counts: &OracleCounts, r: usize) -> Result<MultiPoly> {
    if r < 2 {
        return Err(Error::DimensionTooSmall(r));
    }
    let nvars = r - 1;
    let mut f = MultiPoly::zero(nvars);
    for (lambda, c) in &counts.counts {
        let t_exp = counts.n as u32 - lambda.weight();
        let term = power_sum_product(lambda, nvars)
            .try_mul(&MultiPoly::monomial(Monomial::new(vec![0; nvars], t_exp), c.clone()))?;
        f = f.try_add(&term)?;
    }
    Ok(f)
}
