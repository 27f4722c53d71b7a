//! Finite multigraphs with loops and parallel edges.
//!
//! Every edge owns two half-edges. Half-edge `2e` sits at the first endpoint
//! of edge `e` and half-edge `2e + 1` at the second, so a loop puts both of
//! its half-edges on the same vertex and contributes 2 to that vertex's degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl HalfEdge {
    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }

    /// The other half of the same edge.
    pub fn twin(self) -> HalfEdge {
        HalfEdge(self.0 ^ 1)
    }
}

impl EdgeId {
    pub fn half_edges(self) -> (HalfEdge, HalfEdge) {
        (HalfEdge(2 * self.0), HalfEdge(2 * self.0 + 1))
    }
}

/// A labeled multigraph. Equality is structural on the labels, never up to
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // half-edges attached to each vertex, in edge order
    incidence: Vec<Vec<HalfEdge>>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        let mut stored = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, n });
                }
            }
            let (h0, h1) = EdgeId(i).half_edges();
            incidence[u].push(h0);
            incidence[v].push(h1);
            stored.push((VertexId(u), VertexId(v)));
        }
        Ok(MultiGraph { n, edges: stored, incidence })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new(), incidence: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e.0];
        u == v
    }

    /// Vertex a half-edge is attached to.
    pub fn attachment(&self, h: HalfEdge) -> VertexId {
        let (u, v) = self.edges[h.0 / 2];
        if h.0.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn half_edges_at(&self, v: VertexId) -> Result<&[HalfEdge]> {
        self.incidence.get(v.0).map(Vec::as_slice).ok_or(Error::IndexOutOfRange { index: v.0, n: self.n })
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.half_edges_at(v).map(<[HalfEdge]>::len)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u.0, v.0);
        }
        uf.groups().into_iter().map(|g| g.into_iter().map(VertexId).collect()).collect()
    }

    /// The line graph: one vertex per edge, with one connecting edge for every
    /// pair of distinct edges meeting at a vertex. Two parallel edges meet at
    /// both of their endpoints and are therefore joined twice.
    pub fn line_graph(&self) -> MultiGraph {
        let mut out = Vec::new();
        for halves in &self.incidence {
            let mut at_vertex: Vec<usize> = halves.iter().map(|h| h.0 / 2).collect();
            at_vertex.dedup(); // a loop's two halves are adjacent in the list
            for (i, &e) in at_vertex.iter().enumerate() {
                for &f in &at_vertex[i + 1..] {
                    out.push((e, f));
                }
            }
        }
        MultiGraph::new(self.edges.len(), out).expect("edge ids are in range")
    }

    /// A copy with edge `e` removed; later edge ids shift down by one.
    pub fn without_edge(&self, e: EdgeId) -> MultiGraph {
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != e.0).map(|(_, &(u, v))| (u.0, v.0));
        MultiGraph::new(self.n, edges).expect("subgraph of a valid graph")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (u.0, v.0))
            .chain(other.edges.iter().map(|&(u, v)| (u.0 + shift, v.0 + shift)));
        MultiGraph::new(self.n + other.n, edges).expect("shifted indices stay in range")
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<MultiGraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { left: perm.len(), right: self.n });
        }
        MultiGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u.0], perm[v.0])))
    }
}

/// Plain union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the surviving root.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
        ra
    }

    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x);
        }
        out
    }
}
