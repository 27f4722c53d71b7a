use serde::{Deserialize, Serialize};

use regcensus_core::{GeneratingFunction, MultiGraph};

use super::FormatError;

/// `{"n": <int>, "edges": [[u, v], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn graph_from_json(text: &str) -> Result<MultiGraph, FormatError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    Ok(MultiGraph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))?)
}

pub fn graph_to_json(g: &MultiGraph) -> GraphJson {
    GraphJson { n: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u.0, v.0]).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenfunTerm {
    pub lambda: Vec<u32>,
    pub t_exp: usize,
    /// Decimal string; counts are unbounded.
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenfunJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<GenfunTerm>,
}

/// Terms come out sorted by weight, then lexicographically.
pub fn genfun_json(gf: &GeneratingFunction) -> GenfunJson {
    let terms = gf
        .counts
        .iter()
        .map(|(lambda, c)| GenfunTerm {
            lambda: lambda.parts().to_vec(),
            t_exp: gf.n - lambda.weight() as usize,
            count: c.to_string(),
        })
        .collect();
    GenfunJson { n: gf.n, k: gf.k, terms }
}
