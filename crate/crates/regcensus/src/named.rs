//! Built-in graph families, selectable by name on the command line.

use regcensus_core::MultiGraph;

pub fn complete(n: usize) -> MultiGraph {
    MultiGraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
}

/// `c1` is a single loop and `c2` a double edge.
pub fn cycle(n: usize) -> MultiGraph {
    MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> MultiGraph {
    MultiGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    MultiGraph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid")
}

/// `rows x cols` grid; vertex `(i, j)` is `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> MultiGraph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    MultiGraph::new(rows * cols, edges).expect("valid")
}

/// Two rails of length `n` joined by `n` rungs.
pub fn ladder(n: usize) -> MultiGraph {
    grid(2, n)
}

pub fn petersen() -> MultiGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    MultiGraph::new(10, outer.chain(spokes).chain(inner)).expect("valid")
}

/// Resolves `k<n>`, `c<n>`, `p<n>`, `ladder<n>`, `kb<m>,<n>`, `grid<m>x<n>`, `petersen`.
pub fn by_name(name: &str) -> Option<MultiGraph> {
    let name = name.trim().to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().ok();
    if name == "petersen" {
        return Some(petersen());
    }
    if let Some(rest) = name.strip_prefix("ladder") {
        return num(rest).map(ladder);
    }
    if let Some(rest) = name.strip_prefix("grid") {
        let (a, b) = rest.split_once('x')?;
        return Some(grid(num(a)?, num(b)?));
    }
    if let Some(rest) = name.strip_prefix("kb") {
        let (a, b) = rest.split_once(',')?;
        return Some(complete_bipartite(num(a)?, num(b)?));
    }
    if let Some(rest) = name.strip_prefix('k') {
        return num(rest).map(complete);
    }
    if let Some(rest) = name.strip_prefix('c') {
        return num(rest).filter(|&n| n >= 1).map(cycle);
    }
    if let Some(rest) = name.strip_prefix('p') {
        return num(rest).map(path);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let shape = |g: MultiGraph| (g.vertex_count(), g.edge_count());
        assert_eq!(shape(by_name("k4").unwrap()), (4, 6));
        assert_eq!(shape(by_name("K6").unwrap()), (6, 15));
        assert_eq!(shape(by_name("petersen").unwrap()), (10, 15));
        assert_eq!(shape(by_name("c6").unwrap()), (6, 6));
        assert_eq!(shape(by_name("p3").unwrap()), (3, 2));
        assert_eq!(shape(by_name("ladder4").unwrap()), (8, 10));
        assert_eq!(shape(by_name("kb3,3").unwrap()), (6, 9));
        assert_eq!(shape(by_name("grid3x100").unwrap()), (300, 497));
        assert!(by_name("petersen").unwrap().degrees().iter().all(|&d| d == 3));
        assert!(by_name("c0").is_none());
        assert!(by_name("q7").is_none());
        assert!(by_name("kb3").is_none());
    }
}
