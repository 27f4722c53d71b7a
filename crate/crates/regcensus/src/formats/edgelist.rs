//! Edge-list text: `#` comments, blank lines ignored, an optional leading
//! `vertices <n>` header, then one `<u> <v>` pair per line (`u u` is a loop).

use std::fmt::Write as _;

use regcensus_core::MultiGraph;

use super::FormatError;

pub fn parse_edge_list(text: &str) -> Result<MultiGraph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = |reason: String| FormatError::MalformedLine { line: line_no, reason };
        if tokens[0] == "vertices" {
            if seen_content {
                return Err(malformed("the vertices header must come first".into()));
            }
            let [_, n] = tokens[..] else {
                return Err(malformed(format!("expected `vertices <n>`, got `{line}`")));
            };
            declared = Some(n.parse().map_err(|_| malformed(format!("`{n}` is not a vertex count")))?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let [u, v] = tokens[..] else {
            return Err(malformed(format!("expected `<u> <v>`, got `{line}`")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| malformed(format!("`{s}` is not a vertex index")));
        edges.push((line_no, parse(u)?, parse(v)?));
    }
    let n = match declared {
        Some(n) => {
            for &(line, u, v) in &edges {
                if let Some(index) = [u, v].into_iter().find(|&w| w >= n) {
                    return Err(FormatError::IndexOutOfRange { line, index, n });
                }
            }
            n
        }
        None => edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Ok(MultiGraph::new(n, edges.into_iter().map(|(_, u, v)| (u, v)))?)
}

/// Header always present; edges in stored order.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
