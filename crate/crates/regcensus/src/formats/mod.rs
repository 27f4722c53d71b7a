//! Text and JSON file formats.

mod edgelist;
mod json;
mod plan;

use thiserror::Error;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use json::{genfun_json, graph_from_json, graph_to_json, GenfunJson, GenfunTerm, GraphJson};
pub use plan::{parse_plan, write_plan};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: vertex {index} out of range for {n} declared vertices")]
    IndexOutOfRange { line: usize, index: usize, n: usize },

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed plan: {0}")]
    MalformedPlan(String),

    #[error(transparent)]
    Graph(#[from] regcensus_core::Error),
}
