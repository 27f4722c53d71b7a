//! Counting k-regular subgraphs of multigraphs by contracting a network of
//! symmetric tensors.
//!
//! Each vertex of degree `d` carries the tensor `A_{d,k}` over `{1..r}`:
//! color `r` marks an unused half-edge, and an x-color `i < r` on exactly `k`
//! half-edges marks membership in a k-regular subgraph. Contracting along the
//! edges with the identity form forces both halves of an edge to agree, so
//! the network value is
//!
//! ```text
//! F(G) = Σ_λ N_{k,λ}(G) · t^{n-|λ|} · p_λ(x1, ..., x_{r-1})
//! ```
//!
//! where `N_{k,λ}(G)` counts k-regular subgraphs whose component sizes form
//! the partition `λ` and `p_λ` is a product of power sums. With `r = n + 1`
//! the counts are recovered exactly; `r = 2, x1 = 1, t = 0` counts k-factors.
//!
//! [`enumerator`] recomputes the same counts by brute force for testing.
#![no_std]

extern crate alloc;

pub mod engine;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod planner;
pub mod ring;
pub mod tensor;

pub use engine::{Engine, GeneratingFunction};
pub use error::{Error, Result};
pub use graph::{EdgeId, MultiGraph, VertexId};
pub use planner::ContractionPlan;
pub use ring::{MultiPoly, Partition};
