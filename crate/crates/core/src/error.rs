use thiserror::Error;

use crate::graph::EdgeId;

/// Errors raised by the counting core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph with {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("polynomials over {left} and {right} x-variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("degree parameter must be at least 1")]
    InvalidDegree,

    #[error("tensor dimension r = {0} is too small (need r >= 2)")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index position {pos} out of range for arity {arity}")]
    PositionOutOfRange { pos: usize, arity: usize },

    #[error("self-trace positions must differ (both are {0})")]
    SamePosition(usize),

    #[error("bilinear form is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("projected tensor size {projected} exceeds the cap of {cap} entries{}", step_suffix(*.step))]
    TensorTooLarge {
        projected: u64,
        cap: u64,
        /// Plan step (0-based) and edge being contracted, when known.
        step: Option<(usize, EdgeId)>,
    },

    #[error("order is not a permutation of the graph's edge ids")]
    NotAPermutation,

    #[error("edge {0} contracted twice")]
    EdgeAlreadyContracted(EdgeId),

    #[error("half-edge slot bookkeeping broken: {0}")]
    InternalSlotError(&'static str),

    #[error("polynomial is not in the span of the power-sum basis")]
    NotInSpan,

    #[error("basis coefficient is not an integer")]
    NonIntegerCoefficient,

    #[error("need at least {needed} x-variables, have {have}")]
    InsufficientVariables { needed: usize, have: usize },

    #[error("value {value} is {residual:e} away from the nearest integer")]
    ToleranceExceeded { value: f64, residual: f64 },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {edges} edges, the oracle cap is {cap}")]
    TooManyEdges { edges: usize, cap: usize },
}

fn step_suffix(step: Option<(usize, EdgeId)>) -> alloc::string::String {
    match step {
        Some((i, e)) => alloc::format!(" at step {i} (edge {e})"),
        None => alloc::string::String::new(),
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
