//! Plan files: a `plan <complexity>` header, then one edge id per line.
//! `#` comments and blank lines are ignored.

use std::fmt::Write as _;

use regcensus_core::planner::plan_from_order;
use regcensus_core::{ContractionPlan, EdgeId, MultiGraph};

use super::FormatError;

pub fn write_plan(plan: &ContractionPlan) -> String {
    let mut out = format!("plan {}\n", plan.complexity());
    for e in plan.order() {
        writeln!(out, "{e}").unwrap();
    }
    out
}

/// Reads a plan for `g`, rejecting it if the declared complexity is wrong.
pub fn parse_plan(text: &str, g: &MultiGraph) -> Result<ContractionPlan, FormatError> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| FormatError::MalformedPlan("empty plan".into()))?;
    let declared: usize = header
        .strip_prefix("plan ")
        .and_then(|c| c.trim().parse().ok())
        .ok_or_else(|| FormatError::MalformedPlan(format!("expected `plan <complexity>`, got `{header}`")))?;
    let order = lines
        .map(|l| l.parse().map(EdgeId).map_err(|_| FormatError::MalformedPlan(format!("`{l}` is not an edge id"))))
        .collect::<Result<Vec<_>, _>>()?;
    let plan = plan_from_order(g, order)?;
    if plan.complexity() != declared {
        return Err(FormatError::MalformedPlan(format!(
            "header says complexity {declared}, the order has complexity {}",
            plan.complexity()
        )));
    }
    Ok(plan)
}
