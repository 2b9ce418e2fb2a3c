use thiserror::Error;

use crate::description::RuleId;

/// Exhaustive valuation was refused because the atom universe is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("semantic check needs {atoms} atoms but the limit is {limit}")]
pub struct AtomLimitExceeded {
    pub atoms: usize,
    pub limit: usize,
}

/// Failures while turning facts, rules and priority pairs into a plausible description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptionError {
    #[error("priority relation is cyclic: {}", render_cycle(.cycle))]
    CyclicPriority { cycle: Vec<RuleId> },
    #[error("rule {superior} is declared superior to rse; rse may never be inferior")]
    PriorityOverRse { superior: RuleId },
    #[error("unknown rule id {id}")]
    UnknownRuleId { id: RuleId },
    #[error("rule id {id} is defined more than once")]
    DuplicateRuleId { id: RuleId },
    #[error("rule id {id} is reserved for derived strict rules")]
    ReservedRuleId { id: RuleId },
    #[error("strict rules are derived from facts and cannot be supplied directly (rule {id})")]
    StrictRuleSupplied { id: RuleId },
    #[error("clause {clause} is not contingent")]
    NonContingentClause { clause: String },
    #[error(transparent)]
    AtomLimit(#[from] AtomLimitExceeded),
}

fn render_cycle(cycle: &[RuleId]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|r| r.to_string()).collect();
    if let Some(first) = cycle.first() {
        parts.push(first.to_string());
    }
    parts.join(" > ")
}

/// Failures of the proof engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("invalid history: {0}")]
    InvalidHistory(String),
    #[error(transparent)]
    AtomLimit(#[from] AtomLimitExceeded),
    #[error("evaluation tree exceeds {max_nodes} nodes")]
    TreeTooLarge { max_nodes: usize },
}
