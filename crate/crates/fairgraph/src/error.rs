use thiserror::Error;

/// Crate-wide error type.
///
/// Input errors describe malformed data handed to a constructor or solver;
/// precondition errors describe structurally valid data that violates a
/// documented requirement of the operation; capacity errors describe work
/// that was refused because it would exceed a configured limit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("agent index {agent} is out of range ({n_agents} agents)")]
    AgentOutOfRange { agent: usize, n_agents: usize },

    #[error("item index {item} is out of range ({n_items} items)")]
    ItemOutOfRange { item: usize, n_items: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid allocation: {0}")]
    InvalidAllocation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("utilities are not binary: item {item} has values ({value_a}, {value_b})")]
    NonBinary {
        item: usize,
        value_a: u64,
        value_b: u64,
    },

    #[error("instance has {distinct} distinct utility values, exceeding the cap of {cap}")]
    TooManyValues { distinct: usize, cap: usize },

    #[error("search space of {states} states exceeds the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
