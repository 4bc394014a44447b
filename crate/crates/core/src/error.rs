use thiserror::Error;

use crate::universe::VarSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain between 1 and {max} variables, got {got}")]
    UniverseSize { got: usize, max: usize },
    #[error("invalid variable label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate variable label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown variable label {0:?}")]
    UnknownLabel(String),
    #[error("variable index {index} out of range for a universe of {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("variable set {0:?} is not contained in the universe")]
    OutOfUniverse(VarSet),
    #[error("sets are not pairwise disjoint")]
    NotDisjoint,
    #[error("restriction to the empty set is not allowed")]
    EmptyRestriction,
    #[error("models are defined over different universes")]
    UniverseMismatch,
    #[error("self-loop on variable {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("graph contains a directed cycle")]
    Cyclic,
    #[error("{what} is limited to {max} variables, got {got}")]
    GateExceeded { what: &'static str, got: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unbound term variable {0:?}")]
    UnboundVariable(String),
    #[error("valuation is not valid for the formula")]
    InvalidValuation,
    #[error("evaluation needs {needed} checks, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("formula is not a clause")]
    NotAClause,
}
