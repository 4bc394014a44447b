//! A propositional logic of independence statements.
//!
//! Terms denote variable sets built from term variables with `empty`, `~`
//! (complement), `+` (union) and `*` (intersection). An atom `I(t1, t2, t3)`
//! holds when the triple of evaluated terms is a member of the model, and
//! formulas combine atoms with `!`, `&`, `|` and `->`.

mod ast;
mod clause;
mod entail;
mod eval;
mod parser;

pub use ast::{Atom, Formula, Term};
pub use clause::{clause_of_formula, formula_of_clause, Clause};
pub use entail::{entails, Family, MAX_CAUSAL_ENTAIL_VARS, MAX_GRAPH_ENTAIL_VARS};
pub use eval::{
    check_clause, check_clause_with_budget, eval_term, is_valid_valuation, model_satisfies,
    model_satisfies_with_budget, satisfies, Valuation, DEFAULT_BUDGET,
};
pub use parser::{parse_clause, parse_formula};
