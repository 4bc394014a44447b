//! Conditional-independence models over a small finite set of variables.
//!
//! An [`IndependencyModel`] is a set of triples `(A, C, B)` of pairwise
//! disjoint variable sets. Models can be induced by undirected graphs
//! (vertex separation) or DAGs (d-separation), restricted to a subset of
//! their variables, tested for graphical representability, and queried with
//! formulas of a small independence logic (see [`logic`]).

pub mod dag;
pub mod error;
pub mod logic;
pub mod model;
pub mod repro;
pub mod represent;
pub mod ugraph;
pub mod universe;

pub use dag::{enumerate_dags, Dag};
pub use error::{Error, Result};
pub use model::{enumerate_disjoint_triples, IndependencyModel, Triple};
pub use represent::{
    check_semigraphoid, dependent_always, is_causal, is_graph_isomorph, Axiom, RepresentabilityResult, Violation,
    Witness,
};
pub use ugraph::{enumerate_undirected_graphs, UndirectedGraph};
pub use universe::{Universe, VarSet, MAX_VARS};
