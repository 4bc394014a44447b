use std::fmt;
use std::str::FromStr;

use crate::dag::enumerate_dags;
use crate::error::{Error, Result};
use crate::model::Triple;
use crate::ugraph::enumerate_undirected_graphs;
use crate::universe::Universe;

/// Largest universe for entailment over causal models.
pub const MAX_CAUSAL_ENTAIL_VARS: usize = 4;
/// Largest universe for entailment over graph-isomorphs.
pub const MAX_GRAPH_ENTAIL_VARS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// d-separation models of DAGs.
    Causal,
    /// Separation models of undirected graphs.
    GraphIsomorph,
    /// Every independency model on the universe.
    AllModels,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "causal" => Ok(Family::Causal),
            "graph-isomorph" => Ok(Family::GraphIsomorph),
            "all" | "all-models" => Ok(Family::AllModels),
            other => Err(Error::Parse { line: 0, message: format!("unknown model family {other:?}") }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Causal => "causal",
            Family::GraphIsomorph => "graph-isomorph",
            Family::AllModels => "all-models",
        })
    }
}

/// Every model of `family` on `universe` that contains all of `given` also
/// contains `query`.
///
/// For [`Family::AllModels`] the model consisting of exactly `given` is a
/// member, so entailment reduces to membership of `query` in `given`.
pub fn entails(family: Family, given: &[Triple], query: &Triple, universe: &Universe) -> Result<bool> {
    for t in given.iter().chain([query]) {
        universe.check_set(t.support())?;
        if !t.is_disjoint() {
            return Err(Error::NotDisjoint);
        }
    }
    let n = universe.len();
    match family {
        Family::AllModels => Ok(given.contains(query)),
        Family::Causal => {
            if n > MAX_CAUSAL_ENTAIL_VARS {
                return Err(Error::GateExceeded { what: "causal entailment", got: n, max: MAX_CAUSAL_ENTAIL_VARS });
            }
            let holds = |d: &crate::dag::Dag, t: &Triple| d.d_separates_unchecked(t.a, t.c, t.b);
            Ok(enumerate_dags(universe)?.all(|d| !given.iter().all(|t| holds(&d, t)) || holds(&d, query)))
        }
        Family::GraphIsomorph => {
            if n > MAX_GRAPH_ENTAIL_VARS {
                return Err(Error::GateExceeded { what: "graph-isomorph entailment", got: n, max: MAX_GRAPH_ENTAIL_VARS });
            }
            let holds = |g: &crate::ugraph::UndirectedGraph, t: &Triple| g.separates_unchecked(t.a, t.c, t.b);
            Ok(enumerate_undirected_graphs(universe)?.all(|g| !given.iter().all(|t| holds(&g, t)) || holds(&g, query)))
        }
    }
}
