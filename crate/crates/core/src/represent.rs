//! Deciding whether a model is the separation model of some undirected graph
//! or the d-separation model of some DAG, plus semi-graphoid checking.

use std::fmt;

use serde::Serialize;

use crate::dag::{enumerate_dags, Dag};
use crate::error::{Error, Result};
use crate::model::{enumerate_disjoint_triples, IndependencyModel, Triple};
use crate::ugraph::UndirectedGraph;
use crate::universe::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Graph(UndirectedGraph),
    Dag(Dag),
}

impl Witness {
    pub fn to_text(&self) -> String {
        match self {
            Witness::Graph(g) => g.to_text(),
            Witness::Dag(d) => d.to_text(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentabilityResult {
    pub representable: bool,
    pub witness: Option<Witness>,
    /// A triple on which the candidate graph and the model disagree. Only the
    /// graph test builds a single candidate, so only it reports one.
    pub first_discrepancy: Option<Triple>,
    /// Number of candidate structures compared against the model.
    pub candidates_scanned: usize,
}

/// No triple `({x}, C, {y})` or `({y}, C, {x})` is in `model`, for any `C`.
pub fn dependent_always(model: &IndependencyModel, x: usize, y: usize) -> bool {
    let (sx, sy) = (VarSet::singleton(x), VarSet::singleton(y));
    !model.triples().any(|t| (t.a == sx && t.b == sy) || (t.a == sy && t.b == sx))
}

fn first_mismatch<F: Fn(&Triple) -> bool>(model: &IndependencyModel, holds: F) -> Option<Triple> {
    enumerate_disjoint_triples(model.universe()).find(|t| holds(t) != model.contains(t))
}

/// Joins every pair that no triple separates and compares the separation
/// model of that graph with `model`. An undirected graph's separation model
/// leaves two nodes always dependent exactly when they are adjacent, so this
/// candidate is the only one that can succeed.
pub fn is_graph_isomorph(model: &IndependencyModel) -> RepresentabilityResult {
    let n = model.universe().len();
    let edges = crate::ugraph::node_pairs(n).into_iter().filter(|&(x, y)| dependent_always(model, x, y));
    let g = UndirectedGraph::from_edges(model.universe().clone(), edges).expect("candidate edges are distinct pairs");
    match first_mismatch(model, |t| g.separates_unchecked(t.a, t.c, t.b)) {
        None => RepresentabilityResult {
            representable: true,
            witness: Some(Witness::Graph(g)),
            first_discrepancy: None,
            candidates_scanned: 1,
        },
        Some(t) => RepresentabilityResult {
            representable: false,
            witness: None,
            first_discrepancy: Some(t),
            candidates_scanned: 1,
        },
    }
}

/// Scans every DAG on the model's universe in enumeration order and returns
/// the first whose d-separation model equals `model`. The witness is unique
/// only up to Markov equivalence.
pub fn is_causal(model: &IndependencyModel) -> Result<RepresentabilityResult> {
    let mut scanned = 0;
    for d in enumerate_dags(model.universe())? {
        scanned += 1;
        if first_mismatch(model, |t| d.d_separates_unchecked(t.a, t.c, t.b)).is_none() {
            return Ok(RepresentabilityResult {
                representable: true,
                witness: Some(Witness::Dag(d)),
                first_discrepancy: None,
                candidates_scanned: scanned,
            });
        }
    }
    Ok(RepresentabilityResult { representable: false, witness: None, first_discrepancy: None, candidates_scanned: scanned })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Symmetry,
    Decomposition,
    WeakUnion,
    Contraction,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Symmetry, Axiom::Decomposition, Axiom::WeakUnion, Axiom::Contraction];

    /// The axiom written in the formula syntax of [`crate::logic`].
    pub fn formula_text(self) -> &'static str {
        match self {
            Axiom::Symmetry => "I(X, Z, Y) -> I(Y, Z, X)",
            Axiom::Decomposition => "I(X, Z, Y + W) -> I(X, Z, Y)",
            Axiom::WeakUnion => "I(X, Z, Y + W) -> I(X, Z + W, Y)",
            Axiom::Contraction => "I(X, Z + Y, W) & I(X, Z, Y) -> I(X, Z, Y + W)",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Symmetry => "symmetry",
            Axiom::Decomposition => "decomposition",
            Axiom::WeakUnion => "weak union",
            Axiom::Contraction => "contraction",
        };
        f.write_str(name)
    }
}

/// One instance of an axiom whose premises are in the model but whose
/// conclusion is not.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub axiom: Axiom,
    pub premises: Vec<Triple>,
    pub conclusion: Triple,
}

/// Checks the semi-graphoid axioms over every set instantiation:
///
/// - symmetry: `I(X,Z,Y) => I(Y,Z,X)`
/// - decomposition: `I(X,Z,Y∪W) => I(X,Z,Y)`
/// - weak union: `I(X,Z,Y∪W) => I(X,Z∪W,Y)`
/// - contraction: `I(X,Z∪Y,W) ∧ I(X,Z,Y) => I(X,Z,Y∪W)`
///
/// with X, Y, Z, W pairwise disjoint. Instances are generated from the
/// triples of the model, since an instance can only fail when its premises
/// hold.
pub fn check_semigraphoid(model: &IndependencyModel) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut report = |axiom, premises: Vec<Triple>, conclusion: Triple| {
        if !model.contains(&conclusion) {
            out.push(Violation { axiom, premises, conclusion });
        }
    };
    for &t in model.triples() {
        report(Axiom::Symmetry, vec![t], t.mirrored());
    }
    for &t in model.triples() {
        for y in t.b.subsets() {
            report(Axiom::Decomposition, vec![t], Triple { a: t.a, c: t.c, b: y });
        }
    }
    for &t in model.triples() {
        for y in t.b.subsets() {
            let w = t.b.difference(y);
            report(Axiom::WeakUnion, vec![t], Triple { a: t.a, c: t.c.union(w), b: y });
        }
    }
    for &first in model.triples() {
        for y in first.c.subsets() {
            let z = first.c.difference(y);
            let second = Triple { a: first.a, c: z, b: y };
            if model.contains(&second) {
                report(Axiom::Contraction, vec![first, second], Triple { a: first.a, c: z, b: y.union(first.b) });
            }
        }
    }
    out
}

pub fn is_semigraphoid(model: &IndependencyModel) -> bool {
    check_semigraphoid(model).is_empty()
}

/// `x` and `y` are distinct and out of range indices are rejected.
pub fn check_pair(model: &IndependencyModel, x: usize, y: usize) -> Result<()> {
    let size = model.universe().len();
    for i in [x, y] {
        if i >= size {
            return Err(Error::IndexOutOfRange { index: i, size });
        }
    }
    if x == y {
        return Err(Error::NotDisjoint);
    }
    Ok(())
}
