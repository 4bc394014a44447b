//! A causal model whose sub-model on four of its five variables is not
//! causal, although it still satisfies every formula the full model does.
//!
//! The DAG on `{0,1,2,3,4}` has arcs `1 -> 2 <- 0 -> 3 <- 4`. Marginalizing
//! `0` leaves `1 - 2 - 3 - 4` pairwise dependent under every conditioning set
//! while `I(1,{},3)`, `I(1,4,3)`, `I(2,{},4)` and `I(2,1,4)` hold. A DAG on the
//! four remaining nodes would need both `2 -> 3` and `3 -> 2`, so no DAG
//! represents the sub-model.

use serde::Serialize;

use crate::dag::Dag;
use crate::model::{IndependencyModel, Triple};
use crate::represent::{check_semigraphoid, dependent_always, is_causal, Witness};
use crate::universe::{Universe, VarSet};

pub const COUNTEREXAMPLE_LABELS: [&str; 5] = ["0", "1", "2", "3", "4"];
/// Arcs as `(tail, head)` labels.
pub const COUNTEREXAMPLE_ARCS: [(&str, &str); 4] = [("1", "2"), ("0", "2"), ("0", "3"), ("4", "3")];
/// Variables kept in the sub-model.
pub const COUNTEREXAMPLE_KEEP: [&str; 4] = ["1", "2", "3", "4"];

/// A statement checked against the sub-model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statement {
    /// No conditioning set separates the pair.
    Dependent(&'static str, &'static str),
    /// `I(a, c, b)` with singleton outer sets and the listed conditioning set.
    Independent(&'static str, &'static [&'static str], &'static str),
}

impl Statement {
    pub fn describe(&self) -> String {
        match self {
            Statement::Dependent(x, y) => format!("D({x},{y})"),
            Statement::Independent(a, c, b) => {
                let c = if c.is_empty() { "{}".to_string() } else { c.join(",") };
                format!("I({a},{c},{b})")
            }
        }
    }

    pub fn holds(&self, model: &IndependencyModel) -> bool {
        let u = model.universe();
        match *self {
            Statement::Dependent(x, y) => match (u.index_of(x), u.index_of(y)) {
                (Ok(x), Ok(y)) => dependent_always(model, x, y),
                _ => false,
            },
            Statement::Independent(a, c, b) => {
                let sets = (u.set_of([a]), u.set_of(c.iter().copied()), u.set_of([b]));
                match sets {
                    (Ok(a), Ok(c), Ok(b)) => Triple::new(a, c, b).is_ok_and(|t| model.contains(&t)),
                    _ => false,
                }
            }
        }
    }
}

pub const COUNTEREXAMPLE_STATEMENTS: [Statement; 7] = [
    Statement::Dependent("1", "2"),
    Statement::Dependent("3", "4"),
    Statement::Dependent("2", "3"),
    Statement::Independent("1", &[], "3"),
    Statement::Independent("1", &["4"], "3"),
    Statement::Independent("2", &[], "4"),
    Statement::Independent("2", &["1"], "4"),
];

pub fn build_counterexample_dag() -> Dag {
    let u = Universe::new(COUNTEREXAMPLE_LABELS).expect("labels are distinct");
    let arcs = COUNTEREXAMPLE_ARCS.iter().map(|&(x, y)| (u.index_of(x).unwrap(), u.index_of(y).unwrap()));
    Dag::from_arcs(u.clone(), arcs).expect("counterexample arcs form a DAG")
}

fn keep_set(u: &Universe) -> VarSet {
    u.set_of(COUNTEREXAMPLE_KEEP).expect("kept labels belong to the universe")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatementCheck {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproReport {
    #[serde(rename = "statements")]
    pub statements_checked: Vec<StatementCheck>,
    /// DAGs on the four kept variables compared against the sub-model.
    #[serde(rename = "dags_scanned")]
    pub dag_count_scanned: usize,
    #[serde(rename = "causal_witness")]
    pub causal_witness_found: bool,
    /// Text of the witness DAG, if one was found.
    pub witness: Option<String>,
    pub semigraphoid_ok: bool,
    /// The full five-variable model is causal.
    pub full_model_causal: bool,
}

impl ReproReport {
    pub fn succeeded(&self) -> bool {
        self.statements_checked.iter().all(|s| s.holds)
            && self.dag_count_scanned == 543
            && !self.causal_witness_found
            && self.semigraphoid_ok
            && self.full_model_causal
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.statements_checked {
            out.push_str(&format!("{:<10} {}\n", s.statement, if s.holds { "holds" } else { "FAILS" }));
        }
        out.push_str(&format!("full model causal: {}\n", self.full_model_causal));
        out.push_str(&format!("DAGs scanned on sub-model: {}\n", self.dag_count_scanned));
        out.push_str(&format!("causal witness found: {}\n", self.causal_witness_found));
        out.push_str(&format!("semi-graphoid: {}\n", self.semigraphoid_ok));
        out.push_str(if self.succeeded() {
            "sub-model is not causal: causal models are not closed under sub-models\n"
        } else {
            "reproduction FAILED\n"
        });
        out
    }
}

/// Builds the DAG, restricts its model and checks every claim about it.
pub fn verify_counterexample() -> ReproReport {
    let d = build_counterexample_dag();
    let model = d.dsep_model();
    let sub = model.restrict(keep_set(d.universe())).expect("kept set is nonempty");
    let statements_checked = COUNTEREXAMPLE_STATEMENTS
        .iter()
        .map(|s| StatementCheck { statement: s.describe(), holds: s.holds(&sub) })
        .collect();
    let result = is_causal(&sub).expect("four variables are within the enumeration limit");
    let full_model_causal = is_causal(&model).map(|r| r.representable).unwrap_or(false);
    ReproReport {
        statements_checked,
        dag_count_scanned: result.candidates_scanned,
        causal_witness_found: result.representable,
        witness: result.witness.as_ref().map(Witness::to_text),
        semigraphoid_ok: check_semigraphoid(&sub).is_empty(),
        full_model_causal,
    }
}
