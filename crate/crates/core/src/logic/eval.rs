//! Valuations and satisfaction of formulas in an independency model.
//!
//! `model_satisfies` and `check_clause` quantify over valuations of the
//! variables that occur in the formula only; other variables cannot change
//! the outcome. When no valuation is valid the model satisfies the formula
//! vacuously.

use std::collections::BTreeMap;

use super::ast::{Atom, Formula, Term};
use super::clause::Clause;
use crate::error::{Error, Result};
use crate::model::{IndependencyModel, Triple};
use crate::universe::{Universe, VarSet};

/// Default cap on `valuations x atoms` for exhaustive model checking.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// Assignment of variable sets to term variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, VarSet>);

impl Valuation {
    pub fn new() -> Self {
        Valuation::default()
    }

    pub fn with(mut self, name: impl Into<String>, set: VarSet) -> Self {
        self.0.insert(name.into(), set);
        self
    }

    pub fn set(&mut self, name: impl Into<String>, set: VarSet) {
        self.0.insert(name.into(), set);
    }

    pub fn get(&self, name: &str) -> Option<VarSet> {
        self.0.get(name).copied()
    }
}

pub fn eval_term(t: &Term, v: &Valuation, universe: &Universe) -> Result<VarSet> {
    Ok(match t {
        Term::Var(name) => v.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?,
        Term::Empty => VarSet::EMPTY,
        Term::Complement(x) => universe.complement(eval_term(x, v, universe)?),
        Term::Union(l, r) => eval_term(l, v, universe)?.union(eval_term(r, v, universe)?),
        Term::Intersection(l, r) => eval_term(l, v, universe)?.intersection(eval_term(r, v, universe)?),
    })
}

fn eval_atom(a: &Atom, v: &Valuation, universe: &Universe) -> Result<Triple> {
    Ok(Triple { a: eval_term(&a.0, v, universe)?, c: eval_term(&a.1, v, universe)?, b: eval_term(&a.2, v, universe)? })
}

/// Every atom of `f` evaluates to three pairwise-disjoint sets.
pub fn is_valid_valuation(v: &Valuation, f: &Formula, model: &IndependencyModel) -> Result<bool> {
    for a in f.atoms() {
        if !eval_atom(a, v, model.universe())?.is_disjoint() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Truth of `f` under a valid valuation `v`.
pub fn satisfies(v: &Valuation, f: &Formula, model: &IndependencyModel) -> Result<bool> {
    if !is_valid_valuation(v, f, model)? {
        return Err(Error::InvalidValuation);
    }
    truth(f, v, model)
}

fn truth(f: &Formula, v: &Valuation, model: &IndependencyModel) -> Result<bool> {
    Ok(match f {
        Formula::Atom(a) => model.contains(&eval_atom(a, v, model.universe())?),
        Formula::Not(x) => !truth(x, v, model)?,
        Formula::And(l, r) => truth(l, v, model)? && truth(r, v, model)?,
        Formula::Or(l, r) => truth(l, v, model)? || truth(r, v, model)?,
    })
}

/// Terms with variables replaced by slot numbers.
enum Compiled {
    Slot(usize),
    Empty,
    Complement(Box<Compiled>),
    Union(Box<Compiled>, Box<Compiled>),
    Intersection(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    fn new(t: &Term, vars: &[&str]) -> Compiled {
        match t {
            Term::Var(name) => Compiled::Slot(vars.iter().position(|v| v == name).expect("variable was collected")),
            Term::Empty => Compiled::Empty,
            Term::Complement(x) => Compiled::Complement(Box::new(Compiled::new(x, vars))),
            Term::Union(l, r) => Compiled::Union(Box::new(Compiled::new(l, vars)), Box::new(Compiled::new(r, vars))),
            Term::Intersection(l, r) => {
                Compiled::Intersection(Box::new(Compiled::new(l, vars)), Box::new(Compiled::new(r, vars)))
            }
        }
    }

    fn eval(&self, slots: &[VarSet], full: VarSet) -> VarSet {
        match self {
            Compiled::Slot(i) => slots[*i],
            Compiled::Empty => VarSet::EMPTY,
            Compiled::Complement(x) => full.difference(x.eval(slots, full)),
            Compiled::Union(l, r) => l.eval(slots, full).union(r.eval(slots, full)),
            Compiled::Intersection(l, r) => l.eval(slots, full).intersection(r.eval(slots, full)),
        }
    }
}

struct CompiledAtom([Compiled; 3]);

impl CompiledAtom {
    fn new(a: &Atom, vars: &[&str]) -> Self {
        CompiledAtom([Compiled::new(&a.0, vars), Compiled::new(&a.1, vars), Compiled::new(&a.2, vars)])
    }

    fn eval(&self, slots: &[VarSet], full: VarSet) -> Triple {
        Triple { a: self.0[0].eval(slots, full), c: self.0[1].eval(slots, full), b: self.0[2].eval(slots, full) }
    }
}

/// Visits every assignment of subsets of `universe` to `k` slots until `f`
/// returns false. Returns whether all visits returned true.
fn all_assignments(universe: &Universe, k: usize, mut f: impl FnMut(&[VarSet]) -> bool) -> bool {
    let n = universe.len();
    let count = 1u64 << (n * k);
    let mask = (1u64 << n) - 1;
    let mut slots = vec![VarSet::EMPTY; k];
    for i in 0..count {
        for (j, slot) in slots.iter_mut().enumerate() {
            *slot = VarSet::from_bits(((i >> (n * j)) & mask) as u32);
        }
        if !f(&slots) {
            return false;
        }
    }
    true
}

fn check_budget(universe: &Universe, vars: usize, atoms: usize, budget: u128) -> Result<()> {
    let bits = universe.len() as u32 * vars as u32;
    let needed = if bits >= 127 { u128::MAX } else { (1u128 << bits) * atoms.max(1) as u128 };
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

pub fn model_satisfies(model: &IndependencyModel, f: &Formula) -> Result<bool> {
    model_satisfies_with_budget(model, f, DEFAULT_BUDGET)
}

pub fn model_satisfies_with_budget(model: &IndependencyModel, f: &Formula, budget: u128) -> Result<bool> {
    let vars = f.variables();
    let atoms: Vec<CompiledAtom> = f.atoms().into_iter().map(|a| CompiledAtom::new(a, &vars)).collect();
    check_budget(model.universe(), vars.len(), atoms.len(), budget)?;
    let full = model.universe().full();
    let mut triples = Vec::with_capacity(atoms.len());
    Ok(all_assignments(model.universe(), vars.len(), |slots| {
        triples.clear();
        triples.extend(atoms.iter().map(|a| a.eval(slots, full)));
        if !triples.iter().all(Triple::is_disjoint) {
            return true;
        }
        let mut next = 0;
        truth_of(f, &triples, &mut next, model)
    }))
}

/// Evaluates `f` reading atom values in the order produced by
/// [`Formula::atoms`].
fn truth_of(f: &Formula, triples: &[Triple], next: &mut usize, model: &IndependencyModel) -> bool {
    match f {
        Formula::Atom(_) => {
            let t = &triples[*next];
            *next += 1;
            model.contains(t)
        }
        Formula::Not(x) => !truth_of(x, triples, next, model),
        Formula::And(l, r) => {
            let lv = truth_of(l, triples, next, model);
            let rv = truth_of(r, triples, next, model);
            lv && rv
        }
        Formula::Or(l, r) => {
            let lv = truth_of(l, triples, next, model);
            let rv = truth_of(r, triples, next, model);
            lv || rv
        }
    }
}

pub fn check_clause(model: &IndependencyModel, c: &Clause) -> Result<bool> {
    check_clause_with_budget(model, c, DEFAULT_BUDGET)
}

/// For every valid valuation: all antecedents in the model implies some
/// consequent in the model.
pub fn check_clause_with_budget(model: &IndependencyModel, c: &Clause, budget: u128) -> Result<bool> {
    let f = c.to_formula();
    let vars = f.variables();
    let negatives: Vec<CompiledAtom> = c.negatives.iter().map(|a| CompiledAtom::new(a, &vars)).collect();
    let positives: Vec<CompiledAtom> = c.positives.iter().map(|a| CompiledAtom::new(a, &vars)).collect();
    check_budget(model.universe(), vars.len(), negatives.len() + positives.len(), budget)?;
    let full = model.universe().full();
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    Ok(all_assignments(model.universe(), vars.len(), |slots| {
        neg.clear();
        pos.clear();
        neg.extend(negatives.iter().map(|a| a.eval(slots, full)));
        pos.extend(positives.iter().map(|a| a.eval(slots, full)));
        if !neg.iter().chain(&pos).all(Triple::is_disjoint) {
            return true;
        }
        !neg.iter().all(|t| model.contains(t)) || pos.iter().any(|t| model.contains(t))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dag::Dag;
    use crate::logic::parser::{parse_clause, parse_formula};

    fn s(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    fn abc() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn term_evaluation() {
        let u = abc();
        let v = Valuation::new().with("X1", s(&[0])).with("X2", s(&[0, 1]));
        let eval = |text: &str| {
            let f = parse_formula(&format!("I({text}, empty, empty)")).unwrap();
            eval_term(&f.atoms()[0].0, &v, &u)
        };
        assert_eq!(eval("~empty").unwrap(), u.full());
        assert_eq!(eval("X1 * X2").unwrap(), s(&[0]));
        assert_eq!(eval("~X1").unwrap(), s(&[1, 2]));
        assert_eq!(eval("X1 + X3"), Err(Error::UnboundVariable("X3".into())));
    }

    #[test]
    fn validity_and_satisfaction() {
        let u = abc();
        let m = IndependencyModel::from_triples(u, [Triple::new(s(&[0]), s(&[]), s(&[1])).unwrap()]).unwrap();
        let atom = parse_formula("I(X1, X2, X3)").unwrap();
        let distinct = Valuation::new().with("X1", s(&[0])).with("X2", s(&[1])).with("X3", s(&[2]));
        assert!(is_valid_valuation(&distinct, &atom, &m).unwrap());
        let clash = Valuation::new().with("X1", s(&[0])).with("X2", s(&[0])).with("X3", s(&[2]));
        assert!(!is_valid_valuation(&clash, &atom, &m).unwrap());
        assert_eq!(satisfies(&clash, &atom, &m), Err(Error::InvalidValuation));

        let member = Valuation::new().with("X1", s(&[0])).with("X2", s(&[])).with("X3", s(&[1]));
        assert!(satisfies(&member, &atom, &m).unwrap());
        assert!(!satisfies(&member, &parse_formula("!I(X1, X2, X3)").unwrap(), &m).unwrap());
    }

    #[test]
    fn validity_of_conjunction_implies_validity_of_parts() {
        let u = abc();
        let m = IndependencyModel::empty(u.clone());
        let left = parse_formula("I(X, Y, Z)").unwrap();
        let right = parse_formula("I(Y + Z, empty, ~X)").unwrap();
        let both = Formula::and(left.clone(), right.clone());
        for bits in 0..512u32 {
            let v = Valuation::new()
                .with("X", VarSet::from_bits(bits & 7))
                .with("Y", VarSet::from_bits(bits >> 3 & 7))
                .with("Z", VarSet::from_bits(bits >> 6 & 7));
            if is_valid_valuation(&v, &both, &m).unwrap() {
                assert!(is_valid_valuation(&v, &left, &m).unwrap());
                assert!(is_valid_valuation(&v, &right, &m).unwrap());
            }
        }
    }

    #[test]
    fn symmetry_axiom_instance_on_collider() {
        let d = Dag::from_arcs(Universe::new(["1", "2", "3"]).unwrap(), [(0, 1), (2, 1)]).unwrap();
        let m = d.dsep_model();
        let f = parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)").unwrap();
        let v = Valuation::new().with("X1", s(&[0])).with("X2", s(&[])).with("X3", s(&[2]));
        assert!(satisfies(&v, &f, &m).unwrap());
        assert!(truth(&parse_formula("I(X1, X2, X3)").unwrap(), &v, &m).unwrap());
    }

    #[test]
    fn model_level_checks() {
        let u = Universe::new(["a", "b"]).unwrap();
        let m = IndependencyModel::from_triples(u, [Triple::new(s(&[0]), s(&[]), s(&[1])).unwrap()]).unwrap();
        let symmetry = parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)").unwrap();
        assert!(!model_satisfies(&m, &symmetry).unwrap());

        let tiny = IndependencyModel::empty(Universe::new(["a"]).unwrap());
        // I(X, ~X, X) is valid only for X = {}, and the empty model lacks ({}, {a}, {}).
        assert!(!model_satisfies(&tiny, &parse_formula("I(X, ~X, X)").unwrap()).unwrap());
        // The first two atoms force X = Y = {a}, the third needs X and Y disjoint.
        let no_valid = parse_formula("I(~X, ~X, empty) & I(~Y, ~Y, empty) & I(X, Y, Z)").unwrap();
        assert!(model_satisfies(&tiny, &no_valid).unwrap());
        let never_valid = parse_formula("!I(~empty, ~empty, empty)").unwrap();
        assert!(model_satisfies(&IndependencyModel::full(abc()), &never_valid).unwrap());
    }

    #[test]
    fn clause_checks() {
        let u = abc();
        let full = IndependencyModel::full(u.clone());
        assert!(check_clause(&full, &parse_clause("I(X1, X2, X3)").unwrap()).unwrap());
        let empty = IndependencyModel::empty(u);
        assert!(!check_clause(&empty, &parse_clause("I(X1, X2, X3)").unwrap()).unwrap());
        let contraction = parse_clause("I(X, Z + Y, W) & I(X, Z, Y) -> I(X, Z, Y + W)").unwrap();
        let premises = [Triple::new(s(&[0]), s(&[1]), s(&[2])).unwrap(), Triple::new(s(&[0]), s(&[]), s(&[1])).unwrap()];
        let m = IndependencyModel::from_triples(abc(), premises).unwrap();
        assert!(!check_clause(&m, &contraction).unwrap());
        assert!(!model_satisfies(&m, &contraction.to_formula()).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let m = IndependencyModel::empty(Universe::numbered(8).unwrap());
        let f = parse_formula("I(A, B, C) -> I(D, E, F)").unwrap();
        assert!(matches!(model_satisfies(&m, &f), Err(Error::BudgetExceeded { .. })));
        assert!(model_satisfies_with_budget(&IndependencyModel::empty(abc()), &f, 1 << 19).is_ok());
        assert!(model_satisfies_with_budget(&IndependencyModel::empty(abc()), &f, 1 << 18).is_err());
    }
}
