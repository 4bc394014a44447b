use std::fmt;

use super::ast::{Atom, Formula};

/// `negatives[0] & ... & negatives[k-1] -> positives[0] | ... | positives[l-1]`,
/// equivalently the disjunction of the negated antecedents and the consequents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub negatives: Vec<Atom>,
    pub positives: Vec<Atom>,
}

impl Clause {
    /// `None` when both lists are empty.
    pub fn new(negatives: Vec<Atom>, positives: Vec<Atom>) -> Option<Clause> {
        if negatives.is_empty() && positives.is_empty() {
            None
        } else {
            Some(Clause { negatives, positives })
        }
    }

    /// At most one consequent.
    pub fn is_horn(&self) -> bool {
        self.positives.len() <= 1
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.negatives.iter().chain(&self.positives)
    }

    pub fn to_formula(&self) -> Formula {
        formula_of_clause(self)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", formula_of_clause(self))
    }
}

fn chain(atoms: &[Atom], join: fn(Formula, Formula) -> Formula) -> Option<Formula> {
    atoms.iter().cloned().map(Formula::Atom).reduce(join)
}

/// Implication form when there are antecedents and consequents, a bare
/// disjunction when there are no antecedents, and a negated conjunction when
/// there are no consequents.
pub fn formula_of_clause(c: &Clause) -> Formula {
    let premise = chain(&c.negatives, Formula::and);
    let conclusion = chain(&c.positives, Formula::or);
    match (premise, conclusion) {
        (Some(p), Some(q)) => Formula::implies(p, q),
        (None, Some(q)) => q,
        (Some(p), None) => Formula::not(p),
        (None, None) => unreachable!("a clause has at least one literal"),
    }
}

/// Reads a disjunction whose disjuncts are atoms, negated atoms or negated
/// conjunctions of atoms. Anything else is not a clause.
pub fn clause_of_formula(f: &Formula) -> Option<Clause> {
    let mut negatives = Vec::new();
    let mut positives = Vec::new();
    collect_disjuncts(f, &mut negatives, &mut positives)?;
    Clause::new(negatives, positives)
}

fn collect_disjuncts(f: &Formula, neg: &mut Vec<Atom>, pos: &mut Vec<Atom>) -> Option<()> {
    match f {
        Formula::Or(l, r) => {
            collect_disjuncts(l, neg, pos)?;
            collect_disjuncts(r, neg, pos)
        }
        Formula::Atom(a) => {
            pos.push(a.clone());
            Some(())
        }
        Formula::Not(inner) => collect_conjuncts(inner, neg),
        Formula::And(..) => None,
    }
}

fn collect_conjuncts(f: &Formula, out: &mut Vec<Atom>) -> Option<()> {
    match f {
        Formula::And(l, r) => {
            collect_conjuncts(l, out)?;
            collect_conjuncts(r, out)
        }
        Formula::Atom(a) => {
            out.push(a.clone());
            Some(())
        }
        _ => None,
    }
}
