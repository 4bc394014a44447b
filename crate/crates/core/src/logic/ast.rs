use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Empty,
    Complement(Box<Term>),
    Union(Box<Term>, Box<Term>),
    Intersection(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn complement(t: Term) -> Term {
        Term::Complement(Box::new(t))
    }

    pub fn union(l: Term, r: Term) -> Term {
        Term::Union(Box::new(l), Box::new(r))
    }

    pub fn intersection(l: Term, r: Term) -> Term {
        Term::Intersection(Box::new(l), Box::new(r))
    }

    pub(crate) fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Var(v) => {
                out.insert(v);
            }
            Term::Empty => {}
            Term::Complement(t) => t.collect_vars(out),
            Term::Union(l, r) | Term::Intersection(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Term::Union(..) => 0,
            Term::Intersection(..) => 1,
            _ => 2,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Empty => f.write_str("empty"),
            Term::Complement(t) => {
                f.write_str("~")?;
                t.write_at(f, 2)
            }
            Term::Union(l, r) => {
                l.write_at(f, 0)?;
                f.write_str(" + ")?;
                r.write_at(f, 1)
            }
            Term::Intersection(l, r) => {
                l.write_at(f, 1)?;
                f.write_str(" * ")?;
                r.write_at(f, 2)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// `I(t1, t2, t3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom(pub Term, pub Term, pub Term);

impl Atom {
    pub fn terms(&self) -> [&Term; 3] {
        [&self.0, &self.1, &self.2]
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({}, {}, {})", self.0, self.1, self.2)
    }
}

/// Formulas over atoms. `a -> b` has no node of its own and is stored as
/// `Or(Not(a), b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(t1: Term, t2: Term, t3: Term) -> Formula {
        Formula::Atom(Atom(t1, t2, t3))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::or(Formula::not(l), r)
    }

    /// Distinct term variables, sorted.
    pub fn variables(&self) -> Vec<&str> {
        let mut out = BTreeSet::new();
        self.visit_atoms(&mut |a| a.terms().iter().for_each(|t| t.collect_vars(&mut out)));
        out.into_iter().collect()
    }

    /// Atoms in left-to-right order, repeats included.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.visit_atoms(&mut |a| out.push(a));
        out
    }

    fn visit_atoms<'a>(&'a self, f: &mut impl FnMut(&'a Atom)) {
        match self {
            Formula::Atom(a) => f(a),
            Formula::Not(x) => x.visit_atoms(f),
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.visit_atoms(f);
                r.visit_atoms(f);
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Or(l, _) if matches!(**l, Formula::Not(_)) => 0,
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Not(_) | Formula::Atom(_) => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(x) => {
                f.write_str("!")?;
                x.write_at(f, 3)
            }
            Formula::And(l, r) => {
                l.write_at(f, 2)?;
                f.write_str(" & ")?;
                r.write_at(f, 3)
            }
            Formula::Or(l, r) => match &**l {
                Formula::Not(premise) => {
                    premise.write_at(f, 1)?;
                    f.write_str(" -> ")?;
                    r.write_at(f, 0)
                }
                _ => {
                    l.write_at(f, 1)?;
                    f.write_str(" | ")?;
                    r.write_at(f, 2)
                }
            },
        }
    }
}

/// Prints with minimal parentheses. `Or(Not(a), b)` is always shown as
/// `a -> b`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
