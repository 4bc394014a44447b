//! Independence triples and extensional independency models.
//!
//! A model is stored exactly as given: no symmetry or axiom closure is
//! applied, and triples with empty outer sets are ordinary members.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::universe::{content_lines, parse_vars_header, Universe, VarSet};

/// The statement `I(a, c, b)`: `a` is independent of `b` given `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: VarSet,
    pub c: VarSet,
    pub b: VarSet,
}

impl Triple {
    pub fn new(a: VarSet, c: VarSet, b: VarSet) -> Result<Self> {
        let t = Triple { a, c, b };
        if t.is_disjoint() {
            Ok(t)
        } else {
            Err(Error::NotDisjoint)
        }
    }

    pub fn is_disjoint(&self) -> bool {
        self.a.is_disjoint(self.c) && self.a.is_disjoint(self.b) && self.c.is_disjoint(self.b)
    }

    /// `(b, c, a)`.
    pub fn mirrored(&self) -> Triple {
        Triple { a: self.b, c: self.c, b: self.a }
    }

    pub fn support(&self) -> VarSet {
        self.a.union(self.c).union(self.b)
    }

    /// Either outer set is empty, so the statement holds in every induced model.
    pub fn is_vacuous(&self) -> bool {
        self.a.is_empty() || self.b.is_empty()
    }

    pub fn display(&self, universe: &Universe) -> String {
        format!(
            "{} | {} | {}",
            universe.format_set(self.a),
            universe.format_set(self.c),
            universe.format_set(self.b)
        )
    }

    /// Parses `<set> | <set> | <set>`, with an optional leading `I`.
    pub fn parse(universe: &Universe, text: &str) -> Result<Triple> {
        let text = text.trim();
        let body = text.strip_prefix("I ").unwrap_or(text);
        let parts: Vec<&str> = body.split('|').collect();
        if parts.len() != 3 {
            return Err(Error::Parse { line: 1, message: format!("expected three `|`-separated sets in {text:?}") });
        }
        Triple::new(universe.parse_set(parts[0])?, universe.parse_set(parts[1])?, universe.parse_set(parts[2])?)
    }
}

/// Every ordered triple of pairwise-disjoint subsets of `universe`.
///
/// Triple number `k` assigns variable `i` according to the base-4 digit
/// `(k >> 2i) & 3`: 0 = unused, 1 = `a`, 2 = `c`, 3 = `b`. Variable 0 is the
/// least significant digit, so the sequence has exactly `4^n` entries.
pub fn enumerate_disjoint_triples(universe: &Universe) -> impl Iterator<Item = Triple> {
    let n = universe.len();
    (0..1u64 << (2 * n)).map(move |k| {
        let mut t = Triple { a: VarSet::EMPTY, c: VarSet::EMPTY, b: VarSet::EMPTY };
        for i in 0..n {
            match (k >> (2 * i)) & 3 {
                1 => t.a.insert(i),
                2 => t.c.insert(i),
                3 => t.b.insert(i),
                _ => {}
            }
        }
        t
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependencyModel {
    universe: Universe,
    triples: BTreeSet<Triple>,
}

impl IndependencyModel {
    pub fn empty(universe: Universe) -> Self {
        IndependencyModel { universe, triples: BTreeSet::new() }
    }

    /// Rejects non-disjoint triples, sets outside the universe and duplicates.
    pub fn from_triples<I: IntoIterator<Item = Triple>>(universe: Universe, triples: I) -> Result<Self> {
        let mut model = IndependencyModel::empty(universe);
        for t in triples {
            if !model.insert(t)? {
                return Err(Error::Parse { line: 0, message: format!("duplicate triple {}", t.display(&model.universe)) });
            }
        }
        Ok(model)
    }

    /// Model holding every disjoint triple for which `holds` is true.
    pub fn induced<F: FnMut(&Triple) -> bool>(universe: Universe, mut holds: F) -> Self {
        let triples = enumerate_disjoint_triples(&universe).filter(|t| holds(t)).collect();
        IndependencyModel { universe, triples }
    }

    /// The model containing all `4^n` disjoint triples.
    pub fn full(universe: Universe) -> Self {
        IndependencyModel::induced(universe, |_| true)
    }

    /// Returns `false` if the triple was already present.
    pub fn insert(&mut self, t: Triple) -> Result<bool> {
        self.universe.check_set(t.support())?;
        if !t.is_disjoint() {
            return Err(Error::NotDisjoint);
        }
        Ok(self.triples.insert(t))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains(t)
    }

    pub fn triples(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// The sub-model on `v`: triples whose sets all lie in `v`, re-indexed over
    /// the sub-universe spanned by `v`.
    pub fn restrict(&self, v: VarSet) -> Result<IndependencyModel> {
        let universe = self.universe.sub_universe(v)?;
        let triples = self
            .triples
            .iter()
            .filter(|t| t.support().is_subset(v))
            .map(|t| Triple { a: t.a.compress(v), c: t.c.compress(v), b: t.b.compress(v) })
            .collect();
        Ok(IndependencyModel { universe, triples })
    }

    pub fn equals(&self, other: &IndependencyModel) -> Result<bool> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.triples == other.triples)
    }

    pub fn is_symmetric(&self) -> bool {
        self.triples.iter().all(|t| self.triples.contains(&t.mirrored()))
    }

    /// Canonical text form: header, then one `I` line per triple in storage order.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.universe.names().join(" "));
        for t in &self.triples {
            let _ = writeln!(out, "I {}", t.display(&self.universe));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or(Error::Parse { line: 1, message: "missing `vars:` header".to_string() })?;
        let universe = parse_vars_header(header, line_no)?;
        let mut model = IndependencyModel::empty(universe);
        for (line_no, line) in lines {
            let at = |e: Error| Error::Parse { line: line_no, message: e.to_string() };
            let body = line
                .strip_prefix("I ")
                .ok_or_else(|| Error::Parse { line: line_no, message: "expected `I <set> | <set> | <set>`".to_string() })?;
            let t = Triple::parse(&model.universe, body).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line: line_no, message },
                e => at(e),
            })?;
            if !model.insert(t).map_err(at)? {
                return Err(Error::Parse { line: line_no, message: "duplicate triple".to_string() });
            }
        }
        Ok(model)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    fn t(u: &Universe, a: &str, c: &str, b: &str) -> Triple {
        Triple::new(u.parse_set(a).unwrap(), u.parse_set(c).unwrap(), u.parse_set(b).unwrap()).unwrap()
    }

    #[test]
    fn triple_counts_are_four_to_the_n() {
        for (n, expected) in [(1, 4), (2, 16), (4, 256)] {
            let u = Universe::numbered(n).unwrap();
            let all: BTreeSet<Triple> = enumerate_disjoint_triples(&u).collect();
            assert_eq!(all.len(), expected);
            assert!(all.iter().all(Triple::is_disjoint));
        }
    }

    #[test]
    fn restrict_filters_by_support() {
        let u = abc();
        let m = IndependencyModel::from_triples(u.clone(), [t(&u, "a", "-", "b"), t(&u, "a", "c", "b")]).unwrap();
        let r = m.restrict(u.parse_set("a,b").unwrap()).unwrap();
        let sub = Universe::new(["a", "b"]).unwrap();
        let expected = IndependencyModel::from_triples(sub.clone(), [t(&sub, "a", "-", "b")]).unwrap();
        assert!(r.equals(&expected).unwrap());
        assert!(m.restrict(u.full()).unwrap().equals(&m).unwrap());
        assert_eq!(m.restrict(VarSet::EMPTY), Err(Error::EmptyRestriction));
    }

    #[test]
    fn restrict_recompacts_indices() {
        let u = abc();
        let m = IndependencyModel::from_triples(u.clone(), [t(&u, "b", "-", "c")]).unwrap();
        let r = m.restrict(u.parse_set("b,c").unwrap()).unwrap();
        assert_eq!(r.universe().names(), ["b", "c"]);
        let only = r.triples().next().unwrap();
        assert_eq!(only.a, VarSet::singleton(0));
        assert_eq!(only.b, VarSet::singleton(1));
    }

    #[test]
    fn ordered_triples_and_symmetry() {
        let u = abc();
        let ab = IndependencyModel::from_triples(u.clone(), [t(&u, "a", "-", "b")]).unwrap();
        let ba = IndependencyModel::from_triples(u.clone(), [t(&u, "b", "-", "a")]).unwrap();
        assert!(!ab.equals(&ba).unwrap());
        assert!(ab.equals(&ab).unwrap());
        assert!(!ab.is_symmetric());
        let other = IndependencyModel::empty(Universe::new(["x"]).unwrap());
        assert_eq!(ab.equals(&other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn rejects_bad_triples() {
        let u = abc();
        assert_eq!(Triple::new(VarSet::singleton(0), VarSet::singleton(0), VarSet::EMPTY), Err(Error::NotDisjoint));
        let mut m = IndependencyModel::empty(u);
        let outside = Triple { a: VarSet::singleton(5), c: VarSet::EMPTY, b: VarSet::EMPTY };
        assert!(matches!(m.insert(outside), Err(Error::OutOfUniverse(_))));
    }

    #[test]
    fn text_format() {
        let text = "# comment\nvars: a b c\n\nI a | - | b\nI b | c | a,c\n";
        let err = IndependencyModel::parse(text).unwrap_err();
        assert_eq!(err, Error::Parse { line: 5, message: "sets are not pairwise disjoint".to_string() });

        let text = "vars: a b c\nI b | - | a\nI a | c | b\n";
        let m = IndependencyModel::parse(text).unwrap();
        assert_eq!(m.len(), 2);
        let again = IndependencyModel::parse(&m.to_text()).unwrap();
        assert!(again.equals(&m).unwrap());
        assert_eq!(IndependencyModel::parse(&again.to_text()).unwrap().to_text(), m.to_text());

        let dup = "vars: a b\nI a | - | b\nI a | | b\n";
        assert!(matches!(IndependencyModel::parse(dup), Err(Error::Parse { line: 3, .. })));
        let unknown = "vars: a b\nI a | - | z\n";
        assert!(matches!(IndependencyModel::parse(unknown), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(IndependencyModel::parse("I a | - | b"), Err(Error::Parse { line: 1, .. })));
    }
}
