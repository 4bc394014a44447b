//! Directed acyclic graphs and d-separation.
//!
//! [`Dag::d_separates`] runs a reachability search over (node, direction)
//! states. [`Dag::d_separates_moral`] decides the same question through the
//! moralized ancestral graph and is kept as an independent cross-check.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{IndependencyModel, Triple};
use crate::ugraph::UndirectedGraph;
use crate::universe::{content_lines, parse_vars_header, Universe, VarSet};

/// Largest universe accepted by [`enumerate_dags`].
pub const MAX_ENUM_DAG_VARS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    universe: Universe,
    parents: Vec<VarSet>,
    children: Vec<VarSet>,
}

impl Dag {
    pub fn empty(universe: Universe) -> Self {
        let n = universe.len();
        Dag { universe, parents: vec![VarSet::EMPTY; n], children: vec![VarSet::EMPTY; n] }
    }

    /// Builds a DAG from `(tail, head)` arcs, rejecting self-loops, repeated
    /// arcs and directed cycles.
    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(universe: Universe, arcs: I) -> Result<Self> {
        let mut d = Dag::empty(universe);
        for (x, y) in arcs {
            d.push_arc(x, y)?;
        }
        if !d.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(d)
    }

    fn push_arc(&mut self, x: usize, y: usize) -> Result<()> {
        let n = self.universe.len();
        for i in [x, y] {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
        }
        if x == y {
            return Err(Error::SelfLoop(self.universe.name(x).to_string()));
        }
        if self.children[x].contains(y) {
            return Err(Error::DuplicateEdge(self.universe.name(x).to_string(), self.universe.name(y).to_string()));
        }
        self.children[x].insert(y);
        self.parents[y].insert(x);
        Ok(())
    }

    fn is_acyclic(&self) -> bool {
        is_acyclic_parents(&self.parents)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parents(&self, x: usize) -> VarSet {
        self.parents[x]
    }

    pub fn children(&self, x: usize) -> VarSet {
        self.children[x]
    }

    /// Arcs `(tail, head)` sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.children.len()).flat_map(|x| self.children[x].iter().map(move |y| (x, y))).collect()
    }

    fn closure(&self, start: VarSet, step: &[VarSet]) -> VarSet {
        let mut seen = start;
        let mut frontier = start;
        while !frontier.is_empty() {
            let mut next = VarSet::EMPTY;
            for x in frontier.iter() {
                next = next.union(step[x]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Strict descendants of `w`.
    pub fn descendants(&self, w: usize) -> VarSet {
        let start = self.children[w];
        self.closure(start, &self.children)
    }

    /// Strict ancestors of `w`.
    pub fn ancestors(&self, w: usize) -> VarSet {
        let start = self.parents[w];
        self.closure(start, &self.parents)
    }

    /// `set` together with all of its ancestors.
    pub fn ancestral_closure(&self, set: VarSet) -> VarSet {
        self.closure(set, &self.parents)
    }

    /// True iff every trail between `a` and `b` is blocked by `c`.
    pub fn d_separates(&self, a: VarSet, c: VarSet, b: VarSet) -> Result<bool> {
        self.check(a, c, b)?;
        Ok(self.d_separates_unchecked(a, c, b))
    }

    pub(crate) fn d_separates_unchecked(&self, a: VarSet, c: VarSet, b: VarSet) -> bool {
        if a.is_empty() || b.is_empty() {
            return true;
        }
        // A collider is open iff it is in c or has a descendant in c.
        let open_colliders = self.ancestral_closure(c);
        // `up`: entered from a child (or start), `down`: entered from a parent.
        let mut seen_up = VarSet::EMPTY;
        let mut seen_down = VarSet::EMPTY;
        let mut stack: Vec<(usize, bool)> = a.iter().map(|x| (x, true)).collect();
        while let Some((y, up)) = stack.pop() {
            let seen = if up { &mut seen_up } else { &mut seen_down };
            if seen.contains(y) {
                continue;
            }
            seen.insert(y);
            let observed = c.contains(y);
            if !observed && b.contains(y) {
                return false;
            }
            if up {
                if !observed {
                    stack.extend(self.parents[y].iter().map(|p| (p, true)));
                    stack.extend(self.children[y].iter().map(|ch| (ch, false)));
                }
            } else {
                if !observed {
                    stack.extend(self.children[y].iter().map(|ch| (ch, false)));
                }
                if open_colliders.contains(y) {
                    stack.extend(self.parents[y].iter().map(|p| (p, true)));
                }
            }
        }
        true
    }

    /// d-separation decided as vertex separation in the moral graph of the
    /// smallest ancestral set containing `a`, `b` and `c`.
    pub fn d_separates_moral(&self, a: VarSet, c: VarSet, b: VarSet) -> Result<bool> {
        self.check(a, c, b)?;
        Ok(self.d_separates_moral_unchecked(a, c, b))
    }

    pub(crate) fn d_separates_moral_unchecked(&self, a: VarSet, c: VarSet, b: VarSet) -> bool {
        self.moral_ancestral_graph(a.union(b).union(c)).separates_unchecked(a, c, b)
    }

    /// Moral graph of the sub-DAG induced by the ancestral closure of `set`.
    /// Nodes outside the closure stay isolated.
    pub fn moral_ancestral_graph(&self, set: VarSet) -> UndirectedGraph {
        let keep = self.ancestral_closure(set);
        let mut edges = Vec::new();
        for y in keep.iter() {
            let ps: Vec<usize> = self.parents[y].iter().collect();
            edges.extend(ps.iter().map(|&p| (p.min(y), p.max(y))));
            for (i, &p) in ps.iter().enumerate() {
                edges.extend(ps[i + 1..].iter().map(|&q| (p, q)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        UndirectedGraph::from_edges(self.universe.clone(), edges).expect("moral graph edges are distinct and in range")
    }

    fn check(&self, a: VarSet, c: VarSet, b: VarSet) -> Result<()> {
        let t = Triple::new(a, c, b)?;
        self.universe.check_set(t.support())
    }

    pub fn dsep_model(&self) -> IndependencyModel {
        IndependencyModel::induced(self.universe.clone(), |t| self.d_separates_unchecked(t.a, t.c, t.b))
    }

    /// Whether `x` and `y` are joined by an arc in either direction.
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.children[x].contains(y) || self.children[y].contains(x)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.universe.names().join(" "));
        for (x, y) in self.arcs() {
            let _ = writeln!(out, "{} -> {}", self.universe.name(x), self.universe.name(y));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or(Error::Parse { line: 1, message: "missing `vars:` header".to_string() })?;
        let mut d = Dag::empty(parse_vars_header(header, line_no)?);
        let mut last_line = line_no;
        for (line_no, line) in lines {
            last_line = line_no;
            let at = |e: Error| Error::Parse { line: line_no, message: e.to_string() };
            let (x, y) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse { line: line_no, message: "expected `<label> -> <label>`".to_string() })?;
            let x = d.universe.index_of(x.trim()).map_err(at)?;
            let y = d.universe.index_of(y.trim()).map_err(at)?;
            d.push_arc(x, y).map_err(at)?;
        }
        if !d.is_acyclic() {
            return Err(Error::Parse { line: last_line, message: Error::Cyclic.to_string() });
        }
        Ok(d)
    }
}

fn is_acyclic_parents(parents: &[VarSet]) -> bool {
    let mut remaining = VarSet::from_indices(0..parents.len());
    loop {
        let sources: VarSet = remaining.iter().filter(|&x| parents[x].is_disjoint(remaining)).collect();
        if sources.is_empty() {
            return remaining.is_empty();
        }
        remaining = remaining.difference(sources);
    }
}

/// Ordered pairs `(x, y)`, `x != y`, in lexicographic order.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect()
}

/// Every labelled DAG on `universe`, exactly once. Candidate `m` has arc
/// `ordered_pairs(n)[k]` iff bit `k` of `m` is set; candidates are visited in
/// increasing `m` and cyclic ones are skipped, so the order is deterministic.
pub fn enumerate_dags(universe: &Universe) -> Result<impl Iterator<Item = Dag> + '_> {
    let n = universe.len();
    if n > MAX_ENUM_DAG_VARS {
        return Err(Error::GateExceeded { what: "DAG enumeration", got: n, max: MAX_ENUM_DAG_VARS });
    }
    let pairs = ordered_pairs(n);
    Ok((0..1u64 << pairs.len()).filter_map(move |mask| {
        let mut parents = vec![VarSet::EMPTY; n];
        let mut children = vec![VarSet::EMPTY; n];
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                if mask >> pair_index(n, y, x) & 1 == 1 {
                    return None;
                }
                children[x].insert(y);
                parents[y].insert(x);
            }
        }
        is_acyclic_parents(&parents).then(|| Dag { universe: universe.clone(), parents, children })
    }))
}

fn pair_index(n: usize, x: usize, y: usize) -> usize {
    x * (n - 1) + if y > x { y - 1 } else { y }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_disjoint_triples;

    fn s(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    /// Labelled nodes `1..=3` with the given arcs between labels.
    fn dag3(arcs: &[(usize, usize)]) -> Dag {
        let u = Universe::new(["1", "2", "3"]).unwrap();
        Dag::from_arcs(u, arcs.iter().map(|&(x, y)| (x - 1, y - 1))).unwrap()
    }

    fn counterexample() -> Dag {
        Dag::from_arcs(Universe::numbered(5).unwrap(), [(1, 2), (0, 2), (0, 3), (4, 3)]).unwrap()
    }

    /// Enumerates trails (no repeated nodes) and applies the blocking rules
    /// node by node.
    fn d_separates_by_trails(d: &Dag, a: VarSet, c: VarSet, b: VarSet) -> bool {
        fn active_trail_exists(d: &Dag, trail: &mut Vec<usize>, c: VarSet, b: VarSet) -> bool {
            let last = *trail.last().unwrap();
            if trail.len() >= 2 && b.contains(last) {
                return true;
            }
            let neighbours = d.parents(last).union(d.children(last));
            for next in neighbours.iter() {
                if trail.contains(&next) {
                    continue;
                }
                if trail.len() >= 2 {
                    let prev = trail[trail.len() - 2];
                    let collider = d.children(prev).contains(last) && d.children(next).contains(last);
                    let blocked = if collider {
                        !c.contains(last) && d.descendants(last).is_disjoint(c)
                    } else {
                        c.contains(last)
                    };
                    if blocked {
                        continue;
                    }
                }
                trail.push(next);
                let found = active_trail_exists(d, trail, c, b);
                trail.pop();
                if found {
                    return true;
                }
            }
            false
        }
        !a.iter().any(|x| active_trail_exists(d, &mut vec![x], c, b))
    }

    #[test]
    fn collider_and_chain() {
        let collider = dag3(&[(1, 2), (3, 2)]);
        assert!(collider.d_separates(s(&[0]), s(&[]), s(&[2])).unwrap());
        assert!(!collider.d_separates(s(&[0]), s(&[1]), s(&[2])).unwrap());
        let chain = dag3(&[(1, 2), (2, 3)]);
        assert!(chain.d_separates(s(&[0]), s(&[1]), s(&[2])).unwrap());
        assert!(!chain.d_separates(s(&[0]), s(&[]), s(&[2])).unwrap());
        assert_eq!(chain.descendants(0), s(&[1, 2]));
        assert_eq!(chain.descendants(2), VarSet::EMPTY);
        assert_eq!(chain.ancestors(2), s(&[0, 1]));
        assert_eq!(chain.d_separates(s(&[0]), s(&[0]), s(&[2])), Err(Error::NotDisjoint));
    }

    #[test]
    fn counterexample_queries() {
        let d = counterexample();
        assert!(d.d_separates(s(&[1]), s(&[]), s(&[3])).unwrap());
        assert!(d.d_separates(s(&[2]), s(&[1]), s(&[4])).unwrap());
        assert!(!d.d_separates(s(&[2]), s(&[3]), s(&[4])).unwrap());
        assert_eq!(d.descendants(0), s(&[2, 3]));
        for (a, c, b) in [(1, vec![], 3), (2, vec![1], 4), (2, vec![3], 4)] {
            assert_eq!(
                d.d_separates(s(&[a]), s(&c), s(&[b])).unwrap(),
                d_separates_by_trails(&d, s(&[a]), s(&c), s(&[b]))
            );
        }
    }

    #[test]
    fn induced_model_examples() {
        assert_eq!(Dag::empty(Universe::numbered(2).unwrap()).dsep_model().len(), 16);
        let total = dag3(&[(1, 2), (1, 3), (2, 3)]).dsep_model();
        assert!(total.triples().all(Triple::is_vacuous));
        let collider = dag3(&[(1, 2), (3, 2)]).dsep_model();
        assert!(collider.contains(&Triple::new(s(&[0]), s(&[]), s(&[2])).unwrap()));
        assert!(!collider.contains(&Triple::new(s(&[0]), s(&[1]), s(&[2])).unwrap()));
    }

    #[test]
    fn algorithms_agree_with_trail_enumeration() {
        for n in 1..=4 {
            let u = Universe::numbered(n).unwrap();
            for d in enumerate_dags(&u).unwrap() {
                for t in enumerate_disjoint_triples(&u) {
                    let trails = d_separates_by_trails(&d, t.a, t.c, t.b);
                    assert_eq!(d.d_separates_unchecked(t.a, t.c, t.b), trails, "{:?} {:?}", d.arcs(), t);
                    assert_eq!(d.d_separates_moral_unchecked(t.a, t.c, t.b), trails);
                }
            }
        }
    }

    #[test]
    fn adjacency_iff_never_separated() {
        for n in 2..=4 {
            let u = Universe::numbered(n).unwrap();
            for d in enumerate_dags(&u).unwrap() {
                for x in 0..n {
                    for y in (0..n).filter(|&y| y != x) {
                        let rest = u.full().difference(s(&[x, y]));
                        let never = rest.subsets().all(|c| !d.d_separates_unchecked(s(&[x]), c, s(&[y])));
                        assert_eq!(d.adjacent(x, y), never);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_dags() {
        let u = Universe::numbered(3).unwrap();
        assert_eq!(Dag::from_arcs(u.clone(), [(0, 1), (1, 2), (2, 0)]), Err(Error::Cyclic));
        assert!(matches!(Dag::from_arcs(u.clone(), [(1, 1)]), Err(Error::SelfLoop(_))));
        assert!(matches!(Dag::from_arcs(u.clone(), [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(..))));
        assert!(matches!(Dag::from_arcs(u, [(0, 7)]), Err(Error::IndexOutOfRange { .. })));
        assert!(enumerate_dags(&Universe::numbered(6).unwrap()).is_err());
    }

    #[test]
    fn text_format() {
        let d = Dag::parse("vars: 0 1 2 3 4\n# arcs\n1 -> 2\n0 -> 2\n0 -> 3\n4 -> 3\n").unwrap();
        assert_eq!(d, counterexample());
        assert_eq!(d.to_text(), "vars: 0 1 2 3 4\n0 -> 2\n0 -> 3\n1 -> 2\n4 -> 3\n");
        assert_eq!(Dag::parse(&d.to_text()).unwrap(), d);
        assert!(matches!(Dag::parse("vars: a b\na -> b\nb -> a\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Dag::parse("vars: a b\na -- b\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn pair_index_matches_ordered_pairs() {
        for n in 1..=5 {
            for (k, &(x, y)) in ordered_pairs(n).iter().enumerate() {
                assert_eq!(pair_index(n, x, y), k);
            }
        }
    }
}
