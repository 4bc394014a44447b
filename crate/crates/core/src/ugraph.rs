//! Undirected graphs, vertex separation and the marginal graph on a subset.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{IndependencyModel, Triple};
use crate::universe::{content_lines, parse_vars_header, Universe, VarSet};

/// Largest universe accepted by [`enumerate_undirected_graphs`].
pub const MAX_ENUM_GRAPH_VARS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    universe: Universe,
    /// `adj[i]` holds the neighbours of node `i`.
    adj: Vec<VarSet>,
}

impl UndirectedGraph {
    pub fn empty(universe: Universe) -> Self {
        let n = universe.len();
        UndirectedGraph { universe, adj: vec![VarSet::EMPTY; n] }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(universe: Universe, edges: I) -> Result<Self> {
        let mut g = UndirectedGraph::empty(universe);
        for (x, y) in edges {
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    /// Rejects self-loops, out-of-range endpoints and repeated edges.
    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<()> {
        let n = self.universe.len();
        for i in [x, y] {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
        }
        if x == y {
            return Err(Error::SelfLoop(self.universe.name(x).to_string()));
        }
        if self.adj[x].contains(y) {
            return Err(Error::DuplicateEdge(self.universe.name(x).to_string(), self.universe.name(y).to_string()));
        }
        self.adj[x].insert(y);
        self.adj[y].insert(x);
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn neighbors(&self, x: usize) -> VarSet {
        self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    /// Edges `(x, y)` with `x < y`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|x| self.adj[x].iter().filter(move |&y| y > x).map(move |y| (x, y)))
            .collect()
    }

    /// Nodes reachable from `from` through nodes of `allowed` (the start set is
    /// included whether or not it is allowed).
    fn reach(&self, from: VarSet, allowed: VarSet) -> VarSet {
        let mut seen = from;
        let mut frontier = from;
        while !frontier.is_empty() {
            let mut next = VarSet::EMPTY;
            for x in frontier.iter() {
                next = next.union(self.adj[x]);
            }
            frontier = next.intersection(allowed).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True iff every path from `a` to `b` passes through `c`. Empty `a` or
    /// `b` is separated vacuously.
    pub fn separates(&self, a: VarSet, c: VarSet, b: VarSet) -> Result<bool> {
        let t = Triple::new(a, c, b)?;
        self.universe.check_set(t.support())?;
        Ok(self.separates_unchecked(a, c, b))
    }

    pub(crate) fn separates_unchecked(&self, a: VarSet, c: VarSet, b: VarSet) -> bool {
        let open = self.universe.complement(c);
        self.reach(a, open).is_disjoint(b)
    }

    pub fn separation_model(&self) -> IndependencyModel {
        IndependencyModel::induced(self.universe.clone(), |t| self.separates_unchecked(t.a, t.c, t.b))
    }

    /// The graph on `v` joining `x` and `y` whenever some path between them
    /// has all interior nodes outside `v`.
    pub fn marginal_graph(&self, v: VarSet) -> Result<UndirectedGraph> {
        let universe = self.universe.sub_universe(v)?;
        let hidden = self.universe.complement(v);
        let mut g = UndirectedGraph::empty(universe);
        for x in v.iter() {
            let through = self.reach(VarSet::singleton(x), hidden);
            let mut touched = VarSet::EMPTY;
            for z in through.iter() {
                touched = touched.union(self.adj[z]);
            }
            let kx = VarSet::singleton(x).compress(v).iter().next().unwrap_or(0);
            for y in touched.intersection(v).iter().filter(|&y| y > x) {
                let ky = VarSet::singleton(y).compress(v).iter().next().unwrap_or(0);
                g.adj[kx].insert(ky);
                g.adj[ky].insert(kx);
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.universe.names().join(" "));
        for (x, y) in self.edges() {
            let _ = writeln!(out, "{} -- {}", self.universe.name(x), self.universe.name(y));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or(Error::Parse { line: 1, message: "missing `vars:` header".to_string() })?;
        let mut g = UndirectedGraph::empty(parse_vars_header(header, line_no)?);
        for (line_no, line) in lines {
            let at = |e: Error| Error::Parse { line: line_no, message: e.to_string() };
            let (x, y) = line
                .split_once("--")
                .ok_or_else(|| Error::Parse { line: line_no, message: "expected `<label> -- <label>`".to_string() })?;
            let x = g.universe.index_of(x.trim()).map_err(at)?;
            let y = g.universe.index_of(y.trim()).map_err(at)?;
            g.add_edge(x, y).map_err(at)?;
        }
        Ok(g)
    }
}

/// All labelled graphs on `universe`. Graph number `m` contains the `k`-th
/// pair of [`node_pairs`] iff bit `k` of `m` is set.
pub fn enumerate_undirected_graphs(universe: &Universe) -> Result<impl Iterator<Item = UndirectedGraph> + '_> {
    let n = universe.len();
    if n > MAX_ENUM_GRAPH_VARS {
        return Err(Error::GateExceeded { what: "undirected graph enumeration", got: n, max: MAX_ENUM_GRAPH_VARS });
    }
    let pairs = node_pairs(n);
    Ok((0..1u64 << pairs.len()).map(move |mask| {
        let mut g = UndirectedGraph::empty(universe.clone());
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.adj[x].insert(y);
                g.adj[y].insert(x);
            }
        }
        g
    }))
}

/// Unordered pairs `(x, y)`, `x < y`, in lexicographic order.
pub fn node_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
}
