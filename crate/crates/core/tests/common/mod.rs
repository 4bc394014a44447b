#![allow(dead_code)]

use indepmodel::logic::{Atom, Clause, Formula, Term};
use indepmodel::{enumerate_disjoint_triples, IndependencyModel, Universe, VarSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Term variable names; `I` is deliberately included since it is only a
/// keyword in formula position.
pub const VAR_POOL: [&str; 6] = ["X1", "X2", "X3", "Y", "Zeta9", "I"];

pub fn random_term<R: Rng>(rng: &mut R, vars: &[&str], depth: u32, complements: bool) -> Term {
    let leaf = depth == 0 || rng.gen_bool(0.4);
    if leaf {
        return if rng.gen_bool(0.15) { Term::Empty } else { Term::var(*vars.choose(rng).unwrap()) };
    }
    let choice = rng.gen_range(0..if complements { 3 } else { 2 });
    match choice {
        0 => Term::union(random_term(rng, vars, depth - 1, complements), random_term(rng, vars, depth - 1, complements)),
        1 => Term::intersection(
            random_term(rng, vars, depth - 1, complements),
            random_term(rng, vars, depth - 1, complements),
        ),
        _ => Term::complement(random_term(rng, vars, depth - 1, complements)),
    }
}

pub fn random_atom<R: Rng>(rng: &mut R, vars: &[&str], term_depth: u32, complements: bool) -> Atom {
    Atom(
        random_term(rng, vars, term_depth, complements),
        random_term(rng, vars, term_depth, complements),
        random_term(rng, vars, term_depth, complements),
    )
}

pub fn random_formula<R: Rng>(rng: &mut R, vars: &[&str], depth: u32, term_depth: u32, complements: bool) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return Formula::Atom(random_atom(rng, vars, term_depth, complements));
    }
    let sub = |rng: &mut R| random_formula(rng, vars, depth - 1, term_depth, complements);
    match rng.gen_range(0..4) {
        0 => Formula::not(sub(rng)),
        1 => {
            let l = sub(rng);
            Formula::and(l, sub(rng))
        }
        2 => {
            let l = sub(rng);
            Formula::or(l, sub(rng))
        }
        _ => {
            let l = sub(rng);
            Formula::implies(l, sub(rng))
        }
    }
}

pub fn random_clause<R: Rng>(rng: &mut R, vars: &[&str], term_depth: u32, complements: bool) -> Clause {
    loop {
        let k = rng.gen_range(0..=2);
        let l = rng.gen_range(0..=2);
        let negatives = (0..k).map(|_| random_atom(rng, vars, term_depth, complements)).collect();
        let positives = (0..l).map(|_| random_atom(rng, vars, term_depth, complements)).collect();
        if let Some(c) = Clause::new(negatives, positives) {
            return c;
        }
    }
}

/// Each disjoint triple is included independently with probability `density`.
pub fn random_model<R: Rng>(rng: &mut R, universe: &Universe, density: f64) -> IndependencyModel {
    IndependencyModel::induced(universe.clone(), |_| rng.gen_bool(density))
}

/// Random model that is closed under symmetry.
pub fn random_symmetric_model<R: Rng>(rng: &mut R, universe: &Universe, density: f64) -> IndependencyModel {
    let base = random_model(rng, universe, density);
    let triples: Vec<_> = enumerate_disjoint_triples(universe)
        .filter(|t| base.contains(t) || base.contains(&t.mirrored()))
        .collect();
    IndependencyModel::from_triples(universe.clone(), triples).unwrap()
}

pub fn random_nonempty_subset<R: Rng>(rng: &mut R, universe: &Universe) -> VarSet {
    let full = universe.full().bits();
    VarSet::from_bits(rng.gen_range(1..=full))
}

/// a(n) = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) a(n-k), a(0) = 1: the
/// number of labelled DAGs on n nodes, by inclusion-exclusion over the set
/// of sources.
pub fn dag_count_recurrence(n: usize) -> i128 {
    let mut a = vec![1i128];
    for m in 1..=n {
        let mut total = 0i128;
        let mut binom = 1i128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as i128 / k as i128;
            let term = binom * (1i128 << (k * (m - k))) * a[m - k];
            total += if k % 2 == 1 { term } else { -term };
        }
        a.push(total);
    }
    a[n]
}
