//! Brute-force reference computations on explicit element lists. Nothing
//! here touches element tables, stabilizer chains or class machinery, so the
//! results are independent checks on the fast paths.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::graph::Dist;
use crate::perm::Permutation;
use crate::predicate::PredicateKind;

/// All elements of `⟨gens⟩`, sorted, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(e) = queue.pop() {
        for s in gens {
            let f = e.mul(s);
            if seen.insert(f.clone()) {
                queue.push(f);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

/// Derived series through full commutator sets: `G' = ⟨[a, b] : a, b ∈ G⟩`.
pub fn is_soluble(elements: &[Permutation]) -> bool {
    let Some(first) = elements.first() else { return true };
    let degree = first.degree();
    let mut current = elements.to_vec();
    loop {
        if current.len() == 1 {
            return true;
        }
        let mut comms: Vec<Permutation> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for a in &current {
            for b in &current {
                let c = a.commutator(b);
                if seen.insert(c.clone()) {
                    comms.push(c);
                }
            }
        }
        let next = closure(degree, &comms);
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertices: usize,
    pub components: usize,
    pub diameter: Dist,
}

/// Builds the whole graph and runs a BFS from every vertex.
///
/// Adjacency rows are evaluated with the pair predicate for one element per
/// conjugacy class and carried to the rest of the class by conjugation, using
/// `x ~ y ⇔ x^g ~ y^g`. Classes are found by conjugating with every element.
pub fn graph_summary(elements: &[Permutation], kind: PredicateKind) -> GraphSummary {
    let n = elements.len();
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut rows: Vec<Option<FixedBitSet>> = vec![None; n];
    for x in 0..n {
        if rows[x].is_some() {
            continue;
        }
        let mut row = FixedBitSet::with_capacity(n);
        for (y, p) in elements.iter().enumerate() {
            if kind.holds(&elements[x], p) {
                row.insert(y);
            }
        }
        for g in elements {
            let v = index[&elements[x].conjugate(g)];
            if rows[v].is_none() {
                let mut moved = FixedBitSet::with_capacity(n);
                for y in row.ones() {
                    moved.insert(index[&elements[y].conjugate(g)]);
                }
                rows[v] = Some(moved);
            }
        }
    }
    let rows: Vec<FixedBitSet> = rows.into_iter().map(|r| r.expect("every class visited")).collect();
    // universal elements are excluded from the vertex set
    let mut vertices = FixedBitSet::with_capacity(n);
    for (v, row) in rows.iter().enumerate() {
        if row.count_ones(..) < n {
            vertices.insert(v);
        }
    }
    let mut diameter = Dist::Finite(0);
    let mut unvisited = vertices.clone();
    let mut components = 0;
    for s in vertices.ones() {
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(s);
        let mut frontier = vec![s];
        let mut depth = 0;
        loop {
            let mut reach = FixedBitSet::with_capacity(n);
            for &v in &frontier {
                reach.union_with(&rows[v]);
            }
            reach.intersect_with(&vertices);
            reach.difference_with(&seen);
            if reach.is_clear() {
                break;
            }
            depth += 1;
            seen.union_with(&reach);
            frontier = reach.ones().collect();
        }
        if unvisited.contains(s) {
            components += 1;
            unvisited.difference_with(&seen);
        }
        let ecc = if seen.count_ones(..) == vertices.count_ones(..) {
            Dist::Finite(depth)
        } else {
            Dist::Infinite
        };
        diameter = diameter.max(ecc);
    }
    GraphSummary {
        vertices: vertices.count_ones(..),
        components,
        diameter,
    }
}
