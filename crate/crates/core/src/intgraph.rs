//! Subgroup lattices of small groups and the soluble intersection graph
//! `Int_S(G)`: nontrivial soluble subgroups, adjacent when they meet
//! nontrivially.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dist, GraphView};
use crate::group::{cyclic_indices, subgroup_from_indices, Group};
use crate::predicate::PredicateKind;
use crate::simple_graph::SimpleGraph;
use crate::table::ElementTable;

/// Default ceiling on the ambient order for subgroup enumeration.
pub const SUBGROUP_CAP: u64 = 1000;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub members: FixedBitSet,
    pub order: usize,
    /// Generators (element indices) the subgroup was found from.
    pub generators: Vec<u32>,
}

pub struct SubgroupTable {
    pub ambient: Group,
    pub table: Arc<ElementTable>,
    /// Sorted by order, then by member list.
    pub subgroups: Vec<Subgroup>,
}

fn closure(table: &ElementTable, start: &FixedBitSet, gens: &[u32]) -> FixedBitSet {
    let mut set = start.clone();
    let mut queue: Vec<u32> = set.ones().map(|e| e as u32).collect();
    if queue.is_empty() {
        set.insert(table.identity() as usize);
        queue.push(table.identity());
    }
    while let Some(e) = queue.pop() {
        for &s in gens {
            let f = table.mul(e, s);
            if !set.put(f as usize) {
                queue.push(f);
            }
        }
    }
    set
}

/// Every subgroup, by joining subgroups with cyclic subgroups until no new
/// subgroup appears. Each subgroup is a join of its cyclic subgroups, so the
/// fixpoint is the whole lattice.
pub fn enumerate_subgroups(g: &Group, cap: u64) -> Result<SubgroupTable> {
    if g.order_u64().is_none_or(|o| o > cap) {
        return Err(Error::capacity("subgroup enumeration", g.order(), cap));
    }
    let table = g.table(cap)?;
    let n = table.len();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut add = |members: FixedBitSet, generators: Vec<u32>, subgroups: &mut Vec<Subgroup>| {
        let key: Vec<usize> = members.as_slice().to_vec();
        if index.contains_key(&key) {
            return;
        }
        index.insert(key, subgroups.len());
        subgroups.push(Subgroup {
            order: members.count_ones(..),
            members,
            generators,
        });
    };
    let mut trivial = FixedBitSet::with_capacity(n);
    trivial.insert(table.identity() as usize);
    add(trivial, Vec::new(), &mut subgroups);
    let mut cyclic_gens = Vec::new();
    for x in 0..n as u32 {
        let mut members = FixedBitSet::with_capacity(n);
        for e in cyclic_indices(&table, x) {
            members.insert(e as usize);
        }
        let before = subgroups.len();
        add(members, vec![x], &mut subgroups);
        if subgroups.len() > before {
            cyclic_gens.push(x);
        }
    }
    let mut i = 0;
    while i < subgroups.len() {
        if subgroups[i].order < n {
            for &c in &cyclic_gens {
                if subgroups[i].members.contains(c as usize) {
                    continue;
                }
                let mut gens = subgroups[i].generators.clone();
                gens.push(c);
                let joined = closure(&table, &subgroups[i].members, &gens);
                add(joined, gens, &mut subgroups);
            }
        }
        i += 1;
    }
    subgroups.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.members.ones().cmp(b.members.ones()))
    });
    Ok(SubgroupTable {
        ambient: g.clone(),
        table,
        subgroups,
    })
}

impl SubgroupTable {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_of(&self, i: usize) -> Group {
        let members: Vec<u32> = self.subgroups[i].members.ones().map(|e| e as u32).collect();
        subgroup_from_indices(&self.table, &members)
    }

    /// Whether entry `i` is closed under products and inverses.
    pub fn is_closed(&self, i: usize) -> bool {
        let s = &self.subgroups[i].members;
        s.ones().all(|a| {
            s.contains(self.table.inv(a as u32) as usize)
                && s.ones()
                    .all(|b| s.contains(self.table.mul(a as u32, b as u32) as usize))
        })
    }
}

/// `Int_S(G)`: vertex `i` is the `i`-th nontrivial soluble subgroup in
/// table order.
pub struct IntersectionGraph {
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
}

pub fn soluble_intersection_graph(subs: &SubgroupTable) -> Result<IntersectionGraph> {
    if subs.ambient.is_soluble().0 {
        return Err(Error::SolubleInput);
    }
    let vertices: Vec<usize> = (0..subs.len())
        .filter(|&i| subs.subgroups[i].order > 1 && subs.group_of(i).is_soluble().0)
        .collect();
    let mut graph = SimpleGraph::new(vertices.len());
    for a in 0..vertices.len() {
        let sa = &subs.subgroups[vertices[a]].members;
        for b in a + 1..vertices.len() {
            let sb = &subs.subgroups[vertices[b]].members;
            if sa.intersection(sb).nth(1).is_some() {
                graph.add_edge(a, b);
            }
        }
    }
    Ok(IntersectionGraph { vertices, graph })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualPairReport {
    pub soluble_graph_diameter: Dist,
    pub intersection_graph_diameter: Dist,
    pub soluble_graph_components: usize,
    pub intersection_graph_components: usize,
    pub intersection_graph_vertices: usize,
    pub holds: bool,
}

/// Compares `Γ_S(G)` with `Int_S(G)`: component counts must agree and
/// diameters differ by at most one.
pub fn dual_pair_check(g: &Group, cap: u64) -> Result<DualPairReport> {
    let radical = g.soluble_radical(cap)?;
    if !radical.is_trivial() {
        return Err(Error::Unsupported("dual pair check needs a trivial soluble radical".into()));
    }
    let view = GraphView::new(g, PredicateKind::Soluble, cap)?;
    let subs = enumerate_subgroups(g, cap)?;
    let int = soluble_intersection_graph(&subs)?;
    let ds = view.diameter();
    let di = int.graph.diameter();
    let cs = view.components().len();
    let ci = int.graph.components().len();
    let close = match (ds, di) {
        (Dist::Finite(a), Dist::Finite(b)) => a.abs_diff(b) <= 1,
        (Dist::Infinite, Dist::Infinite) => true,
        _ => false,
    };
    Ok(DualPairReport {
        soluble_graph_diameter: ds,
        intersection_graph_diameter: di,
        soluble_graph_components: cs,
        intersection_graph_components: ci,
        intersection_graph_vertices: int.vertices.len(),
        holds: close && cs == ci,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_str;

    #[test]
    fn small_lattices() {
        let c6 = Group::from_generators(vec![crate::Permutation::parse_cycles("(1,2,3,4,5,6)", 6).unwrap()]).unwrap();
        assert_eq!(enumerate_subgroups(&c6, SUBGROUP_CAP).unwrap().len(), 4);
        let s4 = build_str("S(4)").unwrap();
        let t = enumerate_subgroups(&s4, SUBGROUP_CAP).unwrap();
        assert_eq!(t.len(), 30);
        assert!((0..t.len()).all(|i| t.is_closed(i)));
        assert!(matches!(soluble_intersection_graph(&t), Err(Error::SolubleInput)));
    }

    #[test]
    fn a5_lattice() {
        let a5 = build_str("A(5)").unwrap();
        let t = enumerate_subgroups(&a5, SUBGROUP_CAP).unwrap();
        assert_eq!(t.len(), 59);
        assert_eq!(t.subgroups[0].order, 1);
        assert_eq!(t.subgroups.last().unwrap().order, 60);
        let int = soluble_intersection_graph(&t).unwrap();
        assert_eq!(int.vertices.len(), 57);
    }
}
