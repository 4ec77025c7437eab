use std::collections::BTreeSet;

use solgraph::group::Group;
use solgraph::intgraph::{dual_pair_check, enumerate_subgroups, soluble_intersection_graph, SUBGROUP_CAP};
use solgraph::{build_str, Dist, Error, Permutation, DEFAULT_CAP};

/// Every `⟨a, b⟩`, as sorted element-index lists. This is the whole lattice
/// whenever every subgroup is 2-generated.
fn two_generated(g: &Group) -> BTreeSet<Vec<u32>> {
    let t = g.table(DEFAULT_CAP).unwrap();
    let n = t.len() as u32;
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            let mut seen = vec![false; n as usize];
            seen[t.identity() as usize] = true;
            let mut queue = vec![t.identity()];
            while let Some(e) = queue.pop() {
                for s in [a, b] {
                    let f = t.mul(e, s);
                    if !seen[f as usize] {
                        seen[f as usize] = true;
                        queue.push(f);
                    }
                }
            }
            out.insert((0..n).filter(|&e| seen[e as usize]).collect());
        }
    }
    out
}

#[test]
fn lattices_match_pair_closures() {
    let c6 = Group::from_generators(vec![Permutation::parse_cycles("(1,2,3,4,5,6)", 6).unwrap()]).unwrap();
    for (g, count) in [(c6, 4), (build_str("S(4)").unwrap(), 30), (build_str("A(5)").unwrap(), 59)] {
        let table = enumerate_subgroups(&g, SUBGROUP_CAP).unwrap();
        let found: BTreeSet<Vec<u32>> = table
            .subgroups
            .iter()
            .map(|s| s.members.ones().map(|e| e as u32).collect())
            .collect();
        assert_eq!(found.len(), count);
        assert_eq!(found, two_generated(&g));
        assert!((0..table.len()).all(|i| table.is_closed(i)));
    }
}

#[test]
fn intersection_graph_of_a5() {
    let a5 = build_str("A(5)").unwrap();
    let subs = enumerate_subgroups(&a5, SUBGROUP_CAP).unwrap();
    let int = soluble_intersection_graph(&subs).unwrap();
    assert_eq!(int.vertices.len(), 57);
    assert_eq!(int.graph.components().len(), 1);
    assert!(int.graph.diameter() <= Dist::Finite(6));
    let s4 = build_str("S(4)").unwrap();
    let subs = enumerate_subgroups(&s4, SUBGROUP_CAP).unwrap();
    assert!(matches!(soluble_intersection_graph(&subs), Err(Error::SolubleInput)));
}

#[test]
fn dual_pairs() {
    for spec in ["A(5)", "A(6)", "PSL2(7)"] {
        let r = dual_pair_check(&build_str(spec).unwrap(), DEFAULT_CAP).unwrap();
        assert!(r.holds, "{spec}: {r:?}");
    }
    let sl = build_str("SL2(5)").unwrap();
    assert!(matches!(dual_pair_check(&sl, DEFAULT_CAP), Err(Error::Unsupported(_))));
}

#[test]
fn capacity_is_enforced() {
    let a7 = build_str("A(7)").unwrap();
    assert!(matches!(enumerate_subgroups(&a7, SUBGROUP_CAP), Err(Error::Capacity { .. })));
}
