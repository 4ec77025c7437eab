use std::sync::LazyLock;

use proptest::prelude::*;
use solgraph::certs::{find_lb3, verify, Certificate, Search};
use solgraph::{build_str, GraphView, Permutation, PredicateKind, DEFAULT_CAP};

static A6: LazyLock<GraphView> = LazyLock::new(|| {
    GraphView::new(&build_str("A(6)").unwrap(), PredicateKind::Soluble, DEFAULT_CAP).unwrap()
});

static S5_METABELIAN: LazyLock<GraphView> = LazyLock::new(|| {
    GraphView::new(&build_str("S(5)").unwrap(), PredicateKind::Metabelian, DEFAULT_CAP).unwrap()
});

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_and_product(p in perm(9), q in perm(9)) {
        prop_assert!(p.mul(&p.inverse()).is_identity());
        prop_assert_eq!(p.mul(&q).inverse(), q.inverse().mul(&p.inverse()));
        prop_assert_eq!(p.conjugate(&q), q.inverse().mul(&p).mul(&q));
        prop_assert_eq!(Permutation::parse_cycles(&p.to_cycle_string(), 9).unwrap(), p);
    }

    #[test]
    fn adjacency_symmetric_and_conjugation_invariant(x in 0u32..360, y in 0u32..360, g in 0u32..360) {
        let v = &*A6;
        let t = v.table();
        prop_assume!(v.is_vertex(x) && v.is_vertex(y));
        let a = v.adjacent(x, y).unwrap();
        prop_assert_eq!(a, v.adjacent(y, x).unwrap());
        prop_assert_eq!(a, v.adjacent(t.conj(x, g), t.conj(y, g)).unwrap());
        let direct = x != y && PredicateKind::Soluble.holds(&t.perm(x), &t.perm(y));
        prop_assert_eq!(a, direct);
    }

    #[test]
    fn metabelian_adjacency_matches_predicate(x in 0u32..120, y in 0u32..120) {
        let v = &*S5_METABELIAN;
        let t = v.table();
        prop_assume!(v.is_vertex(x) && v.is_vertex(y) && x != y);
        prop_assert_eq!(v.adjacent(x, y).unwrap(), PredicateKind::Metabelian.holds(&t.perm(x), &t.perm(y)));
    }

    #[test]
    fn balls_grow_with_radius(x in 0u32..360, r in 0u32..3) {
        let v = &*A6;
        prop_assume!(v.is_vertex(x));
        let small = v.ball(x, r).unwrap().members;
        let big = v.ball(x, r + 1).unwrap().members;
        prop_assert!(small.iter().all(|e| big.binary_search(e).is_ok()));
        prop_assert!(small.len() <= big.len());
        if r == 0 {
            prop_assert_eq!(small, vec![x]);
        }
    }

    #[test]
    fn certificates_round_trip(seed in any::<u64>()) {
        let out = find_lb3(&A6, "A(6)", Search::Random { seed, budget: 200 }).unwrap();
        if let Some(cert) = out.certificate() {
            let text = cert.to_json();
            let back = Certificate::from_json(&text).unwrap();
            prop_assert_eq!(&back, cert);
            prop_assert_eq!(back.to_json(), text);
            prop_assert!(verify(&back).unwrap());
        }
    }
}
