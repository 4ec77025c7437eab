use solgraph::group::Group;
use solgraph::{build_str, PredicateKind, DEFAULT_CAP};

#[test]
fn radical_is_maximal() {
    for spec in ["SL2(5)", "A(5) x S(3)", "A(5)"] {
        let g = build_str(spec).unwrap();
        let r = g.soluble_radical(DEFAULT_CAP).unwrap();
        assert!(r.is_soluble().0 && g.normalizes(&r), "{spec}");
        let els = g.elements(DEFAULT_CAP).unwrap();
        for x in els.iter().filter(|x| !r.contains(x).unwrap()) {
            assert!(els.iter().any(|y| !PredicateKind::Soluble.holds(x, y)), "{spec}");
        }
        let (q, _) = g.quotient_by(&r, DEFAULT_CAP).unwrap();
        assert!(q.soluble_radical(DEFAULT_CAP).unwrap().is_trivial(), "{spec}");
    }
    assert_eq!(build_str("SL2(5)").unwrap().soluble_radical(DEFAULT_CAP).unwrap().order_u64(), Some(2));
}

#[test]
fn class_sizes() {
    let a5 = build_str("A(5)").unwrap();
    let mut sizes: Vec<usize> = a5.conjugacy_classes(DEFAULT_CAP).unwrap().iter().map(|c| c.size).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 12, 12, 15, 20]);
    assert_eq!(build_str("S(5)").unwrap().conjugacy_classes(DEFAULT_CAP).unwrap().len(), 7);
    for spec in ["M10", "PSL2(13)", "SL2(5)"] {
        let g = build_str(spec).unwrap();
        let n = g.order_u64().unwrap() as usize;
        let classes = g.conjugacy_classes(DEFAULT_CAP).unwrap();
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), n);
        assert!(classes.iter().all(|c| n % c.size == 0 && c.members[0] == c.representative));
    }
}

#[test]
fn psl2_simple_and_inside_pgl2() {
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        let g = build_str(&format!("PSL2({q})")).unwrap();
        let expected = q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 };
        assert_eq!(g.order_u64(), Some(expected));
        assert!(g.soluble_radical(DEFAULT_CAP).unwrap().is_trivial(), "q={q}");
        for c in g.conjugacy_classes(DEFAULT_CAP).unwrap().iter().skip(1).take(3) {
            let closure = Group::from_generators(c.members.clone()).unwrap();
            assert_eq!(closure.order(), g.order(), "q={q}");
        }
        let pgl = build_str(&format!("PGL2({q})")).unwrap();
        assert!(g.is_subgroup_of(&pgl));
        assert_eq!(pgl.order_u64(), Some(q * (q * q - 1)));
    }
}

#[test]
fn orders_of_constructions() {
    for (spec, order, degree) in [
        ("PSL2(7)", 168, 8),
        ("PGL2(9)", 720, 10),
        ("M11", 7920, 11),
        ("M10", 720, 10),
        ("PGammaL2_9", 1440, 10),
        ("A(5) x A(5)", 3600, 10),
        ("S(3) wr2", 72, 6),
        ("A(5) wr2", 7200, 10),
        ("PSL2(8) x PSL2(8)", 254016, 18),
    ] {
        let g = build_str(spec).unwrap();
        assert_eq!((g.order_u64(), g.degree()), (Some(order), degree), "{spec}");
    }
    let m10 = build_str("M10").unwrap();
    let a6 = build_str("PSL2(9)").unwrap();
    assert!(a6.is_subgroup_of(&m10) && a6.is_subgroup_of(&build_str("PGammaL2_9").unwrap()));
}
