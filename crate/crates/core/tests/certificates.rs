use solgraph::certs::{
    base_two_search, find_lb3, find_lb4, involution_distance_report, normalizer_parity_report,
    sophie_bound, verify, Certificate, Outcome, Search, Witness, DEFAULT_BUDGET,
};
use solgraph::group::Group;
use solgraph::{build_str, Error, GraphView, Permutation, PredicateKind, DEFAULT_CAP};

fn view(spec: &str) -> GraphView {
    GraphView::new(&build_str(spec).unwrap(), PredicateKind::Soluble, DEFAULT_CAP).unwrap()
}

fn seeded(seed: u64) -> Search {
    Search::Random { seed, budget: DEFAULT_BUDGET }
}

#[test]
fn lb3_found_for_a7_and_m11() {
    for spec in ["A(7)", "M11"] {
        let out = find_lb3(&view(spec), spec, seeded(1)).unwrap();
        let cert = out.certificate().expect("found");
        assert!(verify(cert).unwrap(), "{spec}");
        let again = find_lb3(&view(spec), spec, seeded(1)).unwrap();
        assert_eq!(again.certificate(), Some(cert), "seeded search is deterministic");
    }
}

#[test]
fn lb3_tampered_conjugator_fails() {
    let cert = find_lb3(&view("A(7)"), "A(7)", seeded(1)).unwrap().certificate().unwrap().clone();
    let mut bad = cert.clone();
    let Witness::Pair(w) = &mut bad.witness else { panic!("pair witness") };
    let g = Permutation::parse_cycles(&w.conjugator, 7).unwrap();
    w.conjugator = g.mul(&Permutation::parse_cycles("(1,2,3)", 7).unwrap()).to_cycle_string();
    assert!(!verify(&bad).unwrap());
    let mut bad = cert;
    bad.group = "A(8)".into();
    assert!(!verify(&bad).unwrap_or(false));
}

#[test]
fn lb4_absent_below_diameter_four() {
    for spec in ["A(5)", "A(7)"] {
        assert!(matches!(find_lb4(&view(spec), spec, Search::Exhaustive).unwrap(), Outcome::NotFound { .. }), "{spec}");
    }
    assert!(matches!(find_lb3(&view("A(5)"), "A(5)", Search::Exhaustive).unwrap(), Outcome::NotFound { .. }));
}

#[test]
fn base_two_examples() {
    let s7 = build_str("S(7)").unwrap();
    let x = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7).unwrap();
    let agl = s7.normalizer_of_cyclic(&x, DEFAULT_CAP).unwrap();
    assert_eq!(agl.order_u64(), Some(42));
    let cert = base_two_search(&s7, &agl, "S(7)", 3, DEFAULT_BUDGET).unwrap();
    let cert = cert.certificate().expect("found").clone();
    assert!(verify(&cert).unwrap());
    let back = Certificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);

    let triv = Group::trivial(7);
    let Outcome::Found(c) = base_two_search(&s7, &triv, "S(7)", 0, 0).unwrap() else { panic!() };
    let Witness::Base(w) = &c.witness else { panic!() };
    assert_eq!(w.conjugator, "()");

    let s4 = build_str("S(4)").unwrap();
    let a4 = build_str("A(4)").unwrap();
    assert!(matches!(base_two_search(&s4, &a4, "S(4)", 1, 500).unwrap(), Outcome::NotFound { .. }));
}

#[test]
fn involution_reports() {
    for spec in ["M11", "A(7)", "S(7)", "PSL2(11)"] {
        let cert = involution_distance_report(&view(spec), spec).unwrap();
        let Witness::Involution(r) = &cert.witness else { panic!() };
        assert!(r.max_distance <= 2, "{spec}");
        assert!(verify(&cert).unwrap(), "{spec}");
    }
}

#[test]
fn odd_order_has_no_involutions() {
    let g = Group::from_generators(vec![
        Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7).unwrap(),
        Permutation::parse_cycles("(2,3,5)(4,7,6)", 7).unwrap(),
    ])
    .unwrap();
    assert_eq!(g.order_u64(), Some(21));
    let v = GraphView::new(&g, PredicateKind::Abelian, DEFAULT_CAP).unwrap();
    let x = v.vertices()[0];
    assert!(matches!(v.involution_distance(x), Err(Error::NoInvolutions)));
}

#[test]
fn parity_reports() {
    for (spec, real) in [("S(7)", true), ("A(6)", true)] {
        let cert = normalizer_parity_report(&build_str(spec).unwrap(), spec).unwrap();
        let Witness::Parity(r) = &cert.witness else { panic!() };
        assert!(r.all_even, "{spec}");
        assert_eq!(r.diameter_bound, Some(3), "{spec}");
        assert_eq!(r.all_real, real, "{spec}");
        assert!(verify(&cert).unwrap());
    }
    // N(<x>) = 11:5 for x of order 11, so the parity bound does not apply
    let cert = normalizer_parity_report(&build_str("M11").unwrap(), "M11").unwrap();
    let Witness::Parity(r) = &cert.witness else { panic!() };
    let odd: Vec<(u64, u64)> = r.rows.iter().filter(|r| !r.even).map(|r| (r.element_order, r.normalizer_order)).collect();
    assert_eq!(odd, [(11, 55), (11, 55)]);
    assert_eq!(r.diameter_bound, None);
    assert!(verify(&cert).unwrap());
}

#[test]
fn sophie_arithmetic() {
    let r = sophie_bound(5).unwrap();
    // q = 11: alpha2 = 5*11*4*10, beta = 5*11*4 + 16*5 + 4
    assert_eq!(r.q, 11);
    assert_eq!(r.alpha2_bound, "2200");
    assert_eq!(r.beta, "304");
    assert_eq!(r.total_bound, (10 + 2200 * 305).to_string());
    assert_eq!(r.target, "3628800");
    assert!(r.holds);
    assert!(sophie_bound(11).unwrap().holds);
    assert!(matches!(sophie_bound(7), Err(Error::NotSophieGermain(7))));
}
