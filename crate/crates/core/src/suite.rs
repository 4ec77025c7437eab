//! Tiered acceptance checks shared by the `suite` command and the
//! `acceptance` test target.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::build_str;
use crate::certs::{
    base_two_search, default_base_subgroup, find_lb3, find_lb4, involution_distance_report,
    sophie_bound, sophie_certificate, verify, Certificate, Outcome, Search, Witness,
    SOPHIE_GERMAIN_PRIMES,
};
use crate::error::{Error, Result};
use crate::graph::{Dist, GraphView};
use crate::group::DEFAULT_CAP;
use crate::intgraph::{dual_pair_check, enumerate_subgroups, soluble_intersection_graph};
use crate::oracle;
use crate::predicate::PredicateKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Medium,
    Slow,
}

impl Tier {
    /// Largest group order the tier works with.
    pub fn ceiling(self) -> u64 {
        match self {
            Tier::Fast => 2520,
            Tier::Medium => 11232,
            Tier::Slow => 100_000,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tier::Fast => "fast",
            Tier::Medium => "medium",
            Tier::Slow => "slow",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tier> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fast" => Ok(Tier::Fast),
            "medium" => Ok(Tier::Medium),
            "slow" => Ok(Tier::Slow),
            _ => Err(Error::Unsupported(format!("tier {s:?} (expected fast, medium or slow)"))),
        }
    }
}

pub struct Criterion {
    pub id: u32,
    /// Lowest tier that runs the criterion. Parts needing larger groups only
    /// run at higher tiers.
    pub tier: Tier,
    pub title: &'static str,
    check: fn(Tier) -> Result<Check>,
}

/// Outcome of a criterion's checks: failures collected as messages.
#[derive(Default)]
struct Check {
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub tier: Tier,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} ({}) {}: {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.tier,
            self.title,
            self.detail,
            self.seconds
        )
    }
}

fn view(spec: &str) -> Result<GraphView> {
    view_of(spec, PredicateKind::Soluble)
}

fn view_of(spec: &str, kind: PredicateKind) -> Result<GraphView> {
    GraphView::new(&build_str(spec)?, kind, DEFAULT_CAP)
}

fn check_diameters(c: &mut Check, cases: &[(&str, u32)]) -> Result<()> {
    for &(spec, expected) in cases {
        let d = view(spec)?.diameter();
        c.expect(d == Dist::Finite(expected), format!("{spec}={d}"));
    }
    Ok(())
}

fn small_table(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    check_diameters(
        &mut c,
        &[
            ("A(5)", 2),
            ("S(5)", 2),
            ("PGL2(9)", 2),
            ("PGammaL2_9", 2),
            ("A(6)", 3),
            ("S(6)", 3),
            ("M10", 3),
        ],
    )?;
    Ok(c)
}

/// 2 when `PGL2(q) ≤ G` (always for even `q`) or `q ∈ {5, 7}`, else 3.
fn psl2_expected(q: u32, pgl: bool) -> u32 {
    if pgl || q % 2 == 0 || q == 5 || q == 7 {
        2
    } else {
        3
    }
}

fn linear_family(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    for q in [5, 7, 8, 9, 11, 13] {
        check_diameters(
            &mut c,
            &[
                (&format!("PSL2({q})"), psl2_expected(q, false)),
                (&format!("PGL2({q})"), psl2_expected(q, true)),
            ],
        )?;
    }
    Ok(c)
}

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn small_groups(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    check_diameters(&mut c, &[("A(7)", 3)])?;
    for q in [5, 7, 8, 9, 11, 13] {
        check_diameters(&mut c, &[(&format!("PSL2({q})"), psl2_expected(q, false))])?;
    }
    let path = data_file("l3_3_2.gens");
    if path.exists() {
        let spec = format!("file:{}", path.display());
        let d = view(&spec)?.diameter();
        c.expect(d == Dist::Finite(2), format!("L3(3).2={d}"));
    } else {
        c.note("L3(3).2 skipped (no generator file)");
    }
    Ok(c)
}

fn mathieu(tier: Tier) -> Result<Check> {
    let mut c = Check::default();
    check_diameters(&mut c, &[("M11", 3)])?;
    if tier >= Tier::Slow {
        let v = view("M12")?;
        let d = v.diameter();
        c.expect(d == Dist::Finite(4), format!("M12={d}"));
        let out = find_lb4(&v, "M12", Search::Random { seed: 1, budget: 1000 })?;
        match out.certificate() {
            Some(cert) => c.expect(verify(cert)?, "M12 lb4 certificate verified"),
            None => c.expect(false, "M12 lb4 certificate found"),
        }
    } else {
        c.note("M12 needs the slow tier");
    }
    Ok(c)
}

fn radical_quotient(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    let sl = build_str("SL2(5)")?;
    let radical = sl.soluble_radical(DEFAULT_CAP)?;
    c.expect(radical.order_u64() == Some(2), format!("|R(SL2(5))|={}", radical.order()));
    let full = GraphView::new(&sl, PredicateKind::Soluble, DEFAULT_CAP)?.diameter();
    let quotient = view("radquot(SL2(5))")?.diameter();
    let a5 = view("A(5)")?.diameter();
    c.expect(
        full == Dist::Finite(2) && quotient == Dist::Finite(2) && a5 == Dist::Finite(2),
        format!("SL2(5)={full} quotient={quotient} A5={a5}"),
    );
    Ok(c)
}

fn involutions(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    for spec in ["A(5)", "A(6)", "A(7)", "S(5)", "S(6)", "S(7)", "PSL2(7)", "PSL2(8)", "PSL2(11)", "M11"] {
        let v = view(spec)?;
        let worst = v
            .involution_distances()?
            .into_iter()
            .map(|(_, d)| d.map_or(Dist::Infinite, Dist::Finite))
            .max()
            .unwrap_or(Dist::Finite(0));
        let report = involution_distance_report(&v, spec)?;
        let checked = verify(&report)?;
        c.expect(worst <= Dist::Finite(2) && checked, format!("{spec}:{worst}"));
    }
    Ok(c)
}

fn component_census(spec: &str, kind: PredicateKind) -> Result<(usize, Vec<usize>)> {
    let v = view_of(spec, kind)?;
    let sizes = v.components().iter().map(|c| c.len()).collect();
    Ok((v.vertex_count(), sizes))
}

fn variant_components(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    let (_, a4) = component_census("A(4)", PredicateKind::Nilpotent)?;
    c.expect(a4 == [3, 2, 2, 2, 2], format!("A4 nilpotent components {a4:?}"));
    let (n, sl) = component_census("SL2(3)", PredicateKind::Metabelian)?;
    c.expect(n == 22 && sl.len() == 5, format!("SL2(3) metabelian {n} vertices, components {sl:?}"));
    Ok(c)
}

fn metacyclic(tier: Tier) -> Result<Check> {
    let mut c = Check::default();
    for spec in ["A(5)", "A(6)", "PSL2(7)", "PSL2(8)"] {
        let (_, sizes) = component_census(spec, PredicateKind::Metacyclic)?;
        c.expect(sizes.len() == 1, format!("{spec} components={}", sizes.len()));
    }
    if tier >= Tier::Slow {
        let (n, sizes) = component_census("PSL2(27)", PredicateKind::Metacyclic)?;
        c.expect(sizes.len() > 1, format!("L2(27) {n} vertices, {} components", sizes.len()));
        let small: Vec<usize> = sizes[1..].to_vec();
        c.note(format!(
            "census: largest {}, then {} of sizes {:?}; the remark's 28*3+743={} does not add up to {}",
            sizes[0],
            small.len(),
            small.iter().copied().collect::<std::collections::BTreeSet<_>>(),
            28 * 3 + 743,
            n
        ));
    } else {
        c.note("L2(27) needs the slow tier");
    }
    Ok(c)
}

fn cograph(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    for spec in ["A(5)", "A(6)", "PSL2(7)"] {
        let v = view(spec)?;
        let witness = v.induced_p4(5000)?;
        let ok = witness.is_some_and(|w| {
            let p: Vec<_> = w.iter().map(|&e| v.table().perm(e)).collect();
            (0..4).all(|i| {
                (i + 1..4).all(|j| p[i] != p[j] && PredicateKind::Soluble.holds(&p[i], &p[j]) == (j == i + 1))
            })
        });
        let co = v.complement_diameter(5000)?;
        c.expect(ok && co == Dist::Finite(2), format!("{spec}: P4 witness, complement diameter {co}"));
    }
    Ok(c)
}

fn intersection_graph(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    let a5 = build_str("A(5)")?;
    let subs = enumerate_subgroups(&a5, DEFAULT_CAP)?;
    let int = soluble_intersection_graph(&subs)?;
    let d = int.graph.diameter();
    c.expect(
        int.vertices.len() == 57 && d <= Dist::Finite(6),
        format!("Int_S(A5) {} vertices, diameter {d}", int.vertices.len()),
    );
    for spec in ["A(5)", "A(6)", "PSL2(7)"] {
        let r = dual_pair_check(&build_str(spec)?, DEFAULT_CAP)?;
        c.expect(
            r.holds,
            format!(
                "{spec}: diameters {}/{}, components {}/{}",
                r.soluble_graph_diameter,
                r.intersection_graph_diameter,
                r.soluble_graph_components,
                r.intersection_graph_components
            ),
        );
    }
    Ok(c)
}

fn sophie(_: Tier) -> Result<Check> {
    let mut c = Check::default();
    let mut held = 0;
    for p in SOPHIE_GERMAIN_PRIMES {
        let r = sophie_bound(p)?;
        let cert = sophie_certificate(p)?;
        if r.holds && verify(&cert)? {
            held += 1;
        } else {
            c.expect(false, format!("p={p}"));
        }
    }
    c.expect(held == SOPHIE_GERMAIN_PRIMES.len(), format!("{held} primes up to 191"));
    for p in [7, 13] {
        c.expect(
            matches!(sophie_bound(p), Err(Error::NotSophieGermain(_))),
            format!("p={p} rejected"),
        );
    }
    Ok(c)
}

/// Copies of `cert` that must not verify.
fn tampered(cert: &Certificate, identity: &str) -> Vec<Certificate> {
    let mut out = Vec::new();
    let mut stale = cert.clone();
    stale.format_version += 1;
    out.push(stale);
    match &cert.witness {
        Witness::Pair(w) => {
            let mut a = cert.clone();
            if let Witness::Pair(t) = &mut a.witness {
                t.conjugator = identity.to_string();
            }
            out.push(a);
            let mut b = cert.clone();
            if let Witness::Pair(t) = &mut b.witness {
                t.conjugator = identity.to_string();
                t.y = w.x.clone();
            }
            out.push(b);
        }
        Witness::Base(_) => {
            let mut a = cert.clone();
            if let Witness::Base(t) = &mut a.witness {
                t.conjugator = identity.to_string();
            }
            out.push(a);
            let mut b = cert.clone();
            if let Witness::Base(t) = &mut b.witness {
                t.subgroup_order += 1;
            }
            out.push(b);
        }
        _ => {}
    }
    out
}

fn certificate_soundness(tier: Tier) -> Result<Check> {
    let mut c = Check::default();
    let lb3_groups = ["A(6)", "S(6)", "M10", "A(7)", "PSL2(11)", "PSL2(13)", "M11"];
    // groups where |H|^2 < |G| for the default subgroup H, so a base of size 2 can exist
    let base_groups = ["A(6)", "S(6)", "M10", "A(7)", "M11", "PSL2(25)"];
    let lb3_views: Vec<GraphView> = lb3_groups.iter().map(|s| view(s)).collect::<Result<_>>()?;
    let m12 = if tier >= Tier::Slow { Some(view("M12")?) } else { None };
    let (mut runs, mut verified, mut rejected, mut tampers) = (0, 0, 0, 0);
    for seed in 0..100u64 {
        let search = Search::Random { seed, budget: 1000 };
        let (spec, out) = match (seed % 10, &m12) {
            (0, Some(v)) if seed == 0 => ("M12", find_lb4(v, "M12", search)?),
            (0..=4, _) => {
                let i = seed as usize % lb3_groups.len();
                (lb3_groups[i], find_lb3(&lb3_views[i], lb3_groups[i], search)?)
            }
            _ => {
                let spec = base_groups[seed as usize % base_groups.len()];
                let g = build_str(spec)?;
                let h = default_base_subgroup(&g)?;
                (spec, base_two_search(&g, &h, spec, seed, 1000)?)
            }
        };
        runs += 1;
        let Outcome::Found(cert) = out else {
            c.expect(false, format!("seed {seed} on {spec}: nothing found"));
            continue;
        };
        if verify(&cert)? {
            verified += 1;
        } else {
            c.expect(false, format!("seed {seed} on {spec}: did not verify"));
        }
        let back = Certificate::from_json(&cert.to_json())?;
        if back != cert {
            c.expect(false, format!("seed {seed} on {spec}: JSON round trip changed the certificate"));
        }
        let identity = crate::perm::Permutation::identity(build_str(spec)?.degree()).to_cycle_string();
        for bad in tampered(&cert, &identity) {
            tampers += 1;
            if !verify(&bad).unwrap_or(false) {
                rejected += 1;
            } else {
                c.expect(false, format!("seed {seed} on {spec}: tampered copy verified"));
            }
        }
    }
    c.notes.clear();
    c.note(format!("{verified}/{runs} verified, {rejected}/{tampers} tampered rejected"));
    if m12.is_none() {
        c.note("the lb4 run on M12 needs the slow tier");
    }
    Ok(c)
}

fn oracle_agreement(tier: Tier) -> Result<Check> {
    let mut c = Check::default();
    let graphs = [
        "A(5)", "S(5)", "SL2(5)", "PSL2(7)", "PGL2(7)", "PSL2(8)", "PSL2(11)", "A(6)", "S(6)",
        "PGL2(9)", "M10", "PGammaL2_9", "PSL2(13)", "PGL2(11)", "PGL2(13)", "A(7)",
    ];
    let mut agreed = 0;
    for spec in graphs {
        let g = build_str(spec)?;
        if g.order_u64().is_none_or(|o| o > tier.ceiling().min(2520)) {
            continue;
        }
        let v = GraphView::new(&g, PredicateKind::Soluble, DEFAULT_CAP)?;
        let naive = oracle::graph_summary(&oracle::closure(g.degree(), g.generators()), PredicateKind::Soluble);
        let fast = oracle::GraphSummary {
            vertices: v.vertex_count(),
            components: v.components().len(),
            diameter: v.diameter(),
        };
        if naive == fast {
            agreed += 1;
        } else {
            c.expect(false, format!("{spec}: {fast:?} vs brute force {naive:?}"));
        }
    }
    c.note(format!("{agreed} diameters agree"));
    let soluble_checks = [
        "S(3)", "A(4)", "S(4)", "SL2(3)", "A(5)", "S(5)", "SL2(5)", "PSL2(7)", "PSL2(8)", "A(6)",
        "PSL2(11)", "PGL2(7)", "M10", "PSL2(13)", "PGL2(11)", "PGammaL2_9",
    ];
    let mut same = 0;
    for spec in soluble_checks {
        let g = build_str(spec)?;
        if g.order_u64().is_none_or(|o| o > 2000) {
            continue;
        }
        let naive = oracle::is_soluble(&oracle::closure(g.degree(), g.generators()));
        if naive == g.is_soluble().0 {
            same += 1;
        } else {
            c.expect(false, format!("{spec}: solubility disagrees"));
        }
    }
    c.note(format!("{same} solubility tests agree"));
    Ok(c)
}

pub fn criteria() -> Vec<Criterion> {
    let list: [(u32, Tier, &'static str, fn(Tier) -> Result<Check>); 13] = [
        (1, Tier::Fast, "degree-10 almost simple diameters", small_table),
        (2, Tier::Medium, "L2(q) and PGL2(q) diameters, q <= 13", linear_family),
        (3, Tier::Medium, "groups below |M12|", small_groups),
        (4, Tier::Medium, "Mathieu diameters", mathieu),
        (5, Tier::Fast, "diameter through the soluble radical quotient", radical_quotient),
        (6, Tier::Medium, "involution distance at most 2", involutions),
        (7, Tier::Fast, "nilpotent and metabelian component counts", variant_components),
        (8, Tier::Fast, "metacyclic graph connectivity", metacyclic),
        (9, Tier::Fast, "cograph test and insoluble graph diameter", cograph),
        (10, Tier::Fast, "soluble intersection graph and dual pair", intersection_graph),
        (11, Tier::Fast, "Sophie Germain counting bound", sophie),
        (12, Tier::Fast, "certificate soundness", certificate_soundness),
        (13, Tier::Fast, "brute-force oracle agreement", oracle_agreement),
    ];
    list.into_iter()
        .map(|(id, tier, title, check)| Criterion { id, tier, title, check })
        .collect()
}

impl Criterion {
    pub fn run(&self, tier: Tier) -> CriterionReport {
        let start = Instant::now();
        let (passed, detail) = match (self.check)(tier) {
            Ok(c) => {
                let mut parts = c.failures.iter().map(|f| format!("FAILED {f}")).collect::<Vec<_>>();
                parts.extend(c.notes);
                (c.failures.is_empty(), parts.join("; "))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        CriterionReport {
            id: self.id,
            tier: self.tier,
            title: self.title.to_string(),
            passed,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Runs every criterion whose tier is at most `tier`, calling `each` as
/// reports come in.
pub fn run(tier: Tier, mut each: impl FnMut(&CriterionReport)) -> Vec<CriterionReport> {
    criteria()
        .iter()
        .filter(|c| c.tier <= tier)
        .map(|c| {
            let r = c.run(tier);
            each(&r);
            r
        })
        .collect()
}
