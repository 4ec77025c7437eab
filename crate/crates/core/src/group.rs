//! Permutation groups given by generators, with exact order, membership and
//! the structural predicates the generation graphs are built on.

use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::predicate::{partner_set, PredicateKind};
use crate::table::{Classes, ElementTable};

/// Default ceiling on the order of groups whose elements get listed.
pub const DEFAULT_CAP: u64 = 200_000;

#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
    table: OnceLock<Arc<ElementTable>>,
    classes: OnceLock<Arc<Classes>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub orders: Vec<BigUint>,
    pub terminated: bool,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
    pub members: Vec<Permutation>,
}

/// `H × K` acting on the disjoint union of the two point sets.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: Group,
    pub left_degree: usize,
    pub right_degree: usize,
}

impl DirectProduct {
    pub fn embed_left(&self, h: &Permutation) -> Permutation {
        embed(h, 0, self.left_degree + self.right_degree)
    }

    pub fn embed_right(&self, k: &Permutation) -> Permutation {
        embed(k, self.left_degree, self.left_degree + self.right_degree)
    }

    pub fn pair(&self, h: &Permutation, k: &Permutation) -> Permutation {
        self.embed_left(h).mul(&self.embed_right(k))
    }
}

fn embed(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &j) in p.images().iter().enumerate() {
        images[offset + i] = offset as u32 + j;
    }
    Permutation::from_images_unchecked(images)
}

/// The map from a group onto its action on the right cosets of a normal
/// subgroup.
pub struct CosetMap {
    table: Arc<ElementTable>,
    coset_of: Vec<u32>,
    coset_reps: Vec<u32>,
}

impl CosetMap {
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// Coset (point of the quotient action) containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Option<u32> {
        self.table.index_of(g).map(|i| self.coset_of[i as usize])
    }

    /// The permutation induced on cosets by `g`, or `None` if `g` is not in
    /// the ambient group.
    pub fn image(&self, g: &Permutation) -> Option<Permutation> {
        let gi = self.table.index_of(g)?;
        Some(self.image_of_index(gi))
    }

    fn image_of_index(&self, gi: u32) -> Permutation {
        let images = self
            .coset_reps
            .iter()
            .map(|&r| self.coset_of[self.table.mul(r, gi) as usize])
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

impl Group {
    pub fn from_generators(gens: Vec<Permutation>) -> Result<Group> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let chain = StabChain::from_generators(degree, &gens);
        Ok(Group::from_parts(degree, gens, chain))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_parts(degree, Vec::new(), StabChain::trivial(degree))
    }

    pub(crate) fn from_parts(degree: usize, mut gens: Vec<Permutation>, chain: StabChain) -> Group {
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        Group {
            degree,
            gens,
            chain,
            table: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    fn nontrivial_gens(&self) -> impl Iterator<Item = &Permutation> {
        self.gens.iter().filter(|g| !g.is_identity())
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.chain.order_u128().and_then(|o| o.to_u64())
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    pub(crate) fn check_cap(&self, cap: u64, what: &'static str) -> Result<u64> {
        match self.order_u64() {
            Some(o) if o <= cap => Ok(o),
            _ => Err(Error::capacity(what, self.order(), cap)),
        }
    }

    /// Lexicographically sorted element table, built on first use.
    pub fn table(&self, cap: u64) -> Result<Arc<ElementTable>> {
        self.check_cap(cap, "element enumeration")?;
        Ok(self
            .table
            .get_or_init(|| Arc::new(ElementTable::build(&self.chain)))
            .clone())
    }

    pub(crate) fn classes_data(&self, cap: u64) -> Result<Arc<Classes>> {
        let table = self.table(cap)?;
        let gens = self.generator_indices(&table);
        Ok(self
            .classes
            .get_or_init(|| Arc::new(Classes::build(&table, &gens)))
            .clone())
    }

    pub(crate) fn generator_indices(&self, table: &ElementTable) -> Vec<u32> {
        self.nontrivial_gens()
            .map(|g| table.index_of(g).expect("generator is a member"))
            .collect()
    }

    /// All elements in lexicographic order of image arrays.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        Ok(self.table(cap)?.iter().collect())
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<_> = self.nontrivial_gens().collect();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Commutator subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Group {
        let gens: Vec<_> = self.nontrivial_gens().cloned().collect();
        let mut seeds = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                seeds.push(gens[i].commutator(&gens[j]));
            }
        }
        normal_closure(self.degree, &gens, seeds)
    }

    pub fn derived_series(&self) -> SeriesReport {
        let mut orders = vec![self.order()];
        let mut current = self.clone();
        loop {
            if current.is_trivial() {
                break;
            }
            let next = current.derived_subgroup();
            let o = next.order();
            let stalled = &o == orders.last().unwrap();
            orders.push(o);
            if stalled {
                break;
            }
            current = next;
        }
        let terminated = orders.last().unwrap().is_one();
        SeriesReport {
            kind: SeriesKind::Derived,
            orders,
            terminated,
        }
    }

    pub fn is_soluble(&self) -> (bool, SeriesReport) {
        let report = self.derived_series();
        (report.terminated, report)
    }

    pub fn lower_central_series(&self) -> SeriesReport {
        let ambient: Vec<_> = self.nontrivial_gens().cloned().collect();
        let mut orders = vec![self.order()];
        let mut current = self.clone();
        loop {
            if current.is_trivial() {
                break;
            }
            let mut seeds = Vec::new();
            for a in current.nontrivial_gens() {
                for s in &ambient {
                    seeds.push(a.commutator(s));
                }
            }
            let next = normal_closure(self.degree, &ambient, seeds);
            let o = next.order();
            let stalled = &o == orders.last().unwrap();
            orders.push(o);
            if stalled {
                break;
            }
            current = next;
        }
        let terminated = orders.last().unwrap().is_one();
        SeriesReport {
            kind: SeriesKind::LowerCentral,
            orders,
            terminated,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().terminated
    }

    pub fn is_metabelian(&self) -> bool {
        self.derived_subgroup().is_abelian()
    }

    /// Whether some cyclic normal subgroup has cyclic quotient. Candidates
    /// are the distinct cyclic subgroups `⟨g⟩`.
    pub fn is_metacyclic(&self, cap: u64) -> Result<bool> {
        self.check_cap(cap, "metacyclic test")?;
        if !self.is_metabelian() {
            return Ok(false);
        }
        let table = self.table(cap)?;
        let gens = self.generator_indices(&table);
        Ok(metacyclic_in_table(&table, &gens))
    }

    /// `R(G)`: the elements `x` with `⟨x, y⟩` soluble for every `y`.
    pub fn soluble_radical(&self, cap: u64) -> Result<Group> {
        let table = self.table(cap)?;
        let classes = self.classes_data(cap)?;
        let mut members = Vec::new();
        for (c, &rep) in classes.reps.iter().enumerate() {
            let cgens = centralizer_generators(&table, rep);
            let partners = partner_set(&table, rep, PredicateKind::Soluble, &cgens);
            if partners.count_ones(..) == table.len() {
                members.extend_from_slice(&classes.members[c]);
            }
        }
        members.sort_unstable();
        let radical = subgroup_from_indices(&table, &members);
        debug_assert_eq!(radical.order_u64(), Some(members.len() as u64));
        debug_assert!(radical.is_soluble().0);
        debug_assert!(self.normalizes(&radical));
        Ok(radical)
    }

    /// Whether every generator of `self` normalizes `n`.
    pub fn normalizes(&self, n: &Group) -> bool {
        self.nontrivial_gens().all(|s| {
            n.generators()
                .iter()
                .all(|a| n.chain.contains(&a.conjugate(s)))
        })
    }

    pub fn is_subgroup_of(&self, g: &Group) -> bool {
        self.degree == g.degree && self.gens.iter().all(|a| g.chain.contains(a))
    }

    /// Action on the right cosets of the normal subgroup `n`. Cosets are
    /// numbered by their least member.
    pub fn quotient_by(&self, n: &Group, cap: u64) -> Result<(Group, CosetMap)> {
        if !n.is_subgroup_of(self) || !self.normalizes(n) {
            return Err(Error::NotNormal);
        }
        let table = self.table(cap)?;
        let sub: Vec<u32> = n
            .chain
            .enumerate()
            .iter()
            .map(|e| table.index_of(e).expect("subgroup member"))
            .collect();
        let mut coset_of = vec![u32::MAX; table.len()];
        let mut coset_reps = Vec::new();
        for e in 0..table.len() as u32 {
            if coset_of[e as usize] != u32::MAX {
                continue;
            }
            let c = coset_reps.len() as u32;
            coset_reps.push(e);
            for &m in &sub {
                coset_of[table.mul(m, e) as usize] = c;
            }
        }
        let index = coset_reps.len() as u64;
        if index > cap {
            return Err(Error::capacity("quotient", index, cap));
        }
        let map = CosetMap {
            table: table.clone(),
            coset_of,
            coset_reps,
        };
        let gens: Vec<Permutation> = self
            .generator_indices(&table)
            .into_iter()
            .map(|g| map.image_of_index(g))
            .collect();
        let quotient = if gens.is_empty() {
            Group::trivial(index as usize)
        } else {
            Group::from_generators(gens)?
        };
        debug_assert!(n
            .generators()
            .iter()
            .all(|a| map.image(a).unwrap().is_identity()));
        debug_assert_eq!(quotient.order_u64(), Some(index));
        Ok((quotient, map))
    }

    pub fn direct_product(h: &Group, k: &Group) -> DirectProduct {
        let (dh, dk) = (h.degree, k.degree);
        let degree = dh + dk;
        let mut gens: Vec<Permutation> = h
            .nontrivial_gens()
            .map(|g| embed(g, 0, degree))
            .collect();
        gens.extend(k.nontrivial_gens().map(|g| embed(g, dh, degree)));
        let group = if gens.is_empty() {
            Group::trivial(degree)
        } else {
            Group::from_generators(gens).expect("degrees agree")
        };
        DirectProduct {
            group,
            left_degree: dh,
            right_degree: dk,
        }
    }

    /// `H wr S2` on two copies of the point set.
    pub fn wreath_s2(h: &Group) -> Group {
        let d = h.degree;
        let mut gens: Vec<Permutation> = h.nontrivial_gens().map(|g| embed(g, 0, 2 * d)).collect();
        let swap: Vec<u32> = (0..2 * d as u32).map(|i| (i + d as u32) % (2 * d as u32)).collect();
        gens.push(Permutation::from_images_unchecked(swap));
        Group::from_generators(gens).expect("degrees agree")
    }

    pub fn conjugacy_classes(&self, cap: u64) -> Result<Vec<ConjugacyClass>> {
        let table = self.table(cap)?;
        let classes = self.classes_data(cap)?;
        Ok(classes
            .reps
            .iter()
            .zip(&classes.members)
            .map(|(&r, m)| ConjugacyClass {
                representative: table.perm(r),
                size: m.len(),
                members: m.iter().map(|&i| table.perm(i)).collect(),
            })
            .collect())
    }

    fn member_index(&self, table: &ElementTable, x: &Permutation) -> Result<u32> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: x.degree(),
            });
        }
        table
            .index_of(x)
            .ok_or_else(|| Error::NotInGroup(x.to_cycle_string()))
    }

    /// `N_G(⟨x⟩)` by filtering all elements.
    pub fn normalizer_of_cyclic(&self, x: &Permutation, cap: u64) -> Result<Group> {
        let table = self.table(cap)?;
        let xi = self.member_index(&table, x)?;
        let members = normalizer_indices(&table, xi);
        Ok(subgroup_from_indices(&table, &members))
    }

    pub fn centralizer(&self, x: &Permutation, cap: u64) -> Result<Group> {
        let table = self.table(cap)?;
        let xi = self.member_index(&table, x)?;
        let members: Vec<u32> = (0..table.len() as u32)
            .filter(|&g| table.commute(g, xi))
            .collect();
        Ok(subgroup_from_indices(&table, &members))
    }

    /// Smallest generating set found greedily in index order.
    pub fn from_element_set(table: &ElementTable, members: &[u32]) -> Group {
        subgroup_from_indices(table, members)
    }
}

/// Normal closure of `seeds` under conjugation by `ambient`.
pub(crate) fn normal_closure(
    degree: usize,
    ambient: &[Permutation],
    seeds: Vec<Permutation>,
) -> Group {
    let mut chain = StabChain::trivial(degree);
    let mut gens = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for s in seeds {
        if chain.extend(&s) {
            gens.push(s.clone());
            queue.push_back(s);
        }
    }
    while let Some(a) = queue.pop_front() {
        for s in ambient {
            let c = a.conjugate(s);
            if chain.extend(&c) {
                gens.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    Group::from_parts(degree, gens, chain)
}

pub(crate) fn subgroup_from_indices(table: &ElementTable, members: &[u32]) -> Group {
    let degree = table.degree();
    let mut chain = StabChain::trivial(degree);
    let mut gens = Vec::new();
    for &m in members {
        let p = table.perm(m);
        if chain.extend(&p) {
            gens.push(p);
        }
    }
    Group::from_parts(degree, gens, chain)
}

pub(crate) fn cyclic_indices(table: &ElementTable, x: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(table.order_of(x) as usize);
    let mut acc = table.identity();
    loop {
        out.push(acc);
        acc = table.mul(acc, x);
        if acc == table.identity() {
            break;
        }
    }
    out
}

pub(crate) fn normalizer_indices(table: &ElementTable, x: u32) -> Vec<u32> {
    let mut cyc = FixedBitSet::with_capacity(table.len());
    for e in cyclic_indices(table, x) {
        cyc.insert(e as usize);
    }
    (0..table.len() as u32)
        .filter(|&g| cyc.contains(table.conj(x, g) as usize))
        .collect()
}

pub(crate) fn centralizer_generators(table: &ElementTable, x: u32) -> Vec<u32> {
    let mut chain = StabChain::trivial(table.degree());
    let mut gens = Vec::new();
    for g in 0..table.len() as u32 {
        if g != table.identity() && table.commute(g, x) && chain.extend(&table.perm(g)) {
            gens.push(g);
        }
    }
    gens
}

/// Metacyclic test on an enumerated group with the given generators.
pub(crate) fn metacyclic_in_table(table: &ElementTable, gens: &[u32]) -> bool {
    let n = table.len() as u32;
    if (0..n).any(|g| table.order_of(g) == n) {
        return true;
    }
    let mut seen = std::collections::HashSet::new();
    for h in 0..n {
        if h == table.identity() {
            continue;
        }
        let mut cyc = cyclic_indices(table, h);
        cyc.sort_unstable();
        if !seen.insert(cyc.clone()) {
            continue;
        }
        let mut inside = FixedBitSet::with_capacity(n as usize);
        for &e in &cyc {
            inside.insert(e as usize);
        }
        if !gens.iter().all(|&s| inside.contains(table.conj(h, s) as usize)) {
            continue;
        }
        let m = n as usize / cyc.len();
        if has_coset_of_order(table, &inside, m) {
            return true;
        }
    }
    false
}

/// Whether some `t` has `tN` of order exactly `m` in `G/N`.
fn has_coset_of_order(table: &ElementTable, normal: &FixedBitSet, m: usize) -> bool {
    (0..table.len() as u32).any(|t| {
        // the order of tN divides |t|, so only elements with m | |t| qualify
        if table.order_of(t) as usize % m != 0 {
            return false;
        }
        let mut acc = t;
        for j in 1..=m {
            if normal.contains(acc as usize) {
                return j == m;
            }
            acc = table.mul(acc, t);
        }
        false
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(gens: &[&str], n: usize) -> Group {
        Group::from_generators(gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn a5() -> Group {
        group(&["(1,2,3,4,5)", "(1,2,3)"], 5)
    }

    fn s4() -> Group {
        group(&["(1,2,3,4)", "(1,2)"], 4)
    }

    #[test]
    fn construction_and_order() {
        assert_eq!(Group::from_generators(vec![Permutation::identity(5)]).unwrap().order_u64(), Some(1));
        assert_eq!(a5().order_u64(), Some(60));
        let err = Group::from_generators(vec![p("(1,2)", 2), p("(1,2,3)", 3)]);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(g.contains(&p("(2,4,5)", 5)).unwrap());
        assert!(!g.contains(&p("(1,2)", 5)).unwrap());
        let c5 = group(&["(1,2,3,4,5)"], 5);
        assert!(c5.contains(&p("(1,3,5,2,4)", 5)).unwrap());
        assert!(c5.contains(&p("(1,2)", 4)).is_err());
    }

    #[test]
    fn elements_sorted_and_capped() {
        let g = a5();
        let els = g.elements(DEFAULT_CAP).unwrap();
        assert_eq!(els.len(), 60);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(els[0].is_identity());
        assert_eq!(Group::trivial(3).elements(10).unwrap().len(), 1);
        assert!(matches!(g.elements(59), Err(Error::Capacity { .. })));
    }

    #[test]
    fn derived_series_examples() {
        let (sol, rep) = s4().is_soluble();
        assert!(sol);
        assert_eq!(rep.orders, big(&[24, 12, 4, 1]));
        let (sol, rep) = a5().is_soluble();
        assert!(!sol);
        assert_eq!(rep.orders, big(&[60, 60]));
        assert!(Group::trivial(4).is_soluble().0);
        let s5 = group(&["(1,2,3,4,5)", "(1,2)"], 5);
        assert_eq!(s5.derived_subgroup().order_u64(), Some(60));
        assert_eq!(a5().derived_subgroup().order_u64(), Some(60));
        assert!(group(&["(1,2,3,4,5,6)"], 6).derived_subgroup().is_trivial());
    }

    #[test]
    fn derived_subgroup_is_normal() {
        let s5 = group(&["(1,2,3,4,5)", "(1,2)"], 5);
        assert!(s5.normalizes(&s5.derived_subgroup()));
    }

    #[test]
    fn nilpotency() {
        let d8 = group(&["(1,2,3,4)", "(1,3)"], 4);
        assert!(d8.is_nilpotent());
        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        assert!(!s3.is_nilpotent());
        let a4 = group(&["(1,2,3)", "(2,3,4)"], 4);
        assert!(!a4.is_nilpotent());
        assert_eq!(a4.lower_central_series().orders, big(&[12, 4, 4]));
    }

    fn q8() -> Group {
        // regular representation of the quaternion group
        group(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8)
    }

    #[test]
    fn metabelian_and_metacyclic() {
        assert!(!s4().is_metabelian());
        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        assert!(s3.is_metabelian());
        assert_eq!(q8().order_u64(), Some(8));
        assert!(q8().is_metabelian());
        let d10 = group(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5);
        assert!(d10.is_metacyclic(DEFAULT_CAP).unwrap());
        let e8 = group(&["(1,2)", "(3,4)", "(5,6)"], 6);
        assert!(!e8.is_metacyclic(DEFAULT_CAP).unwrap());
        assert!(q8().is_metacyclic(DEFAULT_CAP).unwrap());
        assert!(!s4().is_metacyclic(DEFAULT_CAP).unwrap());
    }

    #[test]
    fn radicals() {
        assert!(a5().soluble_radical(DEFAULT_CAP).unwrap().is_trivial());
        assert_eq!(s4().soluble_radical(DEFAULT_CAP).unwrap().order_u64(), Some(24));
    }

    #[test]
    fn quotient_s4_by_klein() {
        let g = s4();
        let v4 = group(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        let (q, map) = g.quotient_by(&v4, DEFAULT_CAP).unwrap();
        assert_eq!(q.order_u64(), Some(6));
        assert_eq!(q.degree(), 6);
        assert!(!q.is_abelian());
        assert_eq!(map.index(), 6);
        assert!(map.image(&p("(1,2)(3,4)", 4)).unwrap().is_identity());
        let not_normal = group(&["(1,2)"], 4);
        assert!(matches!(g.quotient_by(&not_normal, DEFAULT_CAP), Err(Error::NotNormal)));
        let (reg, _) = g.quotient_by(&Group::trivial(4), DEFAULT_CAP).unwrap();
        assert_eq!(reg.order_u64(), Some(24));
        assert_eq!(reg.degree(), 24);
    }

    #[test]
    fn products() {
        let pr = Group::direct_product(&a5(), &a5());
        assert_eq!(pr.group.order_u64(), Some(3600));
        let t = Group::direct_product(&Group::trivial(2), &s4());
        assert_eq!(t.group.order_u64(), Some(24));
        let s3 = group(&["(1,2,3)", "(1,2)"], 3);
        let w = Group::wreath_s2(&s3);
        assert_eq!(w.order_u64(), Some(72));
        let base = Group::direct_product(&s3, &s3).group;
        assert!(base.is_subgroup_of(&w));
        assert_eq!(Group::wreath_s2(&Group::trivial(1)).order_u64(), Some(2));
        assert_eq!(Group::wreath_s2(&a5()).order_u64(), Some(7200));
    }

    #[test]
    fn classes_of_a5_and_s5() {
        let classes = a5().conjugacy_classes(DEFAULT_CAP).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        for c in &classes {
            assert_eq!(&c.representative, c.members.iter().min().unwrap());
        }
        let s5 = group(&["(1,2,3,4,5)", "(1,2)"], 5);
        assert_eq!(s5.conjugacy_classes(DEFAULT_CAP).unwrap().len(), 7);
        let c6 = group(&["(1,2,3,4,5,6)"], 6);
        assert!(c6.conjugacy_classes(DEFAULT_CAP).unwrap().iter().all(|c| c.size == 1));
    }

    #[test]
    fn normalizers() {
        let n = a5().normalizer_of_cyclic(&p("(1,2,3,4,5)", 5), DEFAULT_CAP).unwrap();
        assert_eq!(n.order_u64(), Some(10));
        let s7 = group(&["(1,2,3,4,5,6,7)", "(1,2)"], 7);
        let n = s7.normalizer_of_cyclic(&p("(1,2,3,4,5,6,7)", 7), DEFAULT_CAP).unwrap();
        assert_eq!(n.order_u64(), Some(42));
        let c = s7.centralizer(&p("(1,2,3,4,5,6,7)", 7), DEFAULT_CAP).unwrap();
        assert!(c.is_subgroup_of(&n));
        let c6 = group(&["(1,2,3,4,5,6)"], 6);
        let n = c6.normalizer_of_cyclic(&p("(1,3,5)(2,4,6)", 6), DEFAULT_CAP).unwrap();
        assert_eq!(n.order_u64(), Some(6));
    }
}
