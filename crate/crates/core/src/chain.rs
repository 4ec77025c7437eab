//! Deterministic Schreier–Sims.
//!
//! Base points are chosen as the smallest point moved by the first strong
//! generator that fixes the current base, so identical generator lists always
//! produce identical chains.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    rep_of: Vec<u32>,
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            rep_of: vec![NONE; degree],
            reps: Vec::new(),
            reps_inv: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.rep_of.iter_mut().for_each(|r| *r = NONE);
        self.orbit.clear();
        self.reps.clear();
        self.reps_inv.clear();
        let id = Permutation::identity(degree);
        self.orbit.push(self.base);
        self.rep_of[self.base as usize] = 0;
        self.reps.push(id.clone());
        self.reps_inv.push(id);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            let up = self.rep_of[p as usize] as usize;
            for s in &self.gens {
                let q = s.apply(p);
                if self.rep_of[q as usize] == NONE {
                    let u = self.reps[up].mul(s);
                    self.rep_of[q as usize] = self.reps.len() as u32;
                    self.reps_inv.push(u.inverse());
                    self.reps.push(u);
                    self.orbit.push(q);
                }
            }
            head += 1;
        }
    }

    /// Coset representative mapping the base point to `p`.
    #[inline]
    pub fn rep(&self, p: u32) -> Option<&Permutation> {
        match self.rep_of[p as usize] {
            NONE => None,
            r => Some(&self.reps[r as usize]),
        }
    }

    #[inline]
    fn rep_inv_idx(&self, p: u32) -> Option<&Permutation> {
        match self.rep_of[p as usize] {
            NONE => None,
            r => Some(&self.reps_inv[r as usize]),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::trivial(degree);
        for g in gens {
            if g.is_identity() {
                continue;
            }
            let fixed = chain.fixed_prefix(g);
            if fixed == chain.levels.len() {
                let b = g.support().next().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
            for l in 0..=fixed.min(chain.levels.len() - 1) {
                chain.levels[l].gens.push(g.clone());
            }
        }
        for l in 0..chain.levels.len() {
            chain.levels[l].rebuild_orbit(degree);
        }
        chain.complete();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u128(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Strong generators of the whole group (level 0).
    pub fn strong_generators(&self) -> &[Permutation] {
        match self.levels.first() {
            Some(l) => &l.gens,
            None => &[],
        }
    }

    fn fixed_prefix(&self, g: &Permutation) -> usize {
        self.levels
            .iter()
            .take_while(|l| g.apply(l.base) == l.base)
            .count()
    }

    /// Sifts `h` starting at level `from`. Returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    fn strip_from(&self, h: &mut Vec<u32>, from: usize) -> usize {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h[level.base as usize];
            match level.rep_inv_idx(b) {
                None => return l,
                Some(inv) => {
                    let inv = inv.images();
                    for x in h.iter_mut() {
                        *x = inv[*x as usize];
                    }
                }
            }
        }
        self.levels.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let mut h = p.images().to_vec();
        let stop = self.strip_from(&mut h, 0);
        stop == self.levels.len() && is_identity(&h)
    }

    /// Adds `g` to the group if it is not already a member. Returns whether
    /// the group grew.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        if self.contains(g) {
            return false;
        }
        let fixed = self.fixed_prefix(g);
        if fixed == self.levels.len() {
            let b = g.support().next().unwrap();
            self.levels.push(Level::new(b, self.degree));
        }
        let top = fixed.min(self.levels.len() - 1);
        for l in 0..=top {
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
        self.complete();
        true
    }

    fn complete(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        let mut h = vec![0u32; degree];
        while i >= 0 {
            let l = i as usize;
            let mut restart = None;
            'scan: for oi in 0..self.levels[l].orbit.len() {
                let level = &self.levels[l];
                let b = level.orbit[oi];
                let ub = level.rep(b).unwrap().images();
                for s in &level.gens {
                    let bs = s.apply(b);
                    let ubs_inv = level.rep_inv_idx(bs).unwrap().images();
                    let si = s.images();
                    for (k, x) in h.iter_mut().enumerate() {
                        *x = ubs_inv[si[ub[k] as usize] as usize];
                    }
                    if is_identity(&h) {
                        continue;
                    }
                    let stop = self.strip_from(&mut h, l + 1);
                    if stop < self.levels.len() || !is_identity(&h) {
                        restart = Some((stop, Permutation::from_images_unchecked(h.clone())));
                        break 'scan;
                    }
                }
            }
            match restart {
                None => i -= 1,
                Some((stop, residue)) => {
                    if stop == self.levels.len() {
                        let b = residue.support().next().unwrap();
                        self.levels.push(Level::new(b, degree));
                    }
                    for m in l + 1..=stop {
                        self.levels[m].gens.push(residue.clone());
                        self.levels[m].rebuild_orbit(degree);
                    }
                    i = stop as isize;
                }
            }
        }
    }

    /// Every element exactly once (unsorted).
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for h in &out {
                for u in &level.reps {
                    next.push(h.mul(u));
                }
            }
            out = next;
        }
        out
    }
}

#[inline]
fn is_identity(h: &[u32]) -> bool {
    h.iter().enumerate().all(|(i, &j)| i as u32 == j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let cyc: Vec<u32> = (0..n as u32).collect();
            let gens = vec![
                Permutation::from_cycles(n, &[cyc]).unwrap(),
                p("(1,2)", n),
            ];
            let chain = StabChain::from_generators(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order_u128(), Some(fact));
        }
    }

    #[test]
    fn enumerate_is_complete() {
        let gens = vec![p("(1,2,3,4,5)", 5), p("(1,2,3)", 5)];
        let chain = StabChain::from_generators(5, &gens);
        let mut all = chain.enumerate();
        assert_eq!(all.len(), 60);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 60);
        assert!(all.iter().all(|g| g.is_even()));
        assert!(all.iter().all(|g| chain.contains(g)));
    }

    #[test]
    fn extend_grows_group() {
        let mut chain = StabChain::from_generators(5, &[p("(1,2,3,4,5)", 5)]);
        assert_eq!(chain.order_u128(), Some(5));
        assert!(chain.extend(&p("(1,2)", 5)));
        assert_eq!(chain.order_u128(), Some(120));
        assert!(!chain.extend(&p("(3,4)", 5)));
    }

    #[test]
    fn base_starts_at_smallest_moved_point() {
        let chain = StabChain::from_generators(6, &[p("(3,4,5)", 6), p("(4,5,6)", 6)]);
        assert_eq!(chain.base()[0], 2);
        assert_eq!(chain.order_u128(), Some(12));
    }
}
