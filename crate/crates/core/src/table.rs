//! Full element listings of enumerable groups.
//!
//! Elements are stored in lexicographic order of their image arrays. An
//! element of a group is determined by its images of the base points, so
//! index lookup only ever reads those few images.

use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::perm::{gcd, Permutation};

/// Dense lookup tables are used while `degree^base_len` stays below this.
const DENSE_LIMIT: usize = 1 << 22;

enum Lookup {
    Dense { table: Vec<u32> },
    Packed(FxHashMap<u128, u32>),
    Wide(FxHashMap<Vec<u32>, u32>),
}

pub struct ElementTable {
    degree: usize,
    base: Vec<u32>,
    flat: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    lookup: Lookup,
    identity: u32,
}

impl ElementTable {
    pub(crate) fn build(chain: &StabChain) -> Self {
        let degree = chain.degree();
        let base = chain.base();
        let mut elems = chain.enumerate();
        elems.sort_unstable();
        let n = elems.len();
        let mut flat = Vec::with_capacity(n * degree);
        for e in &elems {
            flat.extend_from_slice(e.images());
        }
        let dense_size = (degree as u128).checked_pow(base.len() as u32);
        let lookup = match dense_size {
            Some(size) if size <= DENSE_LIMIT as u128 => {
                let mut table = vec![u32::MAX; size as usize];
                for (i, e) in elems.iter().enumerate() {
                    table[dense_key(degree, &base, |b| e.apply(b))] = i as u32;
                }
                Lookup::Dense { table }
            }
            _ if base.len() * 16 <= 128 && degree <= 1 << 16 => {
                let mut map = FxHashMap::default();
                map.reserve(n);
                for (i, e) in elems.iter().enumerate() {
                    map.insert(packed_key(&base, |b| e.apply(b)), i as u32);
                }
                Lookup::Packed(map)
            }
            _ => {
                let mut map = FxHashMap::default();
                map.reserve(n);
                for (i, e) in elems.iter().enumerate() {
                    map.insert(base.iter().map(|&b| e.apply(b)).collect(), i as u32);
                }
                Lookup::Wide(map)
            }
        };
        let mut table = ElementTable {
            degree,
            base,
            flat,
            inverse: Vec::new(),
            orders: Vec::new(),
            lookup,
            identity: 0,
        };
        table.identity = table
            .index_of(&Permutation::identity(degree))
            .expect("identity is a member");
        table.inverse = (0..n as u32)
            .map(|i| table.index_of_base(|b| table.preimage(i, b)))
            .collect();
        table.orders = (0..n as u32).map(|i| table.compute_order(i)).collect();
        table
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn images(&self, i: u32) -> &[u32] {
        let s = i as usize * self.degree;
        &self.flat[s..s + self.degree]
    }

    pub fn perm(&self, i: u32) -> Permutation {
        Permutation::from_images_unchecked(self.images(i).to_vec())
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len() as u32).map(|i| self.perm(i))
    }

    fn preimage(&self, i: u32, point: u32) -> u32 {
        self.images(i).iter().position(|&x| x == point).unwrap() as u32
    }

    /// Index of the member whose base images are given by `f`. The caller
    /// guarantees that such a member exists.
    #[inline]
    pub fn index_of_base(&self, f: impl Fn(u32) -> u32) -> u32 {
        let idx = match &self.lookup {
            Lookup::Dense { table } => table[dense_key(self.degree, &self.base, f)],
            Lookup::Packed(map) => *map
                .get(&packed_key(&self.base, f))
                .expect("base images of a member"),
            Lookup::Wide(map) => {
                let key: Vec<u32> = self.base.iter().map(|&b| f(b)).collect();
                *map.get(&key).expect("base images of a member")
            }
        };
        debug_assert_ne!(idx, u32::MAX);
        idx
    }

    /// Index of `p`, or `None` if `p` is not in the group.
    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        if p.degree() != self.degree {
            return None;
        }
        let idx = match &self.lookup {
            Lookup::Dense { table } => {
                if self.base.iter().any(|&b| p.apply(b) as usize >= self.degree) {
                    return None;
                }
                table[dense_key(self.degree, &self.base, |b| p.apply(b))]
            }
            Lookup::Packed(map) => *map.get(&packed_key(&self.base, |b| p.apply(b)))?,
            Lookup::Wide(map) => {
                let key: Vec<u32> = self.base.iter().map(|&b| p.apply(b)).collect();
                *map.get(&key)?
            }
        };
        if idx == u32::MAX || self.images(idx) != p.images() {
            return None;
        }
        Some(idx)
    }

    /// Index of `e_i e_j` (apply `e_i`, then `e_j`).
    #[inline]
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        let a = self.images(i);
        let b = self.images(j);
        self.index_of_base(|p| b[a[p as usize] as usize])
    }

    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    #[inline]
    pub fn order_of(&self, i: u32) -> u32 {
        self.orders[i as usize]
    }

    /// Index of `g⁻¹ e_i g`.
    #[inline]
    pub fn conj(&self, i: u32, g: u32) -> u32 {
        let e = self.images(i);
        let gi = self.images(g);
        let ginv = self.images(self.inverse[g as usize]);
        self.index_of_base(|p| gi[e[ginv[p as usize] as usize] as usize])
    }

    /// Index of `g⁻¹ e_i g` for an arbitrary member `g` given by images.
    #[inline]
    pub fn conj_by(&self, i: u32, g: &[u32], ginv: &[u32]) -> u32 {
        let e = self.images(i);
        self.index_of_base(|p| g[e[ginv[p as usize] as usize] as usize])
    }

    pub fn pow(&self, i: u32, k: u64) -> u32 {
        let ord = self.order_of(i) as u64;
        let k = k % ord;
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, i);
        }
        acc
    }

    /// Generators of `⟨e_i⟩` other than those equal to `e_i` itself: all
    /// `e_i^k` with `1 < k < |e_i|` and `gcd(k, |e_i|) = 1`.
    pub fn coprime_powers(&self, i: u32) -> Vec<u32> {
        let ord = self.order_of(i) as u64;
        let mut out = Vec::new();
        let mut acc = i;
        for k in 2..ord {
            acc = self.mul(acc, i);
            if gcd(k, ord) == 1 {
                out.push(acc);
            }
        }
        out
    }

    fn compute_order(&self, i: u32) -> u32 {
        let mut acc = i;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    pub fn commute(&self, i: u32, j: u32) -> bool {
        self.mul(i, j) == self.mul(j, i)
    }
}

#[inline]
fn dense_key(degree: usize, base: &[u32], f: impl Fn(u32) -> u32) -> usize {
    base.iter()
        .fold(0usize, |acc, &b| acc * degree + f(b) as usize)
}

#[inline]
fn packed_key(base: &[u32], f: impl Fn(u32) -> u32) -> u128 {
    base.iter()
        .fold(0u128, |acc, &b| (acc << 16) | f(b) as u128)
}

/// Conjugacy classes of an enumerated group, with a conjugating element for
/// every member.
pub struct Classes {
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Lexicographically least member of each class, ordered by that member.
    pub reps: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    /// `conjugator[e]` is an element `g` with `rep(class(e))^g = e`.
    pub conjugator: Vec<u32>,
}

impl Classes {
    pub(crate) fn build(table: &ElementTable, gens: &[u32]) -> Self {
        let n = table.len();
        let mut class_of = vec![u32::MAX; n];
        let mut conjugator = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        // Scanning in index order makes the first unclassified element the
        // least member of its class.
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start);
            class_of[start as usize] = c;
            conjugator[start as usize] = table.identity();
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let e = orbit[head];
                for &s in gens {
                    let f = table.conj(e, s);
                    if class_of[f as usize] == u32::MAX {
                        class_of[f as usize] = c;
                        conjugator[f as usize] = table.mul(conjugator[e as usize], s);
                        orbit.push(f);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        Classes {
            class_of,
            reps,
            members,
            conjugator,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}
