//! Group families used as graph predicates, evaluated on 2-generated
//! subgroups `⟨x, y⟩`.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::chain::StabChain;
use crate::error::Error;
use crate::group::{metacyclic_in_table, normal_closure, Group, DEFAULT_CAP};
use crate::perm::Permutation;
use crate::table::ElementTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredicateKind {
    Soluble,
    Abelian,
    Nilpotent,
    Metabelian,
    Metacyclic,
}

impl PredicateKind {
    pub const ALL: [PredicateKind; 5] = [
        PredicateKind::Soluble,
        PredicateKind::Abelian,
        PredicateKind::Nilpotent,
        PredicateKind::Metabelian,
        PredicateKind::Metacyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredicateKind::Soluble => "soluble",
            PredicateKind::Abelian => "abelian",
            PredicateKind::Nilpotent => "nilpotent",
            PredicateKind::Metabelian => "metabelian",
            PredicateKind::Metacyclic => "metacyclic",
        }
    }

    /// Whether `⟨x, y⟩` lies in the family.
    pub fn holds(self, x: &Permutation, y: &Permutation) -> bool {
        if x.mul(y) == y.mul(x) {
            // abelian groups belong to every family here
            return true;
        }
        match self {
            PredicateKind::Abelian => false,
            PredicateKind::Soluble => soluble_pair(x, y),
            PredicateKind::Nilpotent => pair_group(x, y).is_nilpotent(),
            PredicateKind::Metabelian => metabelian_pair(x, y),
            PredicateKind::Metacyclic => {
                if !metabelian_pair(x, y) {
                    return false;
                }
                let h = pair_group(x, y);
                let table = h.table(DEFAULT_CAP).expect("metabelian 2-generated subgroup within cap");
                let gens = h.generator_indices(&table);
                metacyclic_in_table(&table, &gens)
            }
        }
    }

    /// Whether a whole group lies in the family.
    pub fn holds_for_group(self, g: &Group) -> bool {
        match self {
            PredicateKind::Soluble => g.is_soluble().0,
            PredicateKind::Abelian => g.is_abelian(),
            PredicateKind::Nilpotent => g.is_nilpotent(),
            PredicateKind::Metabelian => g.is_metabelian(),
            PredicateKind::Metacyclic => g.is_metacyclic(DEFAULT_CAP).unwrap_or(false),
        }
    }
}

impl fmt::Display for PredicateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PredicateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PredicateKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unsupported(format!("predicate kind {s:?}")))
    }
}

fn pair_group(x: &Permutation, y: &Permutation) -> Group {
    Group::from_generators(vec![x.clone(), y.clone()]).expect("same degree")
}

fn distinct_prime_factors(mut n: u128) -> usize {
    let mut count = 0;
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            count += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Derived series of `⟨x, y⟩`. Orders below 60, orders with at most two
/// prime divisors (Burnside) and odd orders (Feit–Thompson) are soluble
/// outright.
pub(crate) fn soluble_pair(x: &Permutation, y: &Permutation) -> bool {
    let degree = x.degree();
    let chain = StabChain::from_generators(degree, &[x.clone(), y.clone()]);
    let order = chain.order_u128().expect("2-generated subgroup order fits in u128");
    if order < 60 || order % 2 == 1 || distinct_prime_factors(order) <= 2 {
        return true;
    }
    // ⟨x,y⟩' is the normal closure of [x,y]
    let mut current = normal_closure(degree, &[x.clone(), y.clone()], vec![x.commutator(y)]);
    loop {
        let o = current.order_u64().unwrap() as u128;
        if o < 60 || o % 2 == 1 || distinct_prime_factors(o) <= 2 {
            return true;
        }
        let next = current.derived_subgroup();
        if next.order_u64().unwrap() as u128 == o {
            return false;
        }
        current = next;
    }
}

fn metabelian_pair(x: &Permutation, y: &Permutation) -> bool {
    normal_closure(x.degree(), &[x.clone(), y.clone()], vec![x.commutator(y)]).is_abelian()
}

/// `{y : F(⟨x, y⟩)}` over every element of an enumerated group, as a bitset
/// on element indices.
///
/// One representative per orbit is tested. The orbits are those of the maps
/// `y ↦ xy`, `y ↦ yx`, `y ↦ y^k` (`k` prime to `|y|`) and conjugation by
/// `C_G(x)`; each preserves `⟨x, y⟩` up to conjugacy.
pub fn partner_set(
    table: &ElementTable,
    x: u32,
    kind: PredicateKind,
    centralizer_gens: &[u32],
) -> FixedBitSet {
    let n = table.len();
    let mut decided = FixedBitSet::with_capacity(n);
    let mut result = FixedBitSet::with_capacity(n);
    let xp = table.perm(x);
    let mut stack = Vec::new();
    for y in 0..n as u32 {
        if decided.contains(y as usize) {
            continue;
        }
        let value = kind.holds(&xp, &table.perm(y));
        decided.insert(y as usize);
        stack.push(y);
        while let Some(z) = stack.pop() {
            if value {
                result.insert(z as usize);
            }
            let push = |w: u32, decided: &mut FixedBitSet, stack: &mut Vec<u32>| {
                if !decided.put(w as usize) {
                    stack.push(w);
                }
            };
            push(table.mul(x, z), &mut decided, &mut stack);
            push(table.mul(z, x), &mut decided, &mut stack);
            for &c in centralizer_gens {
                push(table.conj(z, c), &mut decided, &mut stack);
            }
            for w in table.coprime_powers(z) {
                push(w, &mut decided, &mut stack);
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn pair_predicates_in_a5() {
        let x = p("(1,2,3,4,5)", 5);
        let y = p("(1,2,3)", 5);
        assert!(!PredicateKind::Soluble.holds(&x, &y));
        let inv = p("(2,5)(3,4)", 5);
        assert!(PredicateKind::Soluble.holds(&x, &inv));
        assert!(PredicateKind::Metacyclic.holds(&x, &inv));
        assert!(!PredicateKind::Nilpotent.holds(&x, &inv));
        assert!(PredicateKind::Abelian.holds(&x, &x.pow(2)));
    }

    #[test]
    fn pair_predicates_agree_with_group_predicates() {
        let gens = [
            p("(1,2,3,4,5,6)", 6),
            p("(1,2)", 6),
            p("(1,2,3)(4,5)", 6),
            p("(1,4)(2,5)(3,6)", 6),
            p("(1,3,5)", 6),
            p("(2,3,4,5)", 6),
        ];
        for a in &gens {
            for b in &gens {
                let h = Group::from_generators(vec![a.clone(), b.clone()]).unwrap();
                for kind in PredicateKind::ALL {
                    assert_eq!(kind.holds(a, b), kind.holds_for_group(&h), "{kind} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Soluble".parse::<PredicateKind>().unwrap(), PredicateKind::Soluble);
        assert!("supersoluble".parse::<PredicateKind>().is_err());
    }
}
