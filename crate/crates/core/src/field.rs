//! Finite fields `F_q`, `q = p^k`, as lookup tables.
//!
//! An element is stored as its index `Σ c_i p^i`, where `c_i` is the
//! coefficient of `x^i` in the polynomial representation modulo
//! [`irreducible_poly`]. Index 0 is zero and index 1 is one.

use crate::error::{Error, Result};

/// Largest field order the catalog builds.
pub const MAX_FIELD_ORDER: u32 = 1024;

/// An element of `F_{p^k}` as a coefficient vector (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub p: u32,
    pub k: u32,
    pub coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn from_index(p: u32, k: u32, mut index: u32) -> Self {
        let mut coeffs = Vec::with_capacity(k as usize);
        for _ in 0..k {
            coeffs.push(index % p);
            index /= p;
        }
        FieldElement { p, k, coeffs }
    }

    pub fn index(&self) -> u32 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }
}

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: u32,
}

/// `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo `b` over `F_p`; `b` must be monic. Coefficients
/// are constant term first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_from_index(p: u32, k: u32, index: u32) -> Vec<u32> {
    let mut c = FieldElement::from_index(p, k, index).coeffs;
    c.push(1);
    c
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() as u32 - 1;
    for d in 1..=k / 2 {
        for index in 0..p.pow(d) {
            let g = monic_from_index(p, d, index);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible polynomial of degree `k` over `F_p`, ordered
/// by the index `Σ c_i p^i` of its lower coefficients. Coefficients are
/// returned constant term first, with the leading 1 included.
pub fn irreducible_poly(p: u32, k: u32) -> Vec<u32> {
    assert!(is_prime(p as u64) && k >= 1);
    (0..p.pow(k))
        .map(|index| monic_from_index(p, k, index))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::Unsupported(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::Unsupported(format!(
                "field order {q} above {MAX_FIELD_ORDER}"
            )));
        }
        let modulus = irreducible_poly(p, k);
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let ca = FieldElement::from_index(p, k, a).coeffs;
            for b in 0..q {
                let cb = FieldElement::from_index(p, k, b).coeffs;
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                let mut prod = vec![0; 2 * k as usize - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut rem = poly_rem(&prod, &modulus, p);
                rem.resize(k as usize, 0);
                let idx = |c: Vec<u32>| FieldElement { p, k, coeffs: c }.index();
                add[a as usize * qs + b as usize] = idx(sum);
                mul[a as usize * qs + b as usize] = idx(rem);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap()
                }
            })
            .collect();
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&a| field.mult_order(a) == q - 1)
            .expect("multiplicative group is cyclic");
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, a: u32) -> FieldElement {
        FieldElement::from_index(self.p, self.k, a)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; zero maps to zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = 1;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Least element generating the multiplicative group.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    fn mult_order(&self, a: u32) -> u32 {
        let mut acc = a;
        let mut n = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    /// The Frobenius map `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_examples() {
        assert_eq!(irreducible_poly(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(irreducible_poly(3, 3), vec![1, 2, 0, 1]);
        assert_eq!(irreducible_poly(2, 2), vec![1, 1, 1]);
    }

    #[test]
    fn field_axioms_spot_checks() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81] {
            let f = Field::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, (q - 1) as u64), 1);
                }
                for b in (0..q).step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let c = (a + b) % q;
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
            assert_eq!(f.mult_order(f.primitive()), q - 1);
        }
    }

    #[test]
    fn element_round_trip() {
        let f = Field::new(27).unwrap();
        for a in 0..27 {
            assert_eq!(f.element(a).index(), a);
        }
        assert!(Field::new(12).is_err());
    }
}
