//! Permutations of `{0, …, n-1}` stored as image arrays.
//!
//! Products are read left to right: `p.mul(&q)` applies `p` first, then `q`,
//! so `i^(pq) = (i^p)^q`. Conjugation follows the same convention,
//! `x^g = g⁻¹ x g`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image array {:?} is not a bijection",
                    images
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint (or not) cycles; cycles are
    /// applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for c in cycles {
            let mut seen = std::collections::HashSet::new();
            for &pt in c {
                if pt as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {}",
                        pt + 1,
                        degree
                    )));
                }
                if !seen.insert(pt) {
                    return Err(Error::InvalidPermutation(format!(
                        "repeated point {} in cycle",
                        pt + 1
                    )));
                }
            }
            let mut cyc = Permutation::identity(degree);
            for (k, &pt) in c.iter().enumerate() {
                cyc.images[pt as usize] = c[(k + 1) % c.len()];
            }
            p = p.mul(&cyc);
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[j as usize];
        }
        Permutation { images: out }
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .mul(&other.inverse())
            .mul(self)
            .mul(other)
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut j = self.images[start] as usize;
            while j != start {
                seen[j] = true;
                cyc.push(j as u32);
                j = self.images[j] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// 1-based disjoint-cycle notation, e.g. `(1,2,3)(4,5)`; `()` for the
    /// identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }

    /// Parses 1-based cycle notation. Cycles must be disjoint.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        let mut used = std::collections::HashSet::new();
        for c in &cycles {
            for &p in c {
                if !used.insert(p) {
                    return Err(Error::InvalidPermutation(format!("repeated point {}", p + 1)));
                }
            }
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

/// Parses `(a,b,c)(d,e)` into 0-based cycles, without degree checks.
/// Repeated points inside a single cycle are rejected.
pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let bad = |msg: String| Error::InvalidPermutation(msg);
    let mut cycles = Vec::new();
    let mut chars = text.char_indices().peekable();
    loop {
        while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
            chars.next();
        }
        let Some((pos, c)) = chars.next() else { break };
        if c != '(' {
            return Err(bad(format!("expected '(' at offset {pos}, found {c:?}")));
        }
        let mut body = String::new();
        let mut closed = false;
        for (_, c) in chars.by_ref() {
            match c {
                ')' => {
                    closed = true;
                    break;
                }
                '(' => return Err(bad("unbalanced parentheses".into())),
                _ => body.push(c),
            }
        }
        if !closed {
            return Err(bad("unbalanced parentheses".into()));
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let mut cyc = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let v: u32 = tok
                .parse()
                .map_err(|_| bad(format!("bad point {tok:?}")))?;
            if v == 0 {
                return Err(bad("points are 1-based".into()));
            }
            if cyc.contains(&(v - 1)) {
                return Err(bad(format!("repeated point {v}")));
            }
            cyc.push(v - 1);
        }
        cycles.push(cyc);
    }
    Ok(cycles)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_string_round_trip() {
        let p = Permutation::parse_cycles("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_cycle_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(4).to_cycle_string(), "()");
    }

    #[test]
    fn product_is_left_to_right() {
        let a = Permutation::parse_cycles("(1,2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).to_cycle_string(), "(1,3,2)");
    }

    #[test]
    fn conjugate_matches_definition() {
        let x = Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap();
        let g = Permutation::parse_cycles("(1,2)(3,4)", 5).unwrap();
        assert_eq!(x.conjugate(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn rejects_repeated_points() {
        assert!(Permutation::parse_cycles("(1,2,2)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let p = Permutation::parse_cycles("(1,4,2)(3,5,6,7)", 7).unwrap();
        assert!(p.mul(&p.inverse()).is_identity());
        assert_eq!(p.pow(12), Permutation::identity(7));
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(5), p.mul(&p).mul(&p).mul(&p).mul(&p));
    }
}
