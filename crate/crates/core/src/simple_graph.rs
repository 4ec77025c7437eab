//! Small dense graphs on `0..n` with bitset adjacency rows.

use fixedbitset::FixedBitSet;

use crate::graph::Dist;

#[derive(Clone, Debug)]
pub struct SimpleGraph {
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, a: usize) -> &FixedBitSet {
        &self.rows[a]
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.len();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut c = r.clone();
                c.toggle_range(..);
                c.set(i, false);
                c
            })
            .collect();
        debug_assert_eq!(n, self.len());
        SimpleGraph { rows }
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances(&self, s: usize) -> Vec<Option<u32>> {
        let n = self.len();
        let mut dist = vec![None; n];
        let mut unseen = FixedBitSet::with_capacity(n);
        unseen.insert_range(..);
        unseen.set(s, false);
        dist[s] = Some(0);
        let mut frontier = vec![s];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut reach = FixedBitSet::with_capacity(n);
            for &v in &frontier {
                reach.union_with(&self.rows[v]);
            }
            reach.intersect_with(&unseen);
            unseen.difference_with(&reach);
            frontier = reach.ones().collect();
            for &v in &frontier {
                dist[v] = Some(d);
            }
        }
        dist
    }

    pub fn eccentricity(&self, s: usize) -> Dist {
        self.distances(s)
            .into_iter()
            .try_fold(0, |m, d| d.map(|d| m.max(d)))
            .map_or(Dist::Infinite, Dist::Finite)
    }

    /// Largest eccentricity over `sources`. When every vertex is in the orbit
    /// of some source under automorphisms, this is the diameter.
    pub fn diameter_from(&self, sources: impl IntoIterator<Item = usize>) -> Dist {
        sources
            .into_iter()
            .map(|s| self.eccentricity(s))
            .max()
            .unwrap_or(Dist::Finite(0))
    }

    pub fn diameter(&self) -> Dist {
        self.diameter_from(0..self.len())
    }

    /// Components sorted by decreasing size, then least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let comp: Vec<usize> = self
                .distances(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &comp {
                seen.insert(v);
            }
            out.push(comp);
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        out
    }

    /// An induced path `a - b - c - d` whose second vertex is one of
    /// `middles`, searched in index order.
    pub fn find_induced_p4_from(
        &self,
        middles: impl IntoIterator<Item = usize>,
    ) -> Option<[usize; 4]> {
        for b in middles {
            for c in self.rows[b].ones() {
                // a ∈ N(b) ∖ N[c], d ∈ N(c) ∖ N[b]
                let mut ends_a = self.rows[b].clone();
                ends_a.difference_with(&self.rows[c]);
                ends_a.set(c, false);
                let mut ends_d = self.rows[c].clone();
                ends_d.difference_with(&self.rows[b]);
                ends_d.set(b, false);
                if ends_d.is_clear() {
                    continue;
                }
                for a in ends_a.ones() {
                    let mut free = ends_d.clone();
                    free.difference_with(&self.rows[a]);
                    if let Some(d) = free.ones().next() {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
        None
    }

    pub fn find_induced_p4(&self) -> Option<[usize; 4]> {
        self.find_induced_p4_from(0..self.len())
    }

    /// Whether `path` is an induced path in the listed order.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                if path[i] == path[j] || self.adjacent(path[i], path[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_and_path() {
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k4.find_induced_p4().is_none());
        assert_eq!(k4.diameter(), Dist::Finite(1));
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let w = p4.find_induced_p4().unwrap();
        assert!(p4.is_induced_path(&w));
        assert_eq!(p4.diameter(), Dist::Finite(3));
        assert_eq!(p4.complement().diameter(), Dist::Finite(3));
    }

    #[test]
    fn components_order() {
        let g = SimpleGraph::from_edges(6, &[(0, 5), (1, 2), (2, 3)]);
        assert_eq!(g.components(), vec![vec![1, 2, 3], vec![0, 5], vec![4]]);
        assert_eq!(g.diameter(), Dist::Infinite);
    }
}
