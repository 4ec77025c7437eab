//! Generation graphs `Γ_F(G)`: vertices are the elements outside
//! `I_F(G) = {x : F(⟨x, y⟩) for all y}`, and `x ~ y` when `⟨x, y⟩ ∈ F`.
//!
//! Adjacency is conjugation-invariant, so the graph is stored as one
//! neighbour set per conjugacy class: `N(r)` for the class representative
//! `r`. The neighbours of `v = r^g` are `N(r)^g`.

use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{centralizer_generators, DirectProduct, Group};
use crate::perm::Permutation;
use crate::predicate::{partner_set, PredicateKind};
use crate::simple_graph::SimpleGraph;
use crate::table::{Classes, ElementTable};

/// A graph distance; disconnected pairs are [`Dist::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u32(*d),
            Dist::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Dist {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Dist::Finite(n)),
            Raw::S(s) if s == "infinity" => Ok(Dist::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

/// Vertices within distance `radius` of `center` (element indices, sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: u32,
    pub radius: u32,
    pub members: Vec<u32>,
}

pub struct GraphView {
    group: Group,
    kind: PredicateKind,
    table: std::sync::Arc<ElementTable>,
    classes: std::sync::Arc<Classes>,
    is_vertex: FixedBitSet,
    vertices: Vec<u32>,
    /// `N(r)` for each class representative, `None` for isolated classes.
    class_nbrs: Vec<Option<FixedBitSet>>,
    class_degree: Vec<u32>,
}

impl fmt::Debug for GraphView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphView")
            .field("kind", &self.kind)
            .field("order", &self.table.len())
            .field("vertices", &self.vertices.len())
            .finish()
    }
}

impl GraphView {
    pub fn new(group: &Group, kind: PredicateKind, cap: u64) -> Result<GraphView> {
        if kind == PredicateKind::Soluble && group.is_soluble().0 {
            return Err(Error::SolubleInput);
        }
        let table = group.table(cap)?;
        let classes = group.classes_data(cap)?;
        let n = table.len();
        let partners: Vec<FixedBitSet> = classes
            .reps
            .par_iter()
            .map(|&r| {
                let cgens = centralizer_generators(&table, r);
                partner_set(&table, r, kind, &cgens)
            })
            .collect();
        let mut is_vertex = FixedBitSet::with_capacity(n);
        for (c, p) in partners.iter().enumerate() {
            if p.count_ones(..) != n {
                for &m in &classes.members[c] {
                    is_vertex.insert(m as usize);
                }
            }
        }
        let mut class_nbrs = Vec::with_capacity(partners.len());
        let mut class_degree = Vec::with_capacity(partners.len());
        for (c, mut p) in partners.into_iter().enumerate() {
            let r = classes.reps[c] as usize;
            if is_vertex.contains(r) {
                p.intersect_with(&is_vertex);
                p.set(r, false);
                class_degree.push(p.count_ones(..) as u32);
                class_nbrs.push(Some(p));
            } else {
                class_degree.push(0);
                class_nbrs.push(None);
            }
        }
        let vertices = is_vertex.ones().map(|v| v as u32).collect();
        let view = GraphView {
            group: group.clone(),
            kind,
            table,
            classes,
            is_vertex,
            vertices,
            class_nbrs,
            class_degree,
        };
        if kind == PredicateKind::Soluble {
            let radical = group.soluble_radical(cap)?;
            let isolated = (n - view.vertices.len()) as u64;
            if radical.order_u64() != Some(isolated) {
                return Err(Error::Certificate(
                    "isolated vertices differ from the soluble radical".into(),
                ));
            }
        }
        Ok(view)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn kind(&self) -> PredicateKind {
        self.kind
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex elements in lexicographic order.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn is_vertex(&self, e: u32) -> bool {
        self.is_vertex.contains(e as usize)
    }

    /// Position of `e` in [`GraphView::vertices`].
    pub fn vertex_id(&self, e: u32) -> Option<usize> {
        self.vertices.binary_search(&e).ok()
    }

    /// `I_F(G)` as sorted element indices (includes the identity).
    pub fn isolated(&self) -> Vec<u32> {
        (0..self.table.len() as u32)
            .filter(|&e| !self.is_vertex(e))
            .collect()
    }

    /// Element index of `p`, which must be a vertex.
    pub fn vertex_of(&self, p: &Permutation) -> Result<u32> {
        let e = self
            .table
            .index_of(p)
            .ok_or_else(|| Error::NotInGroup(p.to_cycle_string()))?;
        if !self.is_vertex(e) {
            return Err(Error::NotAVertex(p.to_cycle_string()));
        }
        Ok(e)
    }

    fn check_vertex(&self, e: u32) -> Result<()> {
        if (e as usize) < self.table.len() && self.is_vertex(e) {
            Ok(())
        } else {
            Err(Error::NotAVertex(format!("#{e}")))
        }
    }

    /// Class representatives that are vertices.
    pub fn vertex_class_reps(&self) -> Vec<u32> {
        self.classes
            .reps
            .iter()
            .copied()
            .filter(|&r| self.is_vertex(r))
            .collect()
    }

    pub fn degree(&self, e: u32) -> u32 {
        self.class_degree[self.classes.class_of[e as usize] as usize]
    }

    fn rep_nbrs(&self, e: u32) -> &FixedBitSet {
        self.class_nbrs[self.classes.class_of[e as usize] as usize]
            .as_ref()
            .expect("vertex class")
    }

    /// Calls `f` on every neighbour of the vertex `e` until it returns true.
    #[inline]
    fn any_neighbor(&self, e: u32, mut f: impl FnMut(u32) -> bool) -> bool {
        let g = self.classes.conjugator[e as usize];
        let nbrs = self.rep_nbrs(e);
        if g == self.table.identity() {
            return nbrs.ones().any(|u| f(u as u32));
        }
        let gi = self.table.images(g);
        let ginv = self.table.images(self.table.inv(g));
        nbrs.ones().any(|u| f(self.table.conj_by(u as u32, gi, ginv)))
    }

    fn for_each_neighbor(&self, e: u32, mut f: impl FnMut(u32)) {
        self.any_neighbor(e, |u| {
            f(u);
            false
        });
    }

    /// Neighbours of a vertex, sorted.
    pub fn neighbors(&self, e: u32) -> Result<Vec<u32>> {
        self.check_vertex(e)?;
        let mut out = Vec::with_capacity(self.degree(e) as usize);
        self.for_each_neighbor(e, |u| out.push(u));
        out.sort_unstable();
        Ok(out)
    }

    pub fn adjacent(&self, x: u32, y: u32) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Ok(false);
        }
        // x = r^g, so x ~ y iff r ~ y^(g⁻¹)
        let g = self.classes.conjugator[x as usize];
        let gi = self.table.images(g);
        let ginv = self.table.images(self.table.inv(g));
        let back = self.table.conj_by(y, ginv, gi);
        Ok(self.rep_nbrs(x).contains(back as usize))
    }

    /// Breadth-first search from `sources` to depth `max_depth`. Returns the
    /// distance of every element (`u32::MAX` if not reached).
    ///
    /// Levels switch to a bottom-up scan once the frontier touches more
    /// edges than the unvisited part of the graph.
    pub fn bfs(&self, sources: &[u32], max_depth: u32) -> Vec<u32> {
        let n = self.table.len();
        let mut dist = vec![u32::MAX; n];
        let mut frontier_set = FixedBitSet::with_capacity(n);
        let mut frontier: Vec<u32> = Vec::new();
        for &s in sources {
            if dist[s as usize] == u32::MAX {
                dist[s as usize] = 0;
                frontier.push(s);
            }
        }
        let mut unvisited: Vec<u32> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| dist[v as usize] == u32::MAX)
            .collect();
        let mut unvisited_edges: u64 = unvisited.iter().map(|&v| self.degree(v) as u64).sum();
        let mut depth = 0;
        while !frontier.is_empty() && depth < max_depth && !unvisited.is_empty() {
            depth += 1;
            let frontier_edges: u64 = frontier.iter().map(|&v| self.degree(v) as u64).sum();
            let mut next = Vec::new();
            if frontier_edges * 14 > unvisited_edges {
                frontier_set.clear();
                for &v in &frontier {
                    frontier_set.insert(v as usize);
                }
                unvisited.retain(|&u| {
                    let hit = self.any_neighbor(u, |w| frontier_set.contains(w as usize));
                    if hit {
                        dist[u as usize] = depth;
                        next.push(u);
                    }
                    !hit
                });
            } else {
                for &v in &frontier {
                    self.for_each_neighbor(v, |u| {
                        if dist[u as usize] == u32::MAX {
                            dist[u as usize] = depth;
                            next.push(u);
                        }
                    });
                }
                unvisited.retain(|&u| dist[u as usize] == u32::MAX);
            }
            unvisited_edges -= next.iter().map(|&v| self.degree(v) as u64).sum::<u64>();
            frontier = next;
        }
        dist
    }

    pub fn ball(&self, x: u32, radius: u32) -> Result<Ball> {
        self.check_vertex(x)?;
        let dist = self.bfs(&[x], radius);
        let members = (0..dist.len() as u32)
            .filter(|&e| dist[e as usize] <= radius)
            .collect();
        Ok(Ball {
            center: x,
            radius,
            members,
        })
    }

    pub fn distance(&self, x: u32, y: u32) -> Result<Dist> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let d = self.bfs(&[x], u32::MAX)[y as usize];
        Ok(if d == u32::MAX {
            Dist::Infinite
        } else {
            Dist::Finite(d)
        })
    }

    fn eccentricity_unchecked(&self, x: u32) -> Dist {
        let dist = self.bfs(&[x], u32::MAX);
        self.vertices
            .iter()
            .try_fold(0, |m, &v| match dist[v as usize] {
                u32::MAX => None,
                d => Some(m.max(d)),
            })
            .map_or(Dist::Infinite, Dist::Finite)
    }

    pub fn eccentricity(&self, x: u32) -> Result<Dist> {
        self.check_vertex(x)?;
        Ok(self.eccentricity_unchecked(x))
    }

    /// Eccentricity of every vertex class representative.
    pub fn class_eccentricities(&self) -> Vec<(u32, Dist)> {
        self.vertex_class_reps()
            .par_iter()
            .map(|&r| (r, self.eccentricity_unchecked(r)))
            .collect()
    }

    /// Maximum eccentricity over class representatives; every vertex is
    /// conjugate to one of them.
    pub fn diameter(&self) -> Dist {
        self.class_eccentricities()
            .into_iter()
            .map(|(_, d)| d)
            .max()
            .unwrap_or(Dist::Finite(0))
    }

    /// Connected components as sorted element lists, largest first, ties by
    /// least member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = FixedBitSet::with_capacity(self.table.len());
        let mut out = Vec::new();
        for &v in &self.vertices {
            if seen.contains(v as usize) {
                continue;
            }
            let dist = self.bfs(&[v], u32::MAX);
            let comp: Vec<u32> = self
                .vertices
                .iter()
                .copied()
                .filter(|&u| dist[u as usize] != u32::MAX)
                .collect();
            for &u in &comp {
                seen.insert(u as usize);
            }
            out.push(comp);
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        out
    }

    /// The graph on vertex ids `0..V` as a dense graph.
    pub fn to_simple(&self, max_vertices: usize) -> Result<SimpleGraph> {
        let v = self.vertices.len();
        if v > max_vertices {
            return Err(Error::capacity("dense graph", v, max_vertices as u64));
        }
        let mut g = SimpleGraph::new(v);
        for (i, &x) in self.vertices.iter().enumerate() {
            self.for_each_neighbor(x, |u| {
                let j = self.vertex_id(u).expect("neighbour is a vertex");
                if i < j {
                    g.add_edge(i, j);
                }
            });
        }
        Ok(g)
    }

    fn rep_ids(&self) -> Vec<usize> {
        self.vertex_class_reps()
            .into_iter()
            .map(|r| self.vertex_id(r).unwrap())
            .collect()
    }

    /// An induced `P4` as element indices, or `None` if the graph is a
    /// cograph.
    pub fn induced_p4(&self, max_vertices: usize) -> Result<Option<[u32; 4]>> {
        let g = self.to_simple(max_vertices)?;
        Ok(g.find_induced_p4_from(self.rep_ids())
            .map(|w| w.map(|i| self.vertices[i])))
    }

    /// Diameter of the complement on the same vertex set.
    pub fn complement_diameter(&self, max_vertices: usize) -> Result<Dist> {
        let g = self.to_simple(max_vertices)?.complement();
        Ok(g.diameter_from(self.rep_ids()))
    }

    pub fn involutions(&self) -> Vec<u32> {
        (0..self.table.len() as u32)
            .filter(|&e| self.table.order_of(e) == 2)
            .collect()
    }

    /// Distance from `x` to the nearest involution, searched to depth 3.
    pub fn involution_distance(&self, x: u32) -> Result<Option<u32>> {
        self.check_vertex(x)?;
        let invs = self.involutions();
        if invs.is_empty() {
            return Err(Error::NoInvolutions);
        }
        let dist = self.bfs(&[x], 3);
        Ok(invs
            .iter()
            .map(|&i| dist[i as usize])
            .filter(|&d| d != u32::MAX)
            .min())
    }

    /// Distance to the nearest involution for every vertex, by one BFS from
    /// all involution vertices, searched to depth 3.
    pub fn involution_distances(&self) -> Result<Vec<(u32, Option<u32>)>> {
        let invs: Vec<u32> = self
            .involutions()
            .into_iter()
            .filter(|&i| self.is_vertex(i))
            .collect();
        if self.involutions().is_empty() {
            return Err(Error::NoInvolutions);
        }
        let dist = self.bfs(&invs, 3);
        Ok(self
            .vertices
            .iter()
            .map(|&v| (v, (dist[v as usize] != u32::MAX).then_some(dist[v as usize])))
            .collect())
    }
}

/// Builds a path of length at most 2 between `x` and `y` in the soluble
/// graph of `H × K`, through `(a, 1)` or `(1, b)` with `a` adjacent in
/// `Γ_S(H)` to both first coordinates (or `b` likewise in `K`). The
/// candidate middle vertex is checked directly in the product. Returns the
/// path including both ends.
pub fn product_short_path(
    product: &DirectProduct,
    left: &GraphView,
    right: &GraphView,
    x: &Permutation,
    y: &Permutation,
) -> Option<Vec<Permutation>> {
    let kind = PredicateKind::Soluble;
    if x == y {
        return Some(vec![x.clone()]);
    }
    if kind.holds(x, y) {
        return Some(vec![x.clone(), y.clone()]);
    }
    let (h1, k1) = split(product, x);
    let (h2, k2) = split(product, y);
    let try_side = |view: &GraphView, a: &Permutation, b: &Permutation, left_side: bool| {
        let t = view.table();
        let ia = t.index_of(a)?;
        let ib = t.index_of(b)?;
        // candidates: common partners of both coordinates, in index order
        let cands: Vec<u32> = (0..t.len() as u32)
            .filter(|&z| z != t.identity() && view.pair_ok(ia, z) && view.pair_ok(ib, z))
            .collect();
        cands.into_iter().find_map(|z| {
            let zp = t.perm(z);
            let mid = if left_side {
                product.embed_left(&zp)
            } else {
                product.embed_right(&zp)
            };
            (mid != *x && mid != *y && kind.holds(x, &mid) && kind.holds(&mid, y))
                .then(|| vec![x.clone(), mid, y.clone()])
        })
    };
    let via_left = (!h1.is_identity() || !h2.is_identity())
        .then(|| try_side(left, &h1, &h2, true))
        .flatten();
    via_left.or_else(|| try_side(right, &k1, &k2, false))
}

fn split(product: &DirectProduct, x: &Permutation) -> (Permutation, Permutation) {
    let dl = product.left_degree;
    let h = Permutation::from_images(x.images()[..dl].to_vec()).expect("left factor");
    let k = Permutation::from_images(x.images()[dl..].iter().map(|&i| i - dl as u32).collect())
        .expect("right factor");
    (h, k)
}

impl GraphView {
    /// Whether `F(⟨a, z⟩)` holds, for arbitrary elements (vertices or not).
    fn pair_ok(&self, a: u32, z: u32) -> bool {
        if !self.is_vertex(a) || !self.is_vertex(z) || a == z {
            return true;
        }
        self.adjacent(a, z).unwrap()
    }
}
