//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so neighbor iteration
//! is always ascending and every downstream output is reproducible.

mod canon;
mod format;

pub use canon::{
    automorphism_orbits, canonical_form, canonical_labeling, canonical_labeling_colored,
    CanonicalForm, CanonicalLabeling,
};
pub use format::{
    decode_graph6, encode_graph6, parse_edge_list, parse_graph_text, write_edge_list,
    GRAPH6_MAX_VERTICES,
};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::GraphError;

pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a `u64`, ascending.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(SimpleGraph { adj: vec![0; n] })
    }

    /// Builds a graph from vertex pairs. Repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in pairs {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        SimpleGraph { adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Appends an isolated vertex and returns its index.
    #[cfg(test)]
    pub(crate) fn push_vertex(&mut self) -> usize {
        assert!(self.adj.len() < MAX_VERTICES);
        self.adj.push(0);
        self.adj.len() - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts = BTreeMap::new();
        for v in 0..self.n() {
            *counts.entry(self.degree(v)).or_insert(0) += 1;
        }
        DegreeProfile { counts }
    }

    /// True iff every degree is `r` or `m` and both occur.
    pub fn is_biregular(&self, r: usize, m: usize) -> bool {
        debug_assert!(r < m);
        let mut seen_r = false;
        let mut seen_m = false;
        for v in 0..self.n() {
            match self.degree(v) {
                d if d == r => seen_r = true,
                d if d == m => seen_m = true,
                _ => return false,
            }
        }
        seen_r && seen_m
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == k)
    }

    /// Exact girth by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                // no shorter cycle through s can be found past this depth
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut frontier = bit(s);
        let mut seen = bit(s);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= !seen;
            for w in Bits(next) {
                dist[w] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach_mask(s);
            seen |= comp;
            out.push(Bits(comp).collect());
        }
        out
    }

    pub(crate) fn reach_mask(&self, s: usize) -> u64 {
        let mut comp = bit(s);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// The graph on zero vertices is not connected (it has no component).
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.reach_mask(0) == low_mask(self.n())
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { adj: vec![0; vertices.len()] };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n());
        let mut g = SimpleGraph { adj: vec![0; self.n()] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Removes vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
        let mut g = Self::empty(self.n() + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let off = self.n();
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        Ok(g)
    }

    /// A copy with one extra vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Result<SimpleGraph, GraphError> {
        let mut g = Self::empty(self.n() + 1)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let a = self.n();
        for u in 0..self.n() {
            g.add_edge(u, a);
        }
        Ok(g)
    }

    pub fn is_forest(&self) -> bool {
        let c = self.components().len();
        self.edge_count() + c == self.n()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Girth of a graph; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Number of vertices of each degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        DegreeProfile { counts: pairs.iter().copied().collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edge_list(n, &pairs).unwrap()
    }

    /// Shortest cycle by enumerating every simple cycle through its minimum vertex.
    fn girth_by_cycle_enumeration(g: &SimpleGraph) -> Girth {
        fn extend(g: &SimpleGraph, start: usize, cur: usize, len: usize, used: u64, best: &mut usize) {
            for w in g.neighbors(cur) {
                if w == start && len >= 3 {
                    *best = (*best).min(len);
                } else if w > start && used & bit(w) == 0 {
                    extend(g, start, w, len + 1, used | bit(w), best);
                }
            }
        }
        let mut best = usize::MAX;
        for s in 0..g.n() {
            extend(g, s, s, 1, bit(s), &mut best);
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn edge_list_basics() {
        let tri = SimpleGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert_eq!(tri.girth(), Girth::Finite(3));

        let dup = SimpleGraph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);

        assert_eq!(SimpleGraph::from_edge_list(2, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            SimpleGraph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { endpoint: 2, n: 2 })
        );
        assert!(SimpleGraph::empty(65).is_err());
        assert!(SimpleGraph::empty(64).is_ok());
    }

    #[test]
    fn profiles_and_girth() {
        assert_eq!(cycle(7).degree_profile(), DegreeProfile::from_pairs(&[(2, 7)]));
        let path = SimpleGraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), Girth::Infinite);
        assert!(path.is_forest());
        assert!(!cycle(5).is_biregular(2, 3));
        for n in 3..12 {
            assert_eq!(cycle(n).girth(), Girth::Finite(n));
        }
        assert!(Girth::Finite(100) < Girth::Infinite);
    }

    #[test]
    fn components_and_connectivity() {
        let two = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!two.is_connected());
        let k4 = SimpleGraph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(k4.is_connected());
        let empty = SimpleGraph::empty(0).unwrap();
        assert!(empty.components().is_empty());
        assert!(!empty.is_connected());
    }

    #[test]
    fn bfs_girth_matches_cycle_enumeration_on_all_graphs_up_to_6() {
        for n in 0..=6usize {
            let slots: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << slots.len()) {
                let pairs: Vec<_> =
                    slots.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
                let g = SimpleGraph::from_edge_list(n, &pairs).unwrap();
                assert_eq!(g.girth(), girth_by_cycle_enumeration(&g), "{g:?}");
                let p = g.degree_profile();
                assert_eq!(p.vertex_count(), n);
                assert_eq!(p.degree_sum(), 2 * g.edge_count());
            }
        }
    }

    #[test]
    fn bfs_girth_matches_cycle_enumeration_random_8() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..3000 {
            let n = 8;
            let p: f64 = rng.gen_range(0.1..0.6);
            let mut pairs = Vec::new();
            for j in 0..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        pairs.push((i, j));
                    }
                }
            }
            let g = SimpleGraph::from_edge_list(n, &pairs).unwrap();
            assert_eq!(g.girth(), girth_by_cycle_enumeration(&g));
        }
    }

    #[test]
    fn distances() {
        let c6 = cycle(6);
        assert_eq!(c6.distances_from(0), vec![0, 1, 2, 3, 2, 1]);
        let two = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_eq!(two.distances_from(0)[4], usize::MAX);
    }
}
