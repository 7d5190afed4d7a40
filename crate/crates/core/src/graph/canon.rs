//! Canonical labeling by individualization and refinement.
//!
//! Ordered partitions are refined to the coarsest equitable partition using
//! neighbor counts into splitter cells; non-discrete partitions branch on the
//! first non-singleton cell. Automorphisms found at equivalent leaves prune
//! both sibling branches (stabilizer orbits) and whole subtrees (jump back to
//! the divergence level).

use std::collections::VecDeque;

use super::{bit, Bits, SimpleGraph};

/// Byte string identifying an isomorphism class: the vertex count followed by
/// the upper adjacency triangle of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let mut out = Vec::with_capacity(1 + (n * n) / 16 + 1);
        out.push(n as u8);
        let mut acc = 0u8;
        let mut used = 0;
        for (i, row) in rows.iter().enumerate() {
            for j in i + 1..n {
                acc = (acc << 1) | ((row >> j) & 1) as u8;
                used += 1;
                if used == 8 {
                    out.push(acc);
                    acc = 0;
                    used = 0;
                }
            }
        }
        if used > 0 {
            out.push(acc << (8 - used));
        }
        CanonicalForm(out)
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// Inverse of `lab`.
    pub pos: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// the full automorphism group of the (colored) graph.
    pub generators: Vec<Vec<usize>>,
    pub form: CanonicalForm,
}

impl CanonicalLabeling {
    pub fn canonical_graph(&self, g: &SimpleGraph) -> SimpleGraph {
        g.permuted(&self.pos)
    }

    /// Orbit representative (smallest vertex) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        automorphism_orbits(self.lab.len(), &self.generators)
    }
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &SimpleGraph) -> CanonicalLabeling {
    let n = g.n();
    let cells = if n == 0 { Vec::new() } else { vec![super::low_mask(n)] };
    run(g, cells)
}

/// Canonical labeling that respects a vertex coloring: only color-preserving
/// relabelings are considered, and color classes occupy positions in
/// ascending color order.
pub fn canonical_labeling_colored(g: &SimpleGraph, colors: &[u32]) -> CanonicalLabeling {
    assert_eq!(colors.len(), g.n());
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let cells = distinct
        .iter()
        .map(|&c| (0..g.n()).filter(|&v| colors[v] == c).fold(0u64, |m, v| m | bit(v)))
        .collect();
    run(g, cells)
}

/// Orbit representatives of the group generated by `generators`.
pub fn automorphism_orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for gamma in generators {
        for (v, &w) in gamma.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    // keeps the smaller label as root
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

fn run(g: &SimpleGraph, mut cells: Vec<u64>) -> CanonicalLabeling {
    let adj = g.rows();
    let n = g.n();
    let queue: VecDeque<u64> = cells.iter().copied().collect();
    refine(adj, &mut cells, queue);
    let mut s = Search { adj, first: None, best: None, generators: Vec::new(), path: Vec::new() };
    s.descend(cells);
    let best = s.best.expect("search tree has at least one leaf");
    let lab = best.lab;
    let mut pos = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    CanonicalLabeling { form: CanonicalForm::from_rows(&best.rows), lab, pos, generators: s.generators }
}

/// Refines `cells` in place until it is equitable with respect to every
/// splitter pushed through `queue`. New cells are ordered by ascending count.
fn refine(adj: &[u64], cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(8);
    while let Some(w) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            groups.clear();
            for v in Bits(x) {
                let c = (adj[v] & w).count_ones();
                match groups.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, m)) => *m |= bit(v),
                    None => groups.push((c, bit(v))),
                }
            }
            if groups.len() == 1 {
                i += 1;
                continue;
            }
            groups.sort_unstable_by_key(|&(k, _)| k);
            let k = groups.len();
            cells.splice(i..i + 1, groups.iter().map(|&(_, m)| m));
            queue.extend(groups.iter().map(|&(_, m)| m));
            i += k;
        }
    }
}

struct Leaf {
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns `Some(level)` when the
    /// caller should abandon every node deeper than `level`.
    fn descend(&mut self, cells: Vec<u64>) -> Option<usize> {
        let Some(t) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells);
        };
        let depth = self.path.len();
        let cell = cells[t];
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried) {
                continue;
            }
            let mut child = cells.clone();
            child.splice(t..t + 1, [bit(v), cell & !bit(v)]);
            refine(self.adj, &mut child, VecDeque::from([bit(v)]));
            self.path.push(v);
            let jump = self.descend(child);
            self.path.pop();
            tried.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an already explored sibling under
    /// the known automorphisms that fix the current path pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize]) -> bool {
        let n = self.adj.len();
        let stab: Vec<Vec<usize>> = self
            .generators
            .iter()
            .filter(|gamma| self.path.iter().all(|&p| gamma[p] == p))
            .cloned()
            .collect();
        if stab.is_empty() {
            return false;
        }
        let orb = automorphism_orbits(n, &stab);
        tried.iter().any(|&u| orb[u] == orb[v])
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = permuted_rows(self.adj, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { lab, rows, path: self.path.clone() };
            self.best = Some(Leaf { lab: leaf.lab.clone(), rows: leaf.rows.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if rows == first.rows {
            let gamma = map_between(&first.lab, &lab);
            let level = common_prefix(&first.path, &self.path);
            self.generators.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let gamma = map_between(&best.lab, &lab);
                let level = common_prefix(&best.path, &self.path);
                self.generators.push(gamma);
                Some(level)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { lab, rows, path: self.path.clone() });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn permuted_rows(adj: &[u64], lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let mut pos = [0u8; 64];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i as u8;
    }
    let mut rows = vec![0u64; n];
    for (i, &v) in lab.iter().enumerate() {
        let mut r = 0u64;
        for w in Bits(adj[v]) {
            r |= bit(pos[w] as usize);
        }
        rows[i] = r;
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn cycle(n: usize) -> SimpleGraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edge_list(n, &pairs).unwrap()
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..(1 << slots.len())).map(move |mask| {
            let pairs: Vec<_> =
                slots.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
            SimpleGraph::from_edge_list(n, &pairs).unwrap()
        })
    }

    /// Isomorphism by trying every permutation.
    fn brute_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut da = a.degrees();
        let mut db = b.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn cycle_relabelings_share_a_form() {
        let c5 = cycle(5);
        let f = canonical_form(&c5);
        let mut perm: Vec<usize> = (0..5).collect();
        while next_permutation(&mut perm) {
            assert_eq!(canonical_form(&c5.permuted(&perm)), f);
        }
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let two = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&two));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let mut forms: Vec<CanonicalForm> = all_graphs(4).map(|g| canonical_form(&g)).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn class_counts_match_known_values() {
        // unlabeled graphs on n vertices: 1, 2, 4, 11, 34, 156
        for (n, expect) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let mut forms: Vec<CanonicalForm> = all_graphs(n).map(|g| canonical_form(&g)).collect();
            forms.sort();
            forms.dedup();
            assert_eq!(forms.len(), expect, "n={n}");
        }
    }

    #[test]
    fn forms_agree_with_permutation_isomorphism_n6() {
        // representatives of every labeled graph, bucketed by form; check
        // inside and across buckets against the permutation oracle
        let mut reps: Vec<(CanonicalForm, SimpleGraph)> = Vec::new();
        for g in all_graphs(6) {
            let f = canonical_form(&g);
            if !reps.iter().any(|(h, _)| *h == f) {
                reps.push((f, g));
            }
        }
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!brute_isomorphic(&reps[i].1, &reps[j].1));
            }
        }
    }

    #[test]
    fn orbits_match_colored_individualization() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(2..11);
            let p: f64 = rng.gen_range(0.2..0.7);
            let mut g = SimpleGraph::empty(n).unwrap();
            for j in 0..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j);
                    }
                }
            }
            let lab = canonical_labeling(&g);
            let orb = lab.orbits();
            let marked: Vec<CanonicalForm> = (0..n)
                .map(|v| {
                    let colors: Vec<u32> = (0..n).map(|u| (u == v) as u32).collect();
                    canonical_labeling_colored(&g, &colors).form
                })
                .collect();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(orb[u] == orb[v], marked[u] == marked[v], "{g:?} {u} {v}");
                }
            }
            for gamma in &lab.generators {
                assert!(g.edges().all(|(a, b)| g.has_edge(gamma[a], gamma[b])));
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_are_fast_and_invariant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        // K_{2,20} and a windmill of 12 triangles
        let mut k2m = SimpleGraph::empty(22).unwrap();
        for i in 2..22 {
            k2m.add_edge(0, i);
            k2m.add_edge(1, i);
        }
        let mut wind = SimpleGraph::empty(25).unwrap();
        for t in 0..12 {
            wind.add_edge(0, 1 + 2 * t);
            wind.add_edge(0, 2 + 2 * t);
            wind.add_edge(1 + 2 * t, 2 + 2 * t);
        }
        for g in [k2m, wind] {
            let f = canonical_form(&g);
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..20 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permuted(&perm)), f);
            }
        }
    }
}
