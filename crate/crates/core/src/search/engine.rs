//! Canonical augmentation by vertex insertion.
//!
//! A node of size `s` is an induced subgraph on the first `s` vertices of a
//! candidate, where vertex `s - 1` was the canonical deletion choice: a
//! minimum-degree vertex, ties broken by the sum of neighbor degrees and then
//! by the first canonical position. Every hereditary constraint (planarity,
//! girth, degree cap) and the edge budget below are checked at each node.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::graph::{automorphism_orbits, canonical_labeling, canonical_labeling_colored};
use crate::graph::{bit, Bits, CanonicalForm, Girth, SimpleGraph};
use crate::planarity::is_planar;

#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub g: usize,
    pub regular: bool,
    pub connected_only: bool,
    /// Admissible final edge counts, as an inclusive range.
    pub e_lo: usize,
    pub e_hi: usize,
    /// Largest possible minimum degree of a planar graph on `j` vertices with
    /// girth at least `g`.
    pub pcap: Vec<usize>,
    /// Largest edge count of a planar graph on `j` vertices with girth at
    /// least `g`.
    pub emax: Vec<usize>,
    /// Edge-budget pruning; only switched off to audit it.
    pub use_budget: bool,
}

impl Plan {
    pub fn new(n: usize, r: usize, m: usize, g: usize, regular: bool, e_lo: usize, e_hi: usize, connected_only: bool) -> Plan {
        let emax: Vec<usize> = (0..=n).map(|j| max_edges(j, g)).collect();
        let pcap = (0..=n).map(|j| if j == 0 { 0 } else { 2 * emax[j] / j }).collect();
        Plan { n, r, m, g, regular, connected_only, e_lo, e_hi, pcap, emax, use_budget: true }
    }

    fn need(&self, d: usize) -> usize {
        if d < self.r {
            self.r - d
        } else if d > self.r && d < self.m {
            self.m - d
        } else {
            0
        }
    }

    /// Degree range for the vertex that brings the graph to size `c`, given
    /// the minimum degree `prev` of the graph before it (`None` at the root).
    fn degree_range(&self, c: usize, prev: Option<usize>) -> (usize, usize) {
        let lo = self.r.saturating_sub(self.n - c);
        let mut hi = self.m.min(c - 1).min(self.pcap[c]);
        if let Some(p) = prev {
            hi = hi.min(p + 1);
        }
        (lo, hi)
    }

    /// Whether a graph of size `s` with `e` edges, total degree deficiency
    /// `need` and minimum degree `delta` can still reach an admissible final
    /// edge count.
    fn budget_ok(&self, s: usize, e: usize, need: usize, delta: usize) -> bool {
        let q = self.n - s;
        if q == 0 {
            return need == 0 && e >= self.e_lo && e <= self.e_hi;
        }
        if !self.use_budget {
            return true;
        }
        // every future edge is counted once, by its later endpoint
        let mut lo_sum = 0;
        let mut hi_sum = 0;
        for c in s + 1..=self.n {
            let lo = self.r.saturating_sub(self.n - c);
            let hi = self.m.min(c - 1).min(self.pcap[c]).min(delta + (c - s));
            if lo > hi {
                return false;
            }
            lo_sum += lo;
            hi_sum += hi;
        }
        if e + hi_sum < self.e_lo {
            return false;
        }
        // X edges reach existing vertices, Y join future vertices
        let rq = self.r * q;
        let y = if rq > need { self.emax[q].min((rq - need) / 2) } else { 0 };
        let x = need.max(rq.saturating_sub(2 * y));
        let f_min = (x + y).max(lo_sum);
        e + f_min <= self.e_hi
    }
}

fn max_edges(j: usize, g: usize) -> usize {
    if j < 2 {
        return 0;
    }
    let complete = j * (j - 1) / 2;
    let euler = if j >= 2 { g * (j - 2) / (g - 2) } else { 0 };
    complete.min(euler.max(j - 1))
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub graph: SimpleGraph,
    pub edges: usize,
    pub need: usize,
    /// Minimum degree, `None` for the empty graph.
    pub delta: Option<usize>,
}

impl Node {
    pub fn root() -> Node {
        Node { graph: SimpleGraph::empty(0).expect("empty graph"), edges: 0, need: 0, delta: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Accepted nodes by graph size.
    pub nodes: Vec<u64>,
    pub budget_pruned: u64,
    pub nonplanar: u64,
    pub noncanonical: u64,
    pub duplicates: u64,
    pub leaves_checked: u64,
}

impl SearchStats {
    pub(crate) fn with_levels(n: usize) -> Self {
        SearchStats { nodes: vec![0; n + 1], ..Default::default() }
    }

    pub(crate) fn merge(&mut self, o: &SearchStats) {
        if self.nodes.len() < o.nodes.len() {
            self.nodes.resize(o.nodes.len(), 0);
        }
        for (a, b) in self.nodes.iter_mut().zip(&o.nodes) {
            *a += b;
        }
        self.budget_pruned += o.budget_pruned;
        self.nonplanar += o.nonplanar;
        self.noncanonical += o.noncanonical;
        self.duplicates += o.duplicates;
        self.leaves_checked += o.leaves_checked;
    }

    pub fn total_nodes(&self) -> u64 {
        self.nodes.iter().sum()
    }
}

pub(crate) struct Limits<'a> {
    pub budget: Option<u64>,
    pub spent: &'a AtomicU64,
    pub exhausted: &'a AtomicBool,
}

impl Limits<'_> {
    fn tick(&self) -> bool {
        match self.budget {
            None => true,
            Some(b) => {
                if self.spent.fetch_add(1, Ordering::Relaxed) >= b {
                    self.exhausted.store(true, Ordering::Relaxed);
                    false
                } else {
                    true
                }
            }
        }
    }
}

/// Neighborhood masks that a new vertex may combine without closing a cycle
/// shorter than `g`: `compat[a]` holds the vertices at distance at least
/// `g - 2` from `a`.
fn compatibility(gr: &SimpleGraph, g: usize) -> Vec<u64> {
    let n = gr.n();
    let all = crate::graph::low_mask(n);
    if g <= 3 {
        return (0..n).map(|a| all & !bit(a)).collect();
    }
    (0..n)
        .map(|a| {
            let mut ball = bit(a);
            for _ in 0..g - 3 {
                let mut next = ball;
                for v in Bits(ball) {
                    next |= gr.neighbor_mask(v);
                }
                if next == ball {
                    break;
                }
                ball = next;
            }
            all & !ball
        })
        .collect()
}

/// Children of `node` that pass every constraint and the canonical deletion
/// test, deduplicated among siblings.
pub(crate) fn children(plan: &Plan, node: &Node, stats: &mut SearchStats) -> Vec<Node> {
    let p = &node.graph;
    let s = p.n();
    let c = s + 1;
    let degs = p.degrees();
    let (t_lo, t_hi) = plan.degree_range(c, node.delta);
    if t_lo > t_hi {
        return Vec::new();
    }
    let compat = compatibility(p, plan.g);
    let symmetric = c < plan.n && s > 1 && !canonical_labeling(p).generators.is_empty();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for t in t_lo..=t_hi {
        let mut forced = 0u64;
        let mut optional = 0u64;
        for (u, &d) in degs.iter().enumerate() {
            if t > 0 && d + 1 == t {
                forced |= bit(u);
            } else if d >= t && d < plan.m {
                optional |= bit(u);
            }
        }
        if forced.count_ones() as usize > t || Bits(forced).any(|u| forced & !bit(u) & !compat[u] != 0) {
            continue;
        }
        let allowed = Bits(forced).fold(optional, |acc, u| acc & compat[u]);
        let want = t - forced.count_ones() as usize;
        let mut visit = |set: u64| {
            if let Some(child) = try_child(plan, node, &degs, set, t, symmetric, &mut seen, stats) {
                out.push(child);
            }
        };
        choose(allowed, want, forced, &compat, &mut visit);
    }
    out
}

fn choose(pool: u64, want: usize, acc: u64, compat: &[u64], visit: &mut impl FnMut(u64)) {
    if want == 0 {
        visit(acc);
        return;
    }
    if (pool.count_ones() as usize) < want {
        return;
    }
    let mut rest = pool;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (rest.count_ones() as usize) + 1 < want {
            break;
        }
        choose(rest & compat[u], want - 1, acc | bit(u), compat, visit);
    }
}

#[allow(clippy::too_many_arguments)]
fn try_child(
    plan: &Plan,
    node: &Node,
    degs: &[usize],
    set: u64,
    t: usize,
    symmetric: bool,
    seen: &mut HashSet<CanonicalForm>,
    stats: &mut SearchStats,
) -> Option<Node> {
    let s = node.graph.n();
    let c = s + 1;
    let mut need = node.need + plan.need(t);
    for u in Bits(set) {
        need = need + plan.need(degs[u] + 1) - plan.need(degs[u]);
    }
    let edges = node.edges + t;
    if !plan.budget_ok(c, edges, need, t) {
        stats.budget_pruned += 1;
        return None;
    }
    let mut rows = node.graph.rows().to_vec();
    for u in Bits(set) {
        rows[u] |= bit(s);
    }
    rows.push(set);
    let child = SimpleGraph::from_rows(rows);
    let v = s;

    // canonical deletion, cheap stage: minimum degree then neighbor degree sum
    let cdeg = child.degrees();
    let mins: Vec<usize> = (0..c).filter(|&w| cdeg[w] == t).collect();
    let mut tied = vec![v];
    if mins.len() > 1 {
        let inv = |w: usize| child.neighbors(w).map(|x| cdeg[x]).sum::<usize>();
        let best = mins.iter().map(|&w| inv(w)).max().unwrap_or(0);
        if inv(v) != best {
            stats.noncanonical += 1;
            return None;
        }
        tied = mins.into_iter().filter(|&w| inv(w) == best).collect();
    }

    if t >= 2 && !is_planar(&child) {
        stats.nonplanar += 1;
        return None;
    }

    let mut key = None;
    if tied.len() > 1 {
        let colors: Vec<u32> = (0..c).map(|w| if tied.contains(&w) { 0 } else { 1 }).collect();
        let lab = canonical_labeling_colored(&child, &colors);
        let orbit = automorphism_orbits(c, &lab.generators);
        if orbit[v] != orbit[lab.lab[0]] {
            stats.noncanonical += 1;
            return None;
        }
        key = Some(lab.form);
    }
    if symmetric {
        let key = key.unwrap_or_else(|| crate::graph::canonical_form(&child));
        if !seen.insert(key) {
            stats.duplicates += 1;
            return None;
        }
    }
    Some(Node { graph: child, edges, need, delta: Some(t) })
}

/// Whether a full-size graph meets the query exactly.
pub(crate) fn accept_leaf(plan: &Plan, g: &SimpleGraph) -> bool {
    let degs = g.degrees();
    if degs.iter().any(|&d| d != plan.r && d != plan.m) {
        return false;
    }
    if !plan.regular && (!degs.contains(&plan.r) || !degs.contains(&plan.m)) {
        return false;
    }
    if plan.connected_only && !g.is_connected() {
        return false;
    }
    g.girth() == Girth::Finite(plan.g)
}

/// Depth-first exploration below `node`, collecting accepted leaves.
pub(crate) fn explore(plan: &Plan, node: Node, limits: &Limits, stats: &mut SearchStats, out: &mut Vec<SimpleGraph>) {
    if !limits.tick() {
        return;
    }
    let s = node.graph.n();
    stats.nodes[s] += 1;
    if s == plan.n {
        stats.leaves_checked += 1;
        if accept_leaf(plan, &node.graph) {
            out.push(node.graph);
        }
        return;
    }
    for child in children(plan, &node, stats) {
        if limits.exhausted.load(Ordering::Relaxed) {
            return;
        }
        explore(plan, child, limits, stats, out);
    }
}
