//! Links of vertices in plane graphs and their cycle/tree decomposition.

use super::{is_outerplanar, is_planar, PlanarEmbedding};
use crate::error::PlanarityError;
use crate::graph::{bit, Bits, SimpleGraph};

/// Vertices (ascending, excluding `x`) lying on faces incident to `x`.
pub fn link_vertices(emb: &PlanarEmbedding, x: usize) -> Result<Vec<usize>, PlanarityError> {
    let g = emb.host();
    if x >= g.n() {
        return Err(PlanarityError::NoSuchVertex(x));
    }
    let mut mask = 0u64;
    for face in emb.faces()? {
        if face.contains(&x) {
            for v in face {
                mask |= bit(v);
            }
        }
    }
    mask &= !bit(x);
    Ok(Bits(mask).collect())
}

/// Subgraph induced by the vertices on faces incident to `x`, with `x`
/// removed. Vertex `i` of the result is the `i`-th smallest link vertex.
pub fn link(emb: &PlanarEmbedding, x: usize) -> Result<SimpleGraph, PlanarityError> {
    Ok(emb.host().induced(&link_vertices(emb, x)?))
}

/// Cycle pieces are the blocks of the link with at least three vertices;
/// tree pieces are the connected unions of bridges, plus isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDecomposition {
    pub link: SimpleGraph,
    pub cycles: Vec<Vec<usize>>,
    pub trees: Vec<Vec<usize>>,
    /// Nodes `0..k` are the cycles, `k..k+k'` the trees.
    pub intersection: SimpleGraph,
    /// Intersection nodes of degree at most one.
    pub ends: usize,
    /// Connected components of the link.
    pub c: usize,
    pub k: usize,
    pub k_prime: usize,
    /// False when two pieces share more than one vertex.
    pub simple: bool,
}

pub fn decompose_link(l: &SimpleGraph) -> Result<LinkDecomposition, PlanarityError> {
    if !is_outerplanar(l) {
        return Err(PlanarityError::NotOuterplanar);
    }
    let n = l.n();
    let blocks = blocks(l);
    let mut cycles: Vec<u64> = Vec::new();
    let mut bridge_adj = vec![0u64; n];
    for b in &blocks {
        if b.count_ones() >= 3 {
            cycles.push(*b);
        } else {
            let mut it = Bits(*b);
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            bridge_adj[u] |= bit(v);
            bridge_adj[v] |= bit(u);
        }
    }
    let covered: u64 = cycles.iter().fold(0, |m, c| m | c);
    let mut trees: Vec<u64> = Vec::new();
    let mut seen = 0u64;
    for v in 0..n {
        if seen & bit(v) != 0 {
            continue;
        }
        if bridge_adj[v] == 0 && covered & bit(v) != 0 {
            continue;
        }
        let comp = SimpleGraph::from_rows(bridge_adj.clone()).reach_mask(v);
        seen |= comp;
        trees.push(comp);
    }
    let (k, kp) = (cycles.len(), trees.len());
    let mut intersection = SimpleGraph::empty(k + kp)
        .map_err(|_| PlanarityError::Precondition("too many link pieces".into()))?;
    let mut simple = true;
    let pieces: Vec<u64> = cycles.iter().chain(trees.iter()).copied().collect();
    for i in 0..k {
        for j in i + 1..k + kp {
            let shared = (pieces[i] & pieces[j]).count_ones();
            if shared > 0 {
                intersection.add_edge(i, j);
            }
            if shared > 1 {
                simple = false;
            }
        }
    }
    let ends = (0..k + kp).filter(|&v| intersection.degree(v) <= 1).count();
    Ok(LinkDecomposition {
        link: l.clone(),
        cycles: cycles.into_iter().map(|m| Bits(m).collect()).collect(),
        trees: trees.into_iter().map(|m| Bits(m).collect()).collect(),
        intersection,
        ends,
        c: l.components().len(),
        k,
        k_prime: kp,
        simple,
    })
}

/// Vertex sets of the biconnected components (blocks) that contain edges.
fn blocks(g: &SimpleGraph) -> Vec<u64> {
    struct Dfs<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edges: Vec<(usize, usize)>,
        out: Vec<u64>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for w in self.g.neighbors(u) {
                if self.disc[w] == 0 {
                    self.edges.push((u, w));
                    self.visit(w, u);
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = 0u64;
                        while let Some((a, b)) = self.edges.pop() {
                            block |= bit(a) | bit(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if w != parent && self.disc[w] < self.disc[u] {
                    self.edges.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.n();
    let mut d = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, edges: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if d.disc[v] == 0 {
            d.visit(v, usize::MAX);
        }
    }
    d.out.sort_unstable_by_key(|m| m.trailing_zeros());
    d.out
}

pub fn is_forest(g: &SimpleGraph) -> bool {
    g.is_forest()
}

/// Classification of a planar graph of order `m + 1` with maximum degree `m`
/// by its number of degree-`m` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    FourAndM3,
    ThreeAndM4,
    AtMostTwo,
}

pub fn degree_trichotomy(g: &SimpleGraph, m: usize) -> Result<Trichotomy, PlanarityError> {
    let pre = |s: &str| Err(PlanarityError::Precondition(s.to_string()));
    if m < 3 || g.n() != m + 1 {
        return pre("order must be m + 1 with m >= 3");
    }
    if g.max_degree() != Some(m) {
        return pre("maximum degree must equal m");
    }
    if !is_planar(g) {
        return pre("graph is not planar");
    }
    let count = (0..g.n()).filter(|&v| g.degree(v) == m).count();
    match (count, m) {
        (4, 3) => Ok(Trichotomy::FourAndM3),
        (3, 4) => Ok(Trichotomy::ThreeAndM4),
        (c, _) if c <= 2 => Ok(Trichotomy::AtMostTwo),
        (c, _) => pre(&format!("{c} vertices of degree {m} in a planar graph of order {}", m + 1)),
    }
}

/// Lexicographically smallest pair of non-adjacent degree-2 vertices.
pub fn outerplanar_degree2_pair(g: &SimpleGraph) -> Result<(usize, usize), PlanarityError> {
    let pre = |s: &str| Err(PlanarityError::Precondition(s.to_string()));
    if g.n() < 4 {
        return pre("need at least four vertices");
    }
    if g.min_degree().unwrap_or(0) < 2 {
        return pre("minimum degree must be at least 2");
    }
    if !is_outerplanar(g) {
        return Err(PlanarityError::NotOuterplanar);
    }
    let twos: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    for (i, &u) in twos.iter().enumerate() {
        for &v in &twos[i + 1..] {
            if !g.has_edge(u, v) {
                return Ok((u, v));
            }
        }
    }
    pre("no two non-adjacent vertices of degree 2")
}
