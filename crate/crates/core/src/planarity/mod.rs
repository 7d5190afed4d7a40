//! Planarity testing, combinatorial embeddings and facial walks.

mod link;
mod lr;

pub use link::{
    decompose_link, degree_trichotomy, is_forest, link, link_vertices, outerplanar_degree2_pair,
    LinkDecomposition,
    Trichotomy,
};

use crate::error::PlanarityError;
use crate::graph::SimpleGraph;

/// A rotation system for a planar graph. `rotation[v]` lists the neighbors
/// of `v` in cyclic order, starting from the smallest one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    host: SimpleGraph,
    rotation: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    /// Wraps an explicit rotation system after checking that each list is a
    /// permutation of the vertex's neighbors. Planarity is not checked here;
    /// see [`PlanarEmbedding::is_valid`].
    pub fn from_rotation(host: SimpleGraph, rotation: Vec<Vec<usize>>) -> Result<Self, PlanarityError> {
        if rotation.len() != host.n() {
            return Err(PlanarityError::Precondition("one rotation per vertex".into()));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut mask = 0u64;
            for &w in rot {
                if w >= host.n() || !host.has_edge(v, w) || mask >> w & 1 == 1 {
                    return Err(PlanarityError::Precondition(format!("bad rotation at vertex {v}")));
                }
                mask |= 1 << w;
            }
            if mask != host.neighbor_mask(v) {
                return Err(PlanarityError::Precondition(format!("rotation at {v} misses neighbors")));
            }
        }
        Ok(PlanarEmbedding { host, rotation })
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Facial walks as vertex sequences. Arriving at `v` from `u`, the walk
    /// leaves along the successor of `u` in the rotation at `v`. The single
    /// vertex graph has one empty face.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>, PlanarityError> {
        let g = &self.host;
        let n = g.n();
        if n == 0 {
            return Err(PlanarityError::Empty);
        }
        if !g.is_connected() {
            return Err(PlanarityError::Disconnected);
        }
        if n == 1 {
            return Ok(vec![Vec::new()]);
        }
        let mut index = vec![0usize; n * n];
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                index[v * n + w] = i;
            }
        }
        let mut used = vec![false; n * n];
        let mut faces = Vec::new();
        for (u0, v0) in g.edges().flat_map(|(a, b)| [(a, b), (b, a)]) {
            if used[u0 * n + v0] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (u0, v0);
            while !used[u * n + v] {
                used[u * n + v] = true;
                walk.push(u);
                let rot = &self.rotation[v];
                let next = rot[(index[v * n + u] + 1) % rot.len()];
                u = v;
                v = next;
            }
            faces.push(walk);
        }
        Ok(faces)
    }

    /// Checks that the facial walks satisfy Euler's formula, which holds
    /// exactly when the rotation system describes a plane embedding.
    pub fn is_valid(&self) -> bool {
        match self.faces() {
            Ok(f) => {
                let g = &self.host;
                let total: usize = f.iter().map(Vec::len).sum();
                total == 2 * g.edge_count() && g.n() + f.len() == g.edge_count() + 2
            }
            Err(_) => false,
        }
    }
}

/// Runs the left-right planarity test, returning an embedding for planar
/// graphs and `None` otherwise. Disconnected graphs are embedded per
/// component inside one rotation system.
pub fn test_planarity(g: &SimpleGraph) -> Option<PlanarEmbedding> {
    let rotation = lr::lr_planarity(&adjacency_lists(g), true)?;
    Some(PlanarEmbedding { host: g.clone(), rotation })
}

/// Planarity verdict without building the embedding.
pub fn is_planar(g: &SimpleGraph) -> bool {
    lr::lr_planarity(&adjacency_lists(g), false).is_some()
}

/// A graph is outerplanar iff adding a vertex adjacent to every vertex
/// leaves it planar.
pub fn is_outerplanar(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n >= 3 && g.edge_count() > 2 * n - 3 {
        return false;
    }
    let mut adj = adjacency_lists(g);
    for list in adj.iter_mut() {
        list.push(n);
    }
    adj.push((0..n).collect());
    lr::lr_planarity(&adj, false).is_some()
}

fn adjacency_lists(g: &SimpleGraph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).collect()).collect()
}
