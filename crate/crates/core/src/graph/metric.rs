use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex};

/// Marker stored for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, eccentricities and diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diam: u32,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, `None` when they are in different components.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Raw entry, [`UNREACHABLE`] for disconnected pairs.
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: Vertex) -> Option<u32> {
        let e = self.ecc[u];
        (e != UNREACHABLE).then_some(e)
    }

    /// Graph diameter; `None` means infinite (disconnected or empty graph).
    pub fn diameter(&self) -> Option<u32> {
        (self.diam != UNREACHABLE).then_some(self.diam)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.diam != UNREACHABLE
    }

    /// Whether `w` lies on some geodesic between `u` and `v` (endpoints included).
    pub fn on_geodesic(&self, u: Vertex, w: Vertex, v: Vertex) -> bool {
        match (self.get(u, w), self.get(w, v), self.get(u, v)) {
            (Some(a), Some(b), Some(d)) => a + b == d,
            _ => false,
        }
    }
}

/// BFS from every vertex.
pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let ecc: Vec<u32> = (0..n).map(|u| dist[u * n..(u + 1) * n].iter().copied().max().unwrap_or(0)).collect();
    let diam = if n == 0 { UNREACHABLE } else { ecc.iter().copied().max().unwrap_or(0) };
    DistanceTable { n, dist, ecc, diam }
}

pub fn pendant_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

/// Vertices whose neighborhood induces a clique. Such a vertex is never an
/// interior vertex of a geodesic: its two path neighbors would be adjacent.
/// Pendant vertices are the degree-one case.
pub fn simplicial_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| {
            let nbrs = g.neighbors(v);
            nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// All unordered pairs `(u, v)`, `u < v`, at distance equal to the diameter.
pub fn antipodal_pairs(g: &Graph) -> Result<Vec<(Vertex, Vertex)>, GraphError> {
    let table = distances(g);
    let diam = table.diameter().ok_or(GraphError::Disconnected)?;
    Ok(g.vertices()
        .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
        .filter(|&(u, v)| table.raw(u, v) == diam)
        .collect())
}
