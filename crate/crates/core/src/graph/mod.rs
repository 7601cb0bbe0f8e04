//! Simple undirected graphs and their metric primitives.
//!
//! A [`Graph`] is immutable once built. Vertices are the integers `0..n`,
//! neighbor lists are kept sorted and the edge list is stored in canonical
//! lexicographic order, so two graphs built from the same vertex-labeled
//! edge set compare equal regardless of input order.

mod generate;
mod geodesic;
mod metric;
mod random;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use generate::{double_star, generate, Family, GraphRef};
pub use geodesic::{count_geodesics, enumerate_geodesics, geodesics_with_table, Geodesic, DEFAULT_GEODESIC_CAP};
pub use metric::{antipodal_pairs, distances, pendant_vertices, simplicial_vertices, DistanceTable, UNREACHABLE};
pub use random::random_connected;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("bad size {k} for {family}: {reason}")]
    BadSize { family: &'static str, k: usize, reason: &'static str },
    #[error("vertices {0} and {1} are not connected")]
    Unreachable(Vertex, Vertex),
    #[error("more than {cap} geodesics between {u} and {v}")]
    CapExceeded { u: Vertex, v: Vertex, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown graph shorthand `{0}`")]
    UnknownShorthand(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    connected: bool,
}

impl Graph {
    /// Builds the canonical graph on `n` vertices. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        canonical.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let connected = reaches_all(&adjacency);
        Ok(Self { n, adjacency, edges: canonical, connected })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Canonical edge list, `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// A graph is connected when it has at least one vertex and every vertex
    /// is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Index of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Subgraph induced by `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| position[*u] != usize::MAX && position[*v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn reaches_all(adjacency: &[Vec<Vertex>]) -> bool {
    let n = adjacency.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_connected_graph() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::OutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn six_vertex_tree_with_two_branch_points() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(g.size(), 5);
        assert_eq!(g.degree(1), 3);
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity_flag() {
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(&[3, 2, 1]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
