use std::collections::VecDeque;
use std::fmt;

use super::{DistanceTable, Graph, GraphError, Vertex, UNREACHABLE};

pub const DEFAULT_GEODESIC_CAP: usize = 10_000;

/// A shortest path, stored as its vertex sequence from source to target.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Geodesic(Vec<Vertex>);

impl Geodesic {
    /// Wraps a vertex sequence without checking it against any graph.
    pub fn from_vertices(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "a geodesic has at least one vertex");
        Geodesic(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn source(&self) -> Vertex {
        self.0[0]
    }

    pub fn target(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// Checks that this is a shortest path of `g`.
    pub fn is_geodesic_of(&self, g: &Graph, table: &DistanceTable) -> bool {
        let vs = &self.0;
        vs.iter().all(|&v| v < g.order())
            && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && table.get(self.source(), self.target()) == Some(self.len() as u32)
    }
}

impl fmt::Display for Geodesic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn bfs_from(g: &Graph, s: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Every geodesic from `u` to `v` in lexicographic order of vertex sequence.
///
/// Fails with [`GraphError::CapExceeded`] instead of truncating when there
/// are more than `cap` of them.
pub fn enumerate_geodesics(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<Vec<Geodesic>, GraphError> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(GraphError::OutOfRange { vertex: w, n: g.order() });
        }
    }
    let to_target = bfs_from(g, v);
    expand(g, &to_target, u, v, cap)
}

/// Same as [`enumerate_geodesics`] but reads distances from a precomputed table.
pub fn geodesics_with_table(
    g: &Graph,
    table: &DistanceTable,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> Result<Vec<Geodesic>, GraphError> {
    expand(g, table.row(v), u, v, cap)
}

/// Number of geodesics between `u` and `v`, saturating at `u128::MAX`.
pub fn count_geodesics(g: &Graph, table: &DistanceTable, u: Vertex, v: Vertex) -> Option<u128> {
    let to_target = table.row(v);
    let d = to_target[u];
    if d == UNREACHABLE {
        return None;
    }
    Some(path_counts(g, to_target, u, d)[u])
}

// Number of shortest continuations from each vertex of the shortest-path
// DAG towards the target, restricted to vertices reachable from `u`.
fn path_counts(g: &Graph, to_target: &[u32], u: Vertex, d: u32) -> Vec<u128> {
    let n = g.order();
    // Layers of the DAG by distance from `u`.
    let mut layers: Vec<Vec<Vertex>> = vec![Vec::new(); d as usize + 1];
    let mut in_dag = vec![false; n];
    layers[0].push(u);
    in_dag[u] = true;
    for level in 0..d as usize {
        let (head, tail) = layers.split_at_mut(level + 1);
        for &x in &head[level] {
            for &w in g.neighbors(x) {
                if to_target[w] + 1 == to_target[x] && !in_dag[w] {
                    in_dag[w] = true;
                    tail[0].push(w);
                }
            }
        }
    }
    let mut counts = vec![0u128; n];
    for layer in layers.iter().rev() {
        for &x in layer {
            counts[x] = if to_target[x] == 0 {
                1
            } else {
                g.neighbors(x)
                    .iter()
                    .filter(|&&w| to_target[w] + 1 == to_target[x])
                    .fold(0u128, |acc, &w| acc.saturating_add(counts[w]))
            };
        }
    }
    counts
}

fn expand(g: &Graph, to_target: &[u32], u: Vertex, v: Vertex, cap: usize) -> Result<Vec<Geodesic>, GraphError> {
    let d = to_target[u];
    if d == UNREACHABLE {
        return Err(GraphError::Unreachable(u, v));
    }
    let counts = path_counts(g, to_target, u, d);
    if counts[u] > cap as u128 {
        return Err(GraphError::CapExceeded { u, v, cap });
    }

    let mut out = Vec::with_capacity(counts[u] as usize);
    let mut path = vec![u];
    // Neighbor lists are sorted, so depth-first expansion emits sequences
    // in lexicographic order.
    fn walk(g: &Graph, to_target: &[u32], path: &mut Vec<Vertex>, out: &mut Vec<Geodesic>) {
        let x = *path.last().unwrap();
        if to_target[x] == 0 {
            out.push(Geodesic(path.clone()));
            return;
        }
        for &w in g.neighbors(x) {
            if to_target[w] + 1 == to_target[x] {
                path.push(w);
                walk(g, to_target, path, out);
                path.pop();
            }
        }
    }
    walk(g, to_target, &mut path, &mut out);
    Ok(out)
}
