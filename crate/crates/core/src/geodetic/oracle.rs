//! Flat enumeration of every geodesic assignment, used to cross-check the
//! backtracking search.

use std::collections::BTreeMap;

use super::{Certificate, LengthBound, SolveError};
use crate::graph::{distances, Geodesic, Graph, Vertex};

/// Largest number of assignments the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 1_000_000;

/// Simple paths from `s` to `t` with exactly `len` edges, found by plain
/// depth-limited search without any distance guidance.
fn paths_of_length(g: &Graph, s: Vertex, t: Vertex, len: usize) -> Vec<Vec<Vertex>> {
    fn walk(g: &Graph, t: Vertex, len: usize, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let x = *path.last().unwrap();
        if path.len() == len + 1 {
            if x == t {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(x) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, t, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, t, len, &mut vec![s], &mut out);
    out
}

/// Same contract as [`super::check_strong_geodetic`] on Some/None, decided by
/// trying every combination of one geodesic per eligible pair.
pub fn naive_oracle(g: &Graph, set: &[Vertex], bound: LengthBound) -> Result<Option<Certificate>, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.order()) {
        return Err(SolveError::OutOfRange { vertex: v, n: g.order() });
    }
    let mut basis = set.to_vec();
    basis.sort_unstable();
    basis.dedup();

    let table = distances(g);
    let mut pairs = Vec::new();
    for (i, &s) in basis.iter().enumerate() {
        for &t in &basis[i + 1..] {
            if bound.admits(table.raw(s, t)) {
                pairs.push((s, t));
            }
        }
    }
    let required: Vec<Vertex> = g.vertices().filter(|v| basis.binary_search(v).is_err()).collect();
    let Some(paths) = naive_assign(g, &pairs, &required)? else {
        return Ok(None);
    };
    let assignment: BTreeMap<_, _> = pairs.into_iter().zip(paths).collect();
    Ok(Some(Certificate::new(basis, assignment)))
}

/// One shortest path per listed pair such that every `required` vertex lies
/// on some chosen path, found by flat enumeration of all combinations.
pub fn naive_assign(
    g: &Graph,
    pairs: &[(Vertex, Vertex)],
    required: &[Vertex],
) -> Result<Option<Vec<Geodesic>>, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    if let Some(v) = pairs.iter().flat_map(|&(s, t)| [s, t]).chain(required.iter().copied()).find(|&v| v >= g.order()) {
        return Err(SolveError::OutOfRange { vertex: v, n: g.order() });
    }
    let table = distances(g);
    let mut choices = Vec::with_capacity(pairs.len());
    let mut total: u128 = 1;
    for &(s, t) in pairs {
        let paths = paths_of_length(g, s, t, table.raw(s, t) as usize);
        total = total.saturating_mul(paths.len() as u128);
        if total > ORACLE_LIMIT {
            return Err(SolveError::OracleBlowup(total));
        }
        choices.push(paths);
    }

    let mut index = vec![0usize; pairs.len()];
    loop {
        let mut covered = vec![false; g.order()];
        for (paths, &k) in choices.iter().zip(&index) {
            for &v in &paths[k] {
                covered[v] = true;
            }
        }
        if required.iter().all(|&v| covered[v]) {
            let picked = choices.iter().zip(&index).map(|(paths, &k)| Geodesic::from_vertices(paths[k].clone()));
            return Ok(Some(picked.collect()));
        }
        // Odometer step, last pair fastest.
        let mut pos = index.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < choices[pos].len() {
                break;
            }
            index[pos] = 0;
        }
    }
}
