use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Certificate, ForcedVertices, LengthBound, SolveConfig, SolveError, SolveResult, MAX_SEARCH_ORDER};
use crate::graph::{distances, geodesics_with_table, pendant_vertices, simplicial_vertices};
use crate::graph::{DistanceTable, Geodesic, Graph, Vertex};

pub(crate) type Mask = u128;

pub(crate) fn bit(v: Vertex) -> Mask {
    1 << v
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn mask_of(vertices: &[Vertex]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

pub(crate) fn bits(mut mask: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as Vertex;
        mask &= mask - 1;
        Some(v)
    })
}

struct PairOptions {
    geodesics: Vec<Geodesic>,
    interiors: Vec<Mask>,
}

/// Exact search over a fixed connected graph.
///
/// Geodesic lists are enumerated lazily per pair and cached, so one solver
/// can answer many membership queries cheaply. The solver is `Sync`.
pub struct Solver<'g> {
    graph: &'g Graph,
    table: DistanceTable,
    config: SolveConfig,
    /// Interior vertices of the geodesic interval of every ordered pair.
    interval: Vec<Mask>,
    pairs: Vec<OnceLock<Result<PairOptions, SolveError>>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Leaf {
    /// Union of all geodesics of all pairs covers the graph.
    Closure,
    /// One fixed geodesic per pair covers the graph.
    Strong,
}

struct Enumeration<'a> {
    free: &'a [Vertex],
    eligible_interval: &'a [Mask],
    cover_from: Vec<Mask>,
    full: Mask,
    bound: LengthBound,
    leaf: Leaf,
    nodes: u64,
    explored: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, config: SolveConfig) -> Result<Self, SolveError> {
        let n = graph.order();
        if n > MAX_SEARCH_ORDER {
            return Err(SolveError::VertexCap { n, cap: MAX_SEARCH_ORDER });
        }
        if !graph.is_connected() {
            return Err(SolveError::NotConnected);
        }
        let table = distances(graph);
        let mut interval = vec![0; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let d = table.raw(u, v);
                let m = (0..n)
                    .filter(|&w| w != u && w != v && table.raw(u, w) + table.raw(w, v) == d)
                    .fold(0, |m, w| m | bit(w));
                interval[u * n + v] = m;
                interval[v * n + u] = m;
            }
        }
        let pairs = (0..n * n).map(|_| OnceLock::new()).collect();
        Ok(Self { graph, table, config, interval, pairs })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn table(&self) -> &DistanceTable {
        &self.table
    }

    pub fn config(&self) -> &SolveConfig {
        &self.config
    }

    fn options(&self, u: Vertex, v: Vertex) -> Result<&PairOptions, SolveError> {
        let (u, v) = (u.min(v), u.max(v));
        let slot = &self.pairs[u * self.graph.order() + v];
        slot.get_or_init(|| {
            let geodesics = geodesics_with_table(self.graph, &self.table, u, v, self.config.geodesic_cap)?;
            let interiors = geodesics.iter().map(|p| mask_of(p.interior())).collect();
            Ok(PairOptions { geodesics, interiors })
        })
        .as_ref()
        .map_err(Clone::clone)
    }

    /// All geodesics between `u` and `v` (oriented from `min` to `max`),
    /// lexicographically ordered.
    pub fn geodesics(&self, u: Vertex, v: Vertex) -> Result<&[Geodesic], SolveError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(&self.options(u, v)?.geodesics)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), SolveError> {
        if v >= self.graph.order() {
            return Err(SolveError::OutOfRange { vertex: v, n: self.graph.order() });
        }
        Ok(())
    }

    /// Picks one geodesic per listed pair so that every vertex of
    /// `required` lies in the interior of some picked geodesic.
    pub fn assign(&self, pairs: &[(Vertex, Vertex)], required: &[Vertex]) -> Result<Option<Vec<Geodesic>>, SolveError> {
        for &(u, v) in pairs {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
        }
        for &v in required {
            self.check_vertex(v)?;
        }
        let mut nodes = 0;
        let picks = self.search(pairs, mask_of(required), &mut nodes)?;
        Ok(picks.map(|picks| {
            pairs
                .iter()
                .zip(picks)
                .map(|(&(u, v), k)| self.options(u, v).expect("cached by search").geodesics[k].clone())
                .collect()
        }))
    }

    /// Decides whether `set` is a strong geodetic set under `bound` and
    /// returns the lexicographically least assignment when it is.
    pub fn check(&self, set: &[Vertex], bound: LengthBound) -> Result<Option<Certificate>, SolveError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut nodes = 0;
        self.check_mask(mask_of(set), bound, &mut nodes)
    }

    fn eligible_pairs(&self, set: Mask, bound: LengthBound) -> Vec<(Vertex, Vertex)> {
        let members: Vec<Vertex> = bits(set).collect();
        let mut pairs = Vec::new();
        for (i, &s) in members.iter().enumerate() {
            for &t in &members[i + 1..] {
                if bound.admits(self.table.raw(s, t)) {
                    pairs.push((s, t));
                }
            }
        }
        pairs
    }

    fn check_mask(&self, set: Mask, bound: LengthBound, nodes: &mut u64) -> Result<Option<Certificate>, SolveError> {
        let pairs = self.eligible_pairs(set, bound);
        let need = full_mask(self.graph.order()) & !set;
        let Some(picks) = self.search(&pairs, need, nodes)? else {
            return Ok(None);
        };
        let mut assignment = BTreeMap::new();
        let mut covered = set;
        for (&(s, t), k) in pairs.iter().zip(picks) {
            let opts = self.options(s, t)?;
            covered |= opts.interiors[k];
            assignment.insert((s, t), opts.geodesics[k].clone());
        }
        Ok(Some(Certificate::from_parts(bits(set).collect(), assignment, bits(covered).collect())))
    }

    /// Lexicographically least choice vector (pairs in input order, options
    /// in geodesic order) that covers `need`, or `None`.
    fn search(
        &self,
        pairs: &[(Vertex, Vertex)],
        need: Mask,
        nodes: &mut u64,
    ) -> Result<Option<Vec<usize>>, SolveError> {
        let Some(mut best) = self.feasible(pairs, need, nodes)? else {
            return Ok(None);
        };
        let mut fixed = vec![None; pairs.len()];
        for i in 0..pairs.len() {
            for k in 0..best[i] {
                fixed[i] = Some(k);
                if let Some(found) = self.solve(pairs, need, &fixed, nodes)? {
                    best = found;
                    break;
                }
            }
            fixed[i] = Some(best[i]);
        }
        Ok(Some(best))
    }

    /// Any covering choice vector, without canonicalization.
    fn feasible(
        &self,
        pairs: &[(Vertex, Vertex)],
        need: Mask,
        nodes: &mut u64,
    ) -> Result<Option<Vec<usize>>, SolveError> {
        self.solve(pairs, need, &vec![None; pairs.len()], nodes)
    }

    fn solve(
        &self,
        pairs: &[(Vertex, Vertex)],
        need: Mask,
        fixed: &[Option<usize>],
        nodes: &mut u64,
    ) -> Result<Option<Vec<usize>>, SolveError> {
        let mut choice = vec![0; pairs.len()];
        let mut covered: Mask = 0;
        let mut slots = Vec::new();
        let mut slot_pair = Vec::new();
        for (i, &(s, t)) in pairs.iter().enumerate() {
            let restricted: Vec<Mask> = self.options(s, t)?.interiors.iter().map(|m| m & need).collect();
            if let Some(k) = fixed[i] {
                choice[i] = k;
                covered |= restricted[k];
            } else if restricted.iter().all(|&m| m == restricted[0]) {
                covered |= restricted[0];
            } else {
                slots.push(restricted);
                slot_pair.push(i);
            }
        }
        let mut cover =
            Cover { slots: &slots, picked: vec![None; slots.len()], need, budget: self.config.node_budget, nodes };
        if !cover.run(covered)? {
            return Ok(None);
        }
        for (slot, pick) in cover.picked.iter().enumerate() {
            choice[slot_pair[slot]] = pick.unwrap_or(0);
        }
        Ok(Some(choice))
    }

    /// Minimum strong (or strong `k`-) geodetic set, smallest size first and
    /// lexicographically least basis within that size.
    pub fn minimum(&self, bound: LengthBound) -> Result<SolveResult, SolveError> {
        let n = self.graph.order();
        if n < 2 {
            return Err(SolveError::Degenerate(n));
        }
        if n > self.config.max_vertices {
            return Err(SolveError::VertexCap { n, cap: self.config.max_vertices });
        }
        let diam = self.table.diameter().expect("connected");
        let longest = match bound {
            LengthBound::Unbounded => diam,
            LengthBound::AtMost(k) => k.min(diam),
        } as usize;

        let forced = self.forced();
        let mut run = self.enumeration(&forced, bound, Leaf::Strong);
        for k in forced.len().max(2)..=n {
            // Each pair's geodesic has at most `longest - 1` interior vertices.
            if k + k * (k - 1) / 2 * longest.saturating_sub(1) < n {
                continue;
            }
            if let Some(set) = run.first_of_size(self, mask_of(&forced), k - forced.len())? {
                let mut nodes = run.nodes;
                let certificate = self.check_mask(set, bound, &mut nodes)?.expect("accepted by search");
                return Ok(SolveResult { number: k, certificate, explored: run.explored });
            }
        }
        unreachable!("the whole vertex set is always strong geodetic")
    }

    /// Minimum geodetic set: pairs contribute all of their geodesics.
    pub fn geodetic_basis(&self) -> Result<Vec<Vertex>, SolveError> {
        let n = self.graph.order();
        if n < 2 {
            return Err(SolveError::Degenerate(n));
        }
        if n > self.config.max_vertices {
            return Err(SolveError::VertexCap { n, cap: self.config.max_vertices });
        }
        let forced = self.forced();
        let mut run = self.enumeration(&forced, LengthBound::Unbounded, Leaf::Closure);
        for k in forced.len().max(2)..=n {
            if let Some(set) = run.first_of_size(self, mask_of(&forced), k - forced.len())? {
                return Ok(bits(set).collect());
            }
        }
        unreachable!("the whole vertex set is always geodetic")
    }

    fn forced(&self) -> Vec<Vertex> {
        match self.config.forced {
            ForcedVertices::None => Vec::new(),
            ForcedVertices::Pendant => pendant_vertices(self.graph),
            ForcedVertices::Simplicial => simplicial_vertices(self.graph),
        }
    }

    fn enumeration(&self, forced: &[Vertex], bound: LengthBound, leaf: Leaf) -> EnumerationOwned {
        let n = self.graph.order();
        let eligible_interval: Vec<Mask> =
            (0..n * n).map(|i| if bound.admits(self.table.raw(i / n, i % n)) { self.interval[i] } else { 0 }).collect();
        let forced_mask = mask_of(forced);
        let free: Vec<Vertex> = (0..n).filter(|&v| forced_mask & bit(v) == 0).collect();
        EnumerationOwned { free, eligible_interval, bound, leaf, nodes: 0, explored: 0 }
    }
}

struct EnumerationOwned {
    free: Vec<Vertex>,
    eligible_interval: Vec<Mask>,
    bound: LengthBound,
    leaf: Leaf,
    nodes: u64,
    explored: u64,
}

impl EnumerationOwned {
    /// First set (in lexicographic order) made of the forced vertices plus
    /// `extra` free vertices that passes the leaf test.
    fn first_of_size(&mut self, solver: &Solver<'_>, forced: Mask, extra: usize) -> Result<Option<Mask>, SolveError> {
        let n = solver.graph.order();
        let mut cover_from = vec![0; self.free.len() + 1];
        for i in (0..self.free.len()).rev() {
            let x = self.free[i];
            let reach = self.eligible_interval[x * n..(x + 1) * n].iter().fold(bit(x), |m, &o| m | o);
            cover_from[i] = cover_from[i + 1] | reach;
        }
        let mut closure = forced;
        let members: Vec<Vertex> = bits(forced).collect();
        for (i, &s) in members.iter().enumerate() {
            for &t in &members[i + 1..] {
                closure |= self.eligible_interval[s * n + t];
            }
        }
        let mut run = Enumeration {
            free: &self.free,
            eligible_interval: &self.eligible_interval,
            cover_from,
            full: full_mask(n),
            bound: self.bound,
            leaf: self.leaf,
            nodes: self.nodes,
            explored: self.explored,
        };
        let mut chosen = members;
        let found = run.descend(solver, 0, extra, &mut chosen, forced, closure);
        self.nodes = run.nodes;
        self.explored = run.explored;
        found
    }
}

impl Enumeration<'_> {
    fn descend(
        &mut self,
        solver: &Solver<'_>,
        pos: usize,
        remaining: usize,
        chosen: &mut Vec<Vertex>,
        set: Mask,
        closure: Mask,
    ) -> Result<Option<Mask>, SolveError> {
        if remaining == 0 {
            self.explored += 1;
            if closure != self.full {
                return Ok(None);
            }
            return match self.leaf {
                Leaf::Closure => Ok(Some(set)),
                Leaf::Strong => {
                    let pairs = solver.eligible_pairs(set, self.bound);
                    let accepted = solver.feasible(&pairs, self.full & !set, &mut self.nodes)?.is_some();
                    Ok(accepted.then_some(set))
                }
            };
        }
        if pos + remaining > self.free.len() {
            return Ok(None);
        }
        // Vertices still uncovered must be reachable from some future choice.
        if self.full & !closure & !self.cover_from[pos] != 0 {
            return Ok(None);
        }
        let n = solver.graph.order();
        for idx in pos..=self.free.len() - remaining {
            let x = self.free[idx];
            let row = &self.eligible_interval[x * n..(x + 1) * n];
            let next = chosen.iter().fold(closure | bit(x), |m, &s| m | row[s]);
            chosen.push(x);
            let found = self.descend(solver, idx + 1, remaining - 1, chosen, set | bit(x), next)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Exact-cover style search: branch on the uncovered vertex with the fewest
/// (pair, geodesic) options reaching it.
struct Cover<'a> {
    slots: &'a [Vec<Mask>],
    picked: Vec<Option<usize>>,
    need: Mask,
    budget: u64,
    nodes: &'a mut u64,
}

impl Cover<'_> {
    fn run(&mut self, covered: Mask) -> Result<bool, SolveError> {
        let open = self.need & !covered;
        if open == 0 {
            return Ok(true);
        }
        let mut target = None;
        let mut fewest = usize::MAX;
        for w in bits(open) {
            let count: usize = self
                .slots
                .iter()
                .zip(&self.picked)
                .filter(|(_, p)| p.is_none())
                .map(|(opts, _)| opts.iter().filter(|&&m| m & bit(w) != 0).count())
                .sum();
            if count == 0 {
                return Ok(false);
            }
            if count < fewest {
                fewest = count;
                target = Some(w);
                if count == 1 {
                    break;
                }
            }
        }
        let w = target.expect("open is non-empty");

        let mut branches = Vec::with_capacity(fewest);
        for (slot, opts) in self.slots.iter().enumerate() {
            if self.picked[slot].is_some() {
                continue;
            }
            for (k, &m) in opts.iter().enumerate() {
                if m & bit(w) == 0 {
                    continue;
                }
                let gain = m & open;
                // Another choice of the same pair covering strictly more (or the
                // same, earlier) is never worse.
                let dominated = opts.iter().enumerate().any(|(j, &o)| {
                    let other = o & open;
                    j != k && gain & !other == 0 && (other != gain || j < k)
                });
                if !dominated {
                    branches.push((slot, k, m));
                }
            }
        }
        for (slot, k, m) in branches {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(SolveError::NodeBudget(self.budget));
            }
            self.picked[slot] = Some(k);
            if self.run(covered | m)? {
                return Ok(true);
            }
            self.picked[slot] = None;
        }
        Ok(false)
    }
}
