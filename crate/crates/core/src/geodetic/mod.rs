//! Exact geodetic, strong geodetic and strong 2-geodetic sets.
//!
//! A set `S` is *strong geodetic* when one geodesic can be fixed for every
//! pair of `S` so that the fixed geodesics, together with `S`, cover every
//! vertex. With [`LengthBound::AtMost`] only pairs within the bound are
//! given a geodesic; farther pairs contribute nothing.

mod certificate;
mod oracle;
mod search;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, DEFAULT_GEODESIC_CAP};

pub use certificate::{Certificate, CertificateError};
pub use oracle::{naive_assign, naive_oracle, ORACLE_LIMIT};
pub use search::Solver;

/// Largest graph the bitset-based search can represent.
pub const MAX_SEARCH_ORDER: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LengthBound {
    #[default]
    Unbounded,
    /// Only pairs at distance `1..=k` receive a geodesic.
    AtMost(u32),
}

impl LengthBound {
    /// The 2-geodesic restriction.
    pub const TWO: LengthBound = LengthBound::AtMost(2);

    pub fn admits(self, distance: u32) -> bool {
        match self {
            LengthBound::Unbounded => true,
            LengthBound::AtMost(k) => distance <= k,
        }
    }
}

impl fmt::Display for LengthBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthBound::Unbounded => f.write_str("unbounded"),
            LengthBound::AtMost(k) => write!(f, "at most {k}"),
        }
    }
}

/// Vertices that every candidate set is seeded with during minimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ForcedVertices {
    /// Plain size-ordered enumeration.
    None,
    /// Degree-one vertices.
    Pendant,
    /// Vertices with a clique neighborhood (superset of the pendant ones).
    #[default]
    Simplicial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    /// Minimization refuses graphs with more vertices than this.
    pub max_vertices: usize,
    /// Per-pair geodesic enumeration cap.
    pub geodesic_cap: usize,
    /// Backtracking nodes allowed per solver call.
    pub node_budget: u64,
    pub forced: ForcedVertices,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            max_vertices: 20,
            geodesic_cap: DEFAULT_GEODESIC_CAP,
            node_budget: 10_000_000,
            forced: ForcedVertices::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has {0} vertex(es); at least two are required")]
    Degenerate(usize),
    #[error("graph has {n} vertices, above the solve cap of {cap}")]
    VertexCap { n: usize, cap: usize },
    #[error("search exceeded the node budget of {0}")]
    NodeBudget(u64),
    #[error("geodesic enumeration: {0}")]
    Geodesic(#[from] GraphError),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("naive oracle would enumerate {0} assignments")]
    OracleBlowup(u128),
}

impl SolveError {
    /// True for errors caused by configured caps rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            SolveError::VertexCap { .. }
                | SolveError::NodeBudget(_)
                | SolveError::OracleBlowup(_)
                | SolveError::Geodesic(GraphError::CapExceeded { .. })
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub number: usize,
    pub certificate: Certificate,
    /// Candidate sets tested.
    pub explored: u64,
}

pub fn check_strong_geodetic(g: &Graph, set: &[Vertex], bound: LengthBound) -> Result<Option<Certificate>, SolveError> {
    Solver::new(g, SolveConfig::default())?.check(set, bound)
}

pub fn strong_geodetic_number(g: &Graph, bound: LengthBound) -> Result<SolveResult, SolveError> {
    Solver::new(g, SolveConfig::default())?.minimum(bound)
}

pub fn geodetic_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(Solver::new(g, SolveConfig::default())?.geodetic_basis()?.len())
}
