//! Generalized corona, edge corona and neighborhood corona products.
//!
//! Every product keeps the base graph on vertices `0..n` in its own order,
//! followed by the satellite copies in copy order, each copy laid out in the
//! vertex order of its source graph. Edge-corona copies follow the canonical
//! edge order of the base graph.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Iterated coronas larger than this are refused.
pub const ITERATED_VERTEX_LIMIT: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Copy `i` is joined to base vertex `i`.
    Corona,
    /// Copy `i` is joined to both ends of base edge `i`.
    EdgeCorona,
    /// Copy `i` is joined to every neighbor of base vertex `i`.
    NeighborhoodCorona,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Corona, Variant::EdgeCorona, Variant::NeighborhoodCorona];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Corona => "corona",
            Variant::EdgeCorona => "edge",
            Variant::NeighborhoodCorona => "neighborhood",
        }
    }

    /// Number of satellite copies the variant takes over `g`.
    pub fn copy_count(self, g: &Graph) -> usize {
        match self {
            Variant::EdgeCorona => g.size(),
            Variant::Corona | Variant::NeighborhoodCorona => g.order(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = ProductError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "corona" => Ok(Variant::Corona),
            "edge" | "edge-corona" => Ok(Variant::EdgeCorona),
            "neighborhood" | "neighbourhood" | "neighborhood-corona" => Ok(Variant::NeighborhoodCorona),
            _ => Err(ProductError::UnknownVariant(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("{variant} product over this base needs {expected} copies, got {got}")]
    ArityMismatch { variant: Variant, expected: usize, got: usize },
    #[error("base vertex {0} is isolated, its satellite copy would be disconnected")]
    DisconnectedResult(Vertex),
    #[error("product would have {vertices} vertices, above the limit of {cap}")]
    SizeCapExceeded { vertices: usize, cap: usize },
    #[error("unknown product variant `{0}`")]
    UnknownVariant(String),
    #[error("inconsistent labeling: {0}")]
    BadLabels(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoronaLabel {
    Base(usize),
    Satellite { copy: usize, index: usize },
}

/// A product graph whose vertices remember where they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaLabeledGraph {
    graph: Graph,
    labels: Vec<CoronaLabel>,
    variant: Variant,
    base_order: usize,
    copies: Vec<Range<Vertex>>,
    /// Edge-corona only: the base edge that owns each copy.
    copy_edges: Vec<(Vertex, Vertex)>,
}

impl CoronaLabeledGraph {
    /// Rebuilds a labeled product from a graph and per-vertex labels,
    /// checking the layout invariants.
    pub fn from_labels(graph: Graph, labels: Vec<CoronaLabel>, variant: Variant) -> Result<Self, ProductError> {
        let bad = |msg: String| Err(ProductError::BadLabels(msg));
        if labels.len() != graph.order() {
            return bad(format!("{} labels for {} vertices", labels.len(), graph.order()));
        }
        let base_order = labels.iter().take_while(|l| matches!(l, CoronaLabel::Base(_))).count();
        for (v, label) in labels.iter().enumerate().take(base_order) {
            if *label != CoronaLabel::Base(v) {
                return bad(format!("vertex {v} should be base {v}"));
            }
        }
        let mut copies: Vec<Range<Vertex>> = Vec::new();
        for (v, label) in labels.iter().enumerate().skip(base_order) {
            let CoronaLabel::Satellite { copy, index } = *label else {
                return bad(format!("base label at {v} after satellites started"));
            };
            if index == 0 && copy == copies.len() {
                copies.push(v..v + 1);
            } else if copy + 1 == copies.len() && index == copies[copy].len() {
                copies[copy].end = v + 1;
            } else {
                return bad(format!("satellite label at {v} breaks the copy layout"));
            }
        }
        let base = graph.induced(&(0..base_order).collect::<Vec<_>>());
        let copy_edges = if variant == Variant::EdgeCorona { base.edges().to_vec() } else { Vec::new() };
        if copies.len() != variant.copy_count(&base) {
            return Err(ProductError::ArityMismatch {
                variant,
                expected: variant.copy_count(&base),
                got: copies.len(),
            });
        }
        Ok(Self { graph, labels, variant, base_order, copies, copy_edges })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &[CoronaLabel] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> CoronaLabel {
        self.labels[v]
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn copy_count(&self) -> usize {
        self.copies.len()
    }

    /// Product vertices of satellite copy `copy`.
    pub fn copy_vertices(&self, copy: usize) -> Range<Vertex> {
        self.copies[copy].clone()
    }

    pub fn copy_edges(&self) -> &[(Vertex, Vertex)] {
        &self.copy_edges
    }

    /// Base vertices a satellite copy is joined to.
    pub fn attachment(&self, copy: usize) -> Vec<Vertex> {
        match self.variant {
            Variant::Corona => vec![copy],
            Variant::EdgeCorona => {
                let (a, b) = self.copy_edges[copy];
                vec![a, b]
            }
            Variant::NeighborhoodCorona => {
                self.graph.neighbors(copy).iter().copied().filter(|&w| w < self.base_order).collect()
            }
        }
    }

    pub fn vertex(&self, label: CoronaLabel) -> Option<Vertex> {
        match label {
            CoronaLabel::Base(i) => (i < self.base_order).then_some(i),
            CoronaLabel::Satellite { copy, index } => {
                let range = self.copies.get(copy)?;
                (index < range.len()).then_some(range.start + index)
            }
        }
    }
}

fn assemble(
    variant: Variant,
    g: &Graph,
    hs: &[Graph],
    attach: impl Fn(usize) -> Vec<Vertex>,
) -> Result<CoronaLabeledGraph, ProductError> {
    let expected = variant.copy_count(g);
    if hs.len() != expected {
        return Err(ProductError::ArityMismatch { variant, expected, got: hs.len() });
    }
    let n = g.order();
    let mut labels: Vec<CoronaLabel> = (0..n).map(CoronaLabel::Base).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut copies = Vec::with_capacity(hs.len());
    let mut offset = n;
    for (copy, h) in hs.iter().enumerate() {
        edges.extend(h.edges().iter().map(|&(a, b)| (offset + a, offset + b)));
        let joins = attach(copy);
        for index in 0..h.order() {
            labels.push(CoronaLabel::Satellite { copy, index });
            edges.extend(joins.iter().map(|&u| (u, offset + index)));
        }
        copies.push(offset..offset + h.order());
        offset += h.order();
    }
    let graph = Graph::new(offset, edges).expect("product edges stay in range");
    let copy_edges = if variant == Variant::EdgeCorona { g.edges().to_vec() } else { Vec::new() };
    Ok(CoronaLabeledGraph { graph, labels, variant, base_order: n, copies, copy_edges })
}

pub fn generalized_corona(g: &Graph, hs: &[Graph]) -> Result<CoronaLabeledGraph, ProductError> {
    assemble(Variant::Corona, g, hs, |i| vec![i])
}

pub fn generalized_edge_corona(g: &Graph, hs: &[Graph]) -> Result<CoronaLabeledGraph, ProductError> {
    assemble(Variant::EdgeCorona, g, hs, |i| {
        let (a, b) = g.edges()[i];
        vec![a, b]
    })
}

pub fn generalized_neighborhood_corona(g: &Graph, hs: &[Graph]) -> Result<CoronaLabeledGraph, ProductError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        if hs.len() == g.order() {
            return Err(ProductError::DisconnectedResult(v));
        }
    }
    assemble(Variant::NeighborhoodCorona, g, hs, |i| g.neighbors(i).to_vec())
}

pub fn product(variant: Variant, g: &Graph, hs: &[Graph]) -> Result<CoronaLabeledGraph, ProductError> {
    match variant {
        Variant::Corona => generalized_corona(g, hs),
        Variant::EdgeCorona => generalized_edge_corona(g, hs),
        Variant::NeighborhoodCorona => generalized_neighborhood_corona(g, hs),
    }
}

/// Product with the same graph `h` in every copy.
pub fn uniform(variant: Variant, g: &Graph, h: &Graph) -> Result<CoronaLabeledGraph, ProductError> {
    product(variant, g, &vec![h.clone(); variant.copy_count(g)])
}

/// `G^(0) = G`, `G^(m+1) = G^(m) ∘ G`; `G^(m)` has `n(n+1)^m` vertices.
pub fn iterated_corona(g: &Graph, m: u32) -> Result<Graph, ProductError> {
    let n = g.order();
    let vertices =
        (n + 1).checked_pow(m).and_then(|f| f.checked_mul(n)).filter(|&v| v <= ITERATED_VERTEX_LIMIT).ok_or(
            ProductError::SizeCapExceeded {
                vertices: n.saturating_mul((n + 1).saturating_pow(m)),
                cap: ITERATED_VERTEX_LIMIT,
            },
        )?;
    let mut current = g.clone();
    for _ in 0..m {
        current = uniform(Variant::Corona, &current, g)?.into_graph();
    }
    debug_assert_eq!(current.order(), vertices);
    Ok(current)
}
