use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use super::LengthBound;
use crate::graph::{distances, Geodesic, Graph, Vertex};

/// A strong geodetic set together with the geodesic fixed for each pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    basis: Vec<Vertex>,
    assignment: BTreeMap<(Vertex, Vertex), Geodesic>,
    covered: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("basis must be strictly increasing")]
    UnsortedBasis,
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
    #[error("pair ({0}, {1}) has no assigned geodesic")]
    MissingPair(Vertex, Vertex),
    #[error("pair ({0}, {1}) is not an eligible basis pair")]
    UnexpectedPair(Vertex, Vertex),
    #[error("path assigned to ({0}, {1}) is not a geodesic between them")]
    NotGeodesic(Vertex, Vertex),
    #[error("vertex {0} is not covered")]
    Uncovered(Vertex),
    #[error("graph is not connected")]
    NotConnected,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

impl Certificate {
    pub(crate) fn from_parts(
        basis: Vec<Vertex>,
        assignment: BTreeMap<(Vertex, Vertex), Geodesic>,
        covered: Vec<Vertex>,
    ) -> Self {
        Self { basis, assignment, covered }
    }

    /// Builds a certificate from a basis and assignment, computing coverage.
    pub fn new(mut basis: Vec<Vertex>, assignment: BTreeMap<(Vertex, Vertex), Geodesic>) -> Self {
        basis.sort_unstable();
        basis.dedup();
        let mut covered: Vec<Vertex> =
            basis.iter().copied().chain(assignment.values().flat_map(|g| g.vertices().iter().copied())).collect();
        covered.sort_unstable();
        covered.dedup();
        Self { basis, assignment, covered }
    }

    pub fn basis(&self) -> &[Vertex] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Fixed geodesic per unordered pair `(s, t)`, `s < t`.
    pub fn assignment(&self) -> &BTreeMap<(Vertex, Vertex), Geodesic> {
        &self.assignment
    }

    /// Vertices of the basis plus every vertex on an assigned geodesic.
    pub fn covered(&self) -> &[Vertex] {
        &self.covered
    }

    /// Maps every vertex through `f`; used to lift a certificate of a copy
    /// into a product graph.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Certificate {
        let assignment = self
            .assignment
            .values()
            .map(|g| {
                let vs: Vec<Vertex> = g.vertices().iter().map(|&v| f(v)).collect();
                let (a, b) = (vs[0], vs[vs.len() - 1]);
                let vs = if a <= b { vs } else { vs.into_iter().rev().collect() };
                ((a.min(b), a.max(b)), Geodesic::from_vertices(vs))
            })
            .collect();
        Certificate::new(self.basis.iter().map(|&v| f(v)).collect(), assignment)
    }

    /// Independent validity check: every eligible pair carries exactly one
    /// geodesic of `g` between its endpoints, no other pair is assigned, and
    /// the basis plus the assigned geodesics cover every vertex.
    pub fn verify(&self, g: &Graph, bound: LengthBound) -> Result<(), CertificateError> {
        if !g.is_connected() {
            return Err(CertificateError::NotConnected);
        }
        if self.basis.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CertificateError::UnsortedBasis);
        }
        if let Some(&v) = self.basis.iter().find(|&&v| v >= g.order()) {
            return Err(CertificateError::OutOfRange(v));
        }
        let table = distances(g);
        let mut covered = vec![false; g.order()];
        let mut matched = 0;
        for &v in &self.basis {
            covered[v] = true;
        }
        for (i, &s) in self.basis.iter().enumerate() {
            for &t in &self.basis[i + 1..] {
                let eligible = bound.admits(table.raw(s, t));
                match (eligible, self.assignment.get(&(s, t))) {
                    (true, None) => return Err(CertificateError::MissingPair(s, t)),
                    (false, Some(_)) => return Err(CertificateError::UnexpectedPair(s, t)),
                    (false, None) => {}
                    (true, Some(path)) => {
                        if path.source() != s || path.target() != t || !path.is_geodesic_of(g, &table) {
                            return Err(CertificateError::NotGeodesic(s, t));
                        }
                        for &v in path.vertices() {
                            covered[v] = true;
                        }
                        matched += 1;
                    }
                }
            }
        }
        if self.assignment.len() > matched {
            let &(s, t) = self
                .assignment
                .keys()
                .find(|(s, t)| self.basis.binary_search(s).is_err() || self.basis.binary_search(t).is_err())
                .expect("an assigned pair outside the basis");
            return Err(CertificateError::UnexpectedPair(s, t));
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(CertificateError::Uncovered(v));
        }
        Ok(())
    }

    /// Text form: a `basis` line followed by one `s t : v0 v1 ... vk` line per pair.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Certificate, CertificateError> {
        let mut basis: Option<Vec<Vertex>> = None;
        let mut assignment = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let syntax = |message: &str| CertificateError::Syntax { line: line_no, message: message.to_string() };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let numbers = |s: &str| -> Result<Vec<Vertex>, CertificateError> {
                s.split_whitespace()
                    .map(|tok| tok.parse().map_err(|_| syntax(&format!("bad vertex `{tok}`"))))
                    .collect()
            };
            if let Some(rest) = line.strip_prefix("basis") {
                if basis.is_some() {
                    return Err(syntax("duplicate basis line"));
                }
                basis = Some(numbers(rest)?);
                continue;
            }
            if basis.is_none() {
                return Err(syntax("expected a basis line first"));
            }
            let (head, path) = line.split_once(':').ok_or_else(|| syntax("expected `s t : path`"))?;
            let ends = numbers(head)?;
            let path = numbers(path)?;
            let [s, t] = ends[..] else {
                return Err(syntax("expected exactly two pair vertices"));
            };
            if s >= t || path.is_empty() {
                return Err(syntax("pair must satisfy s < t and carry a path"));
            }
            if assignment.insert((s, t), Geodesic::from_vertices(path)).is_some() {
                return Err(syntax("duplicate pair"));
            }
        }
        let basis = basis.ok_or(CertificateError::Syntax { line: 0, message: "missing basis line".into() })?;
        Ok(Certificate::new(basis, assignment))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("basis");
        for v in &self.basis {
            write!(out, " {v}")?;
        }
        writeln!(f, "{out}")?;
        for ((s, t), path) in &self.assignment {
            writeln!(f, "{s} {t} : {path}")?;
        }
        Ok(())
    }
}
