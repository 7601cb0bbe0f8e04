//! Checks of the corona-product claims against exact solver output.
//!
//! Each checker returns an [`AuditReport`] with a PASS, FAIL or SKIPPED
//! verdict. A FAIL always carries a [`Witness`] that can be re-checked with
//! [`AuditReport::reverify`], which uses only the naive oracle and an
//! all-pairs distance table built independently of the BFS code.

mod claims;
mod report;
mod suite;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::format::format_set;
use crate::geodetic::{naive_assign, naive_oracle, Certificate, LengthBound, SolveError};
use crate::graph::{Graph, Vertex};

pub use claims::{
    audit_lemma0, audit_product, audit_props, audit_result1, audit_theorem1, audit_theorem1a, audit_theorem2,
    audit_theorem3, compute_a,
};
pub use report::{render, write_csv, OutputFormat};
pub use suite::{audit_suite, ConfigError, GraphSpec, Instance, InstanceKind, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Lemma0,
    Result1,
    Lemma1,
    Lemma2,
    Lemma3,
    Theorem1,
    Corollary1,
    Prop1,
    Theorem1a,
    Lemma4,
    Lemma5,
    Theorem2,
    Corollary2,
    Lemma6,
    Lemma7,
    Theorem3,
    Corollary3,
    Prop3,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::Lemma0,
        ClaimId::Result1,
        ClaimId::Lemma1,
        ClaimId::Lemma2,
        ClaimId::Lemma3,
        ClaimId::Theorem1,
        ClaimId::Corollary1,
        ClaimId::Prop1,
        ClaimId::Theorem1a,
        ClaimId::Lemma4,
        ClaimId::Lemma5,
        ClaimId::Theorem2,
        ClaimId::Corollary2,
        ClaimId::Lemma6,
        ClaimId::Lemma7,
        ClaimId::Theorem3,
        ClaimId::Corollary3,
        ClaimId::Prop3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Lemma0 => "Lemma0",
            ClaimId::Result1 => "Result1",
            ClaimId::Lemma1 => "Lemma1",
            ClaimId::Lemma2 => "Lemma2",
            ClaimId::Lemma3 => "Lemma3",
            ClaimId::Theorem1 => "Theorem1",
            ClaimId::Corollary1 => "Corollary1",
            ClaimId::Prop1 => "Prop1",
            ClaimId::Theorem1a => "Theorem1a",
            ClaimId::Lemma4 => "Lemma4",
            ClaimId::Lemma5 => "Lemma5",
            ClaimId::Theorem2 => "Theorem2",
            ClaimId::Corollary2 => "Corollary2",
            ClaimId::Lemma6 => "Lemma6",
            ClaimId::Lemma7 => "Lemma7",
            ClaimId::Theorem3 => "Theorem3",
            ClaimId::Corollary3 => "Corollary3",
            ClaimId::Prop3 => "Prop3",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim `{0}`")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkipReason {
    /// The claim's hypothesis does not hold on this instance.
    Precondition,
    /// A copy or graph is too small for the invariant to be defined.
    Degenerate,
    /// A vertex, node or enumeration cap was hit.
    ResourceCap,
    /// The claim says nothing about this kind of instance.
    NotApplicable,
    /// The instance itself could not be built or is malformed.
    InvalidInstance,
}

impl SkipReason {
    pub fn name(self) -> &'static str {
        match self {
            SkipReason::Precondition => "precondition",
            SkipReason::Degenerate => "degenerate",
            SkipReason::ResourceCap => "resource-cap",
            SkipReason::NotApplicable => "not-applicable",
            SkipReason::InvalidInstance => "invalid-instance",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(SkipReason),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Skipped(r) => write!(f, "SKIPPED({})", r.name()),
        }
    }
}

/// Counterexample data attached to a FAIL.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A valid certificate the claim says cannot exist (for example a basis
    /// smaller than the formula, or one missing a pendant vertex).
    Valid {
        certificate: Certificate,
        bound: LengthBound,
    },
    /// A set the claim says is strong geodetic but is not. `uncovered` is a
    /// vertex on no geodesic of any pair, when one exists.
    Rejected {
        set: Vec<Vertex>,
        bound: LengthBound,
        uncovered: Option<Vertex>,
    },
    /// `vertex` lies on no geodesic between `s` and `t`.
    NotOnGeodesic {
        s: Vertex,
        t: Vertex,
        vertex: Vertex,
    },
    /// `vertex` lies on some geodesic between `s` and `t`.
    OnGeodesic {
        s: Vertex,
        t: Vertex,
        vertex: Vertex,
    },
    Distance {
        u: Vertex,
        v: Vertex,
        expected: u32,
        actual: u32,
    },
    Diameter {
        expected: u32,
        actual: u32,
    },
    /// Whether `pair` realizes the diameter, against the claim.
    Antipodality {
        pair: (Vertex, Vertex),
        expected: bool,
        actual: bool,
    },
    /// The pendant-slack computation disagrees with direct search on the
    /// product: can `pairs` be given geodesics covering all of `required`?
    Slack {
        pendant: Vertex,
        in_a: bool,
        pairs: Vec<(Vertex, Vertex)>,
        required: Vec<Vertex>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Valid { certificate, bound } => {
                write!(f, "valid set {} ({bound})", format_set(certificate.basis()))
            }
            Witness::Rejected { set, bound, uncovered } => {
                write!(f, "rejected set {} ({bound})", format_set(set))?;
                if let Some(v) = uncovered {
                    write!(f, ", vertex {v} on no pair geodesic")?;
                }
                Ok(())
            }
            Witness::NotOnGeodesic { s, t, vertex } => write!(f, "{vertex} on no geodesic {s}-{t}"),
            Witness::OnGeodesic { s, t, vertex } => write!(f, "{vertex} on a geodesic {s}-{t}"),
            Witness::Distance { u, v, expected, actual } => write!(f, "d({u},{v}) = {actual}, expected {expected}"),
            Witness::Diameter { expected, actual } => write!(f, "diam = {actual}, expected {expected}"),
            Witness::Antipodality { pair: (u, v), expected, actual } => {
                let word = |b: bool| if b { "antipodal" } else { "not antipodal" };
                write!(f, "pair ({u},{v}) is {}, expected {}", word(*actual), word(*expected))
            }
            Witness::Slack { pendant, in_a, .. } => {
                let side = if *in_a { "in A but coverable" } else { "outside A but not coverable" };
                write!(f, "pendant {pendant} {side}")
            }
        }
    }
}

/// Outcome of re-checking a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recheck {
    Confirmed,
    Refuted(String),
    /// The independent check is out of reach (for example oracle blow-up).
    Unavailable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub claim: ClaimId,
    pub instance: String,
    pub verdict: Verdict,
    pub expected: String,
    pub actual: String,
    pub witness: Option<Witness>,
    /// Formula-set validity on the product, when it was checked.
    pub upper_bound: Option<bool>,
    pub notes: Vec<String>,
    /// Graph the witness refers to.
    pub subject: Option<Graph>,
}

impl AuditReport {
    pub(crate) fn new(claim: ClaimId, instance: impl Into<String>) -> Self {
        Self {
            claim,
            instance: instance.into(),
            verdict: Verdict::Pass,
            expected: String::new(),
            actual: String::new(),
            witness: None,
            upper_bound: None,
            notes: Vec::new(),
            subject: None,
        }
    }

    pub(crate) fn values(mut self, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        self.expected = expected.to_string();
        self.actual = actual.to_string();
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub(crate) fn skip(mut self, reason: SkipReason) -> Self {
        self.verdict = Verdict::Skipped(reason);
        self
    }

    /// Skips with a reason derived from a solver error.
    pub(crate) fn skip_for(self, err: &SolveError) -> Self {
        let reason = match err {
            SolveError::Degenerate(_) => SkipReason::Degenerate,
            SolveError::NotConnected => SkipReason::InvalidInstance,
            e if e.is_resource_limit() => SkipReason::ResourceCap,
            _ => SkipReason::InvalidInstance,
        };
        self.skip(reason).note(err.to_string())
    }

    pub(crate) fn fail(mut self, graph: &Graph, witness: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self.subject = Some(graph.clone());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Re-checks the witness of a FAIL without using the backtracking search
    /// or the BFS distance table.
    pub fn reverify(&self) -> Recheck {
        let (Some(witness), Some(g)) = (&self.witness, &self.subject) else {
            return Recheck::Unavailable("no witness".into());
        };
        let dist = floyd_warshall(g);
        let check = |ok: bool, what: &str| if ok { Recheck::Confirmed } else { Recheck::Refuted(what.to_string()) };
        match witness {
            Witness::Valid { certificate, bound } => {
                if let Err(e) = certificate.verify(g, *bound) {
                    return Recheck::Refuted(e.to_string());
                }
                match naive_oracle(g, certificate.basis(), *bound) {
                    Ok(found) => check(found.is_some(), "oracle rejects the set"),
                    Err(e) => Recheck::Unavailable(e.to_string()),
                }
            }
            Witness::Rejected { set, bound, uncovered } => {
                if let Some(w) = uncovered {
                    let on_some = set.iter().any(|&s| {
                        set.iter()
                            .any(|&t| s < t && bound.admits(dist[s][t]) && dist[s][*w] + dist[*w][t] == dist[s][t])
                    });
                    if on_some || set.contains(w) {
                        return Recheck::Refuted(format!("vertex {w} is reachable"));
                    }
                }
                match naive_oracle(g, set, *bound) {
                    Ok(found) => check(found.is_none(), "oracle accepts the set"),
                    Err(e) => Recheck::Unavailable(e.to_string()),
                }
            }
            Witness::NotOnGeodesic { s, t, vertex } => {
                check(dist[*s][*vertex] + dist[*vertex][*t] != dist[*s][*t], "vertex is on a geodesic")
            }
            Witness::OnGeodesic { s, t, vertex } => {
                check(dist[*s][*vertex] + dist[*vertex][*t] == dist[*s][*t], "vertex is on no geodesic")
            }
            Witness::Distance { u, v, expected, actual } => {
                check(dist[*u][*v] == *actual && actual != expected, "distance does not reproduce")
            }
            Witness::Diameter { expected, actual } => {
                let diam = dist.iter().flatten().copied().max().unwrap_or(0);
                check(diam == *actual && actual != expected, "diameter does not reproduce")
            }
            Witness::Antipodality { pair: (u, v), expected, actual } => {
                let diam = dist.iter().flatten().copied().max().unwrap_or(0);
                check((dist[*u][*v] == diam) == *actual && actual != expected, "antipodality does not reproduce")
            }
            Witness::Slack { in_a, pairs, required, .. } => match naive_assign(g, pairs, required) {
                Ok(found) => check(found.is_some() == *in_a, "coverability agrees with A"),
                Err(e) => Recheck::Unavailable(e.to_string()),
            },
        }
    }
}

const FAR: u32 = u32::MAX / 4;

/// All-pairs hop distances by Floyd-Warshall, kept separate from the BFS
/// table so witnesses are checked by different code.
pub(crate) fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![FAR; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}
