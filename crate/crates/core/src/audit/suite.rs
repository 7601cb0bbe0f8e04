//! Audit suites: a TOML list of instances run through every applicable
//! checker.
//!
//! ```toml
//! seed = 7
//! claims = ["Theorem1", "Prop1"]   # optional filter
//!
//! [[instance]]
//! kind = "graph"
//! graph = "DS2-2"
//!
//! [[instance]]
//! kind = "product"
//! variant = "corona"
//! base = "C3"
//! copies = ["P2", "K4", "C5"]       # or: uniform = "P2"
//!
//! [[instance]]
//! kind = "iterated"
//! base = "K2"
//! m = 1
//!
//! [[instance]]
//! kind = "sample"
//! count = 20
//! order = 7
//! density = 0.3
//! ```
//!
//! A graph is a shorthand (`P3`, `C5`, `K4`, `S3`, `DS2-2`), a table
//! `{ file = "g.txt" }` or an inline `{ n = 3, edges = [[0, 1], [1, 2]] }`.

use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use super::claims::{audit_lemma0, audit_product_filtered, audit_result1, audit_theorem1a};
use super::{AuditReport, ClaimId, UnknownClaim};
use crate::corona::{ProductError, Variant};
use crate::format::{parse_edge_list, ParseError};
use crate::geodetic::SolveConfig;
use crate::graph::{random_connected, Graph, GraphError, GraphRef};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Claim(#[from] UnknownClaim),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Variant(#[from] ProductError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("instance {index}: {message}")]
    Instance { index: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    Shorthand(String),
    File { file: PathBuf },
    Inline { n: usize, edges: Vec<(usize, usize)>, name: Option<String> },
}

impl GraphSpec {
    fn resolve(&self, dir: &Path) -> Result<GraphRef, ConfigError> {
        match self {
            GraphSpec::Shorthand(s) => Ok(s.parse()?),
            GraphSpec::File { file } => {
                let path = dir.join(file);
                let text =
                    std::fs::read_to_string(&path).map_err(|source| ConfigError::Io { path: path.clone(), source })?;
                let graph =
                    parse_edge_list(&text).map_err(|source| ConfigError::Parse { path: path.clone(), source })?;
                Ok(GraphRef::new(file.display().to_string(), graph))
            }
            GraphSpec::Inline { n, edges, name } => {
                let graph = Graph::new(*n, edges.iter().copied())?;
                let name = name.clone().unwrap_or_else(|| format!("inline{n}"));
                Ok(GraphRef::new(name, graph))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    seed: Option<u64>,
    claims: Option<Vec<String>>,
    #[serde(default, rename = "instance")]
    instances: Vec<RawInstance>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawInstance {
    Graph {
        graph: GraphSpec,
        claims: Option<Vec<String>>,
    },
    Product {
        variant: String,
        base: GraphSpec,
        copies: Option<Vec<GraphSpec>>,
        uniform: Option<GraphSpec>,
        claims: Option<Vec<String>>,
    },
    Iterated {
        base: GraphSpec,
        m: u32,
        claims: Option<Vec<String>>,
    },
    Sample {
        count: usize,
        order: usize,
        #[serde(default = "default_density")]
        density: f64,
        seed: Option<u64>,
        claims: Option<Vec<String>>,
    },
}

fn default_density() -> f64 {
    0.3
}

#[derive(Debug, Clone, PartialEq)]
pub enum InstanceKind {
    Graph(GraphRef),
    Product {
        variant: Variant,
        base: GraphRef,
        copies: Vec<GraphRef>,
    },
    Iterated {
        base: GraphRef,
        m: u32,
    },
    /// `count` seeded random connected graphs, audited like `Graph`. Without
    /// its own seed the suite seed is used.
    Sample {
        count: usize,
        order: usize,
        density: f64,
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub kind: InstanceKind,
    /// Restricts this instance to the listed claims.
    pub claims: Option<Vec<ClaimId>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub claims: Option<Vec<ClaimId>>,
    pub instances: Vec<Instance>,
}

fn claim_list(names: Option<Vec<String>>) -> Result<Option<Vec<ClaimId>>, ConfigError> {
    names.map(|ns| ns.iter().map(|n| n.parse::<ClaimId>().map_err(ConfigError::from)).collect()).transpose()
}

impl SuiteConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    /// Parses a TOML suite; graph files are resolved against `dir`.
    pub fn parse(text: &str, dir: &Path) -> Result<Self, ConfigError> {
        let raw: RawConfig = toml::from_str(text)?;
        let seed = raw.seed.unwrap_or(0);
        let mut instances = Vec::with_capacity(raw.instances.len());
        for (index, inst) in raw.instances.into_iter().enumerate() {
            let (kind, claims) = match inst {
                RawInstance::Graph { graph, claims } => (InstanceKind::Graph(graph.resolve(dir)?), claims),
                RawInstance::Product { variant, base, copies, uniform, claims } => {
                    let variant: Variant = variant.parse()?;
                    let base = base.resolve(dir)?;
                    let copies = match (copies, uniform) {
                        (Some(cs), None) => cs.iter().map(|c| c.resolve(dir)).collect::<Result<_, _>>()?,
                        (None, Some(h)) => vec![h.resolve(dir)?; variant.copy_count(&base.graph)],
                        _ => {
                            let message = "give exactly one of `copies` and `uniform`".into();
                            return Err(ConfigError::Instance { index, message });
                        }
                    };
                    (InstanceKind::Product { variant, base, copies }, claims)
                }
                RawInstance::Iterated { base, m, claims } => {
                    (InstanceKind::Iterated { base: base.resolve(dir)?, m }, claims)
                }
                RawInstance::Sample { count, order, density, seed: own, claims } => {
                    if !(0.0..=1.0).contains(&density) {
                        return Err(ConfigError::Instance {
                            index,
                            message: format!("density {density} outside [0, 1]"),
                        });
                    }
                    (InstanceKind::Sample { count, order, density, seed: own }, claims)
                }
            };
            instances.push(Instance { kind, claims: claim_list(claims)? });
        }
        Ok(Self { seed, claims: claim_list(raw.claims)?, instances })
    }

    /// Curated instances: small bases and copies, every product at most 20
    /// vertices.
    pub fn default_suite() -> Self {
        let r = |s: &str| s.parse::<GraphRef>().expect("valid shorthand");
        let all = |kind| Instance { kind, claims: None };
        let mut instances = Vec::new();
        for g in ["DS2-2", "C5", "K4", "S4", "P2", "P3", "C3", "C4", "K3", "S3"] {
            instances.push(all(InstanceKind::Graph(r(g))));
        }
        let product = |variant, base: &str, copies: &[&str]| InstanceKind::Product {
            variant,
            base: r(base),
            copies: copies.iter().map(|c| r(c)).collect(),
        };
        instances.push(all(product(Variant::Corona, "C3", &["P2", "K4", "C5"])));
        for variant in Variant::ALL {
            for g in ["P2", "P3", "C3", "C4", "K3", "S3"] {
                for h in ["P2", "P3", "K3", "K4", "C4", "C5"] {
                    let (base, copy) = (r(g), r(h));
                    let copies = variant.copy_count(&base.graph);
                    if base.graph.order() + copies * copy.graph.order() <= 20 {
                        instances.push(all(InstanceKind::Product { variant, base, copies: vec![copy; copies] }));
                    }
                }
            }
        }
        instances.push(all(product(Variant::Corona, "P2", &["C4", "K3"])));
        instances.push(all(product(Variant::Corona, "P3", &["P2", "P3", "K3"])));
        instances.push(all(product(Variant::EdgeCorona, "P3", &["K3", "C4"])));
        instances.push(all(product(Variant::EdgeCorona, "S3", &["P2", "K3", "C5"])));
        instances.push(all(product(Variant::NeighborhoodCorona, "P3", &["P2", "K3", "C4"])));

        let metric = vec![ClaimId::Lemma1, ClaimId::Lemma2, ClaimId::Lemma6, ClaimId::Prop1, ClaimId::Prop3];
        for (variant, base) in [
            (Variant::Corona, "P3"),
            (Variant::Corona, "C4"),
            (Variant::EdgeCorona, "C3"),
            (Variant::NeighborhoodCorona, "C4"),
            (Variant::NeighborhoodCorona, "P4"),
            (Variant::NeighborhoodCorona, "C5"),
        ] {
            let base = r(base);
            let copies = vec![r("K1"); variant.copy_count(&base.graph)];
            instances
                .push(Instance { kind: InstanceKind::Product { variant, base, copies }, claims: Some(metric.clone()) });
        }

        for (g, m) in [("K2", 0), ("K2", 1), ("P3", 0), ("C3", 0)] {
            instances.push(all(InstanceKind::Iterated { base: r(g), m }));
        }
        Self { seed: 0, claims: None, instances }
    }
}

enum Unit<'a> {
    Graph(GraphRef),
    Product { variant: Variant, base: &'a GraphRef, copies: &'a [GraphRef] },
    Iterated { base: &'a GraphRef, m: u32 },
}

/// Runs every applicable checker on every instance. Instances run in
/// parallel; reports come back in configuration order.
pub fn audit_suite(config: &SuiteConfig, cfg: &SolveConfig) -> Vec<AuditReport> {
    let mut units: Vec<(Unit<'_>, Option<&[ClaimId]>)> = Vec::new();
    for inst in &config.instances {
        let claims = inst.claims.as_deref();
        match &inst.kind {
            InstanceKind::Graph(g) => units.push((Unit::Graph(g.clone()), claims)),
            InstanceKind::Product { variant, base, copies } => {
                units.push((Unit::Product { variant: *variant, base, copies }, claims))
            }
            InstanceKind::Iterated { base, m } => units.push((Unit::Iterated { base, m: *m }, claims)),
            InstanceKind::Sample { count, order, density, seed } => {
                let seed = seed.unwrap_or(config.seed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for i in 0..*count {
                    let g = random_connected(*order, *density, &mut rng);
                    units.push((Unit::Graph(GraphRef::new(format!("sample{seed}#{i}"), g)), claims));
                }
            }
        }
    }

    let global = config.claims.as_deref();
    units
        .par_iter()
        .map(|(unit, local)| {
            let want = |c: ClaimId| global.is_none_or(|cs| cs.contains(&c)) && local.is_none_or(|cs| cs.contains(&c));
            match unit {
                Unit::Graph(g) => {
                    let mut out = Vec::new();
                    if want(ClaimId::Lemma0) {
                        out.push(audit_lemma0(g, cfg));
                    }
                    if want(ClaimId::Result1) {
                        out.push(audit_result1(g, cfg));
                    }
                    out
                }
                Unit::Product { variant, base, copies } => audit_product_filtered(*variant, base, copies, cfg, &want),
                Unit::Iterated { base, m } => {
                    if want(ClaimId::Theorem1a) {
                        vec![audit_theorem1a(base, *m, cfg)]
                    } else {
                        Vec::new()
                    }
                }
            }
        })
        .collect::<Vec<_>>()
        .concat()
}
