use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,k}`: a center (vertex 0) and `k` leaves.
    Star,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            _ => Err(GraphError::UnknownShorthand(s.to_string())),
        }
    }
}

/// Canonical labeled member of `family`. For path, cycle and complete graphs
/// `k` is the vertex count; for stars it is the number of leaves.
pub fn generate(family: Family, k: usize) -> Result<Graph, GraphError> {
    let bad = |reason| GraphError::BadSize { family: family.name(), k, reason };
    let edges: Vec<(Vertex, Vertex)> = match family {
        Family::Path => {
            if k < 1 {
                return Err(bad("need at least one vertex"));
            }
            (1..k).map(|i| (i - 1, i)).collect()
        }
        Family::Cycle => {
            if k < 3 {
                return Err(bad("a cycle needs at least three vertices"));
            }
            (0..k).map(|i| (i, (i + 1) % k)).collect()
        }
        Family::Complete => {
            if k < 1 {
                return Err(bad("need at least one vertex"));
            }
            (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect()
        }
        Family::Star => {
            if k < 1 {
                return Err(bad("a star needs at least one leaf"));
            }
            return Graph::new(k + 1, (1..=k).map(|leaf| (0, leaf)));
        }
    };
    Graph::new(k, edges)
}

/// Two adjacent centers carrying `left` and `right` leaves.
///
/// Layout: vertex 0 is a left leaf, 1 the left center, 2 the right center,
/// 3 a right leaf, then the remaining left leaves followed by the remaining
/// right leaves. `double_star(2, 2)` is the path 0-1-2-3 with pendants 4 on 1
/// and 5 on 2.
pub fn double_star(left: usize, right: usize) -> Result<Graph, GraphError> {
    if left == 0 || right == 0 {
        return Err(GraphError::BadSize {
            family: "double star",
            k: left.min(right),
            reason: "each center needs at least one leaf",
        });
    }
    let n = left + right + 2;
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    let mut next = 4;
    for _ in 1..left {
        edges.push((1, next));
        next += 1;
    }
    for _ in 1..right {
        edges.push((2, next));
        next += 1;
    }
    Graph::new(n, edges)
}

/// Short textual graph reference: `P<k>`, `C<k>`, `K<k>`, `S<k>` (star with
/// `k` leaves) or `DS<a>-<b>` (double star).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRef {
    pub name: String,
    pub graph: Graph,
}

impl GraphRef {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self { name: name.into(), graph }
    }
}

impl fmt::Display for GraphRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for GraphRef {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GraphError::UnknownShorthand(s.to_string());
        let trimmed = s.trim();
        let graph = if let Some(rest) = trimmed.strip_prefix("DS") {
            let (a, b) = rest.split_once('-').ok_or_else(unknown)?;
            let a = a.parse().map_err(|_| unknown())?;
            let b = b.parse().map_err(|_| unknown())?;
            double_star(a, b)?
        } else {
            let mut chars = trimmed.chars();
            let family = match chars.next() {
                Some('P') => Family::Path,
                Some('C') => Family::Cycle,
                Some('K') => Family::Complete,
                Some('S') => Family::Star,
                _ => return Err(unknown()),
            };
            let k = chars.as_str().parse().map_err(|_| unknown())?;
            generate(family, k)?
        };
        Ok(GraphRef { name: trimmed.to_string(), graph })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(generate(Family::Cycle, 5).unwrap().size(), 5);
        assert_eq!(generate(Family::Complete, 4).unwrap().size(), 6);
        assert_eq!(generate(Family::Path, 1).unwrap().size(), 0);
        let star = generate(Family::Star, 3).unwrap();
        assert_eq!((star.order(), star.size()), (4, 3));
    }

    #[test]
    fn cycle_of_two_is_rejected() {
        assert!(matches!(generate(Family::Cycle, 2), Err(GraphError::BadSize { k: 2, .. })));
        assert!(generate(Family::Path, 0).is_err());
        assert!(generate(Family::Star, 0).is_err());
    }

    #[test]
    fn double_star_layout() {
        let g = double_star(2, 2).unwrap();
        let expected = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn shorthand() {
        let r: GraphRef = "K4".parse().unwrap();
        assert_eq!(r.graph.size(), 6);
        let r: GraphRef = "DS2-2".parse().unwrap();
        assert_eq!(r.graph.order(), 6);
        assert!("X3".parse::<GraphRef>().is_err());
        assert!("C2".parse::<GraphRef>().is_err());
    }
}
