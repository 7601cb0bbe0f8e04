//! Text formats: edge lists, labeled product graphs and DOT export.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! A labeled product appends a `variant <corona|edge|neighborhood>` line and
//! one `v <index> base <i>` or `v <index> sat <copy> <p>` line per vertex.

use std::fmt::Write as _;

use thiserror::Error;

use crate::corona::{CoronaLabel, CoronaLabeledGraph, ProductError, Variant};
use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labels(#[from] ProductError),
}

/// A parsed file: either a plain graph or a labeled product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Plain(Graph),
    Labeled(CoronaLabeledGraph),
}

impl Document {
    pub fn graph(&self) -> &Graph {
        match self {
            Document::Plain(g) => g,
            Document::Labeled(p) => p.graph(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::Syntax { line, message: format!("expected a non-negative integer, found `{tok}`") })
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let [n, m] = header[..] else {
        return Err(ParseError::Syntax { line, message: "expected header `n m`".into() });
    };
    let (n, m) = (number(line, n)?, number(line, m)?);

    let mut edges = Vec::with_capacity(m);
    let mut variant = None;
    let mut labels: Vec<Option<CoronaLabel>> = Vec::new();
    for (line, tokens) in lines {
        let syntax = |message: String| ParseError::Syntax { line, message };
        match tokens[..] {
            ["variant", name] => {
                if variant.is_some() {
                    return Err(syntax("duplicate variant line".into()));
                }
                variant = Some(name.parse::<Variant>()?);
            }
            ["v", index, ref rest @ ..] => {
                let index = number(line, index)?;
                let label = match rest {
                    ["base", i] => CoronaLabel::Base(number(line, i)?),
                    ["sat", copy, p] => CoronaLabel::Satellite { copy: number(line, copy)?, index: number(line, p)? },
                    _ => return Err(syntax("expected `v <index> base <i>` or `v <index> sat <copy> <p>`".into())),
                };
                if index >= n {
                    return Err(syntax(format!("label for vertex {index} on a graph with {n} vertices")));
                }
                labels.resize(n, None);
                if labels[index].replace(label).is_some() {
                    return Err(syntax(format!("vertex {index} labeled twice")));
                }
            }
            [u, v] => {
                if variant.is_some() || !labels.is_empty() {
                    return Err(syntax("edge after the label section".into()));
                }
                edges.push((number(line, u)?, number(line, v)?));
            }
            _ => return Err(syntax(format!("unrecognized line `{}`", tokens.join(" ")))),
        }
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    let graph = Graph::new(n, edges)?;
    if variant.is_none() && labels.is_empty() {
        return Ok(Document::Plain(graph));
    }
    let variant = variant.ok_or(ParseError::Syntax { line: 0, message: "labels without a variant line".into() })?;
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or(ParseError::Syntax { line: 0, message: format!("vertex {v} has no label") }))
        .collect::<Result<Vec<_>, _>>()?;
    if labels.len() != n {
        return Err(ParseError::Syntax { line: 0, message: format!("expected {n} labels, found {}", labels.len()) });
    }
    Ok(Document::Labeled(CoronaLabeledGraph::from_labels(graph, labels, variant)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    Ok(match parse_document(text)? {
        Document::Plain(g) => g,
        Document::Labeled(p) => p.into_graph(),
    })
}

pub fn parse_labeled(text: &str) -> Result<CoronaLabeledGraph, ParseError> {
    match parse_document(text)? {
        Document::Labeled(p) => Ok(p),
        Document::Plain(_) => Err(ParseError::Syntax { line: 0, message: "missing label section".into() }),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_labeled(p: &CoronaLabeledGraph) -> String {
    let mut out = write_edge_list(p.graph());
    let _ = writeln!(out, "variant {}", p.variant());
    for (v, label) in p.labels().iter().enumerate() {
        let _ = match label {
            CoronaLabel::Base(i) => writeln!(out, "v {v} base {i}"),
            CoronaLabel::Satellite { copy, index } => writeln!(out, "v {v} sat {copy} {index}"),
        };
    }
    out
}

fn dot_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    dot_edges(&mut out, g);
    out.push_str("}\n");
    out
}

/// DOT with base vertices and satellites styled as separate classes.
pub fn labeled_to_dot(p: &CoronaLabeledGraph) -> String {
    let mut out = format!("graph G {{\n  // {} product\n", p.variant());
    for (v, label) in p.labels().iter().enumerate() {
        let _ = match label {
            CoronaLabel::Base(i) => {
                writeln!(out, "  {v} [label=\"u{i}\", class=\"base\", style=filled, fillcolor=\"lightblue\"];")
            }
            CoronaLabel::Satellite { copy, index } => writeln!(
                out,
                "  {v} [label=\"v{index}^{copy}\", class=\"satellite\", style=filled, fillcolor=\"lightyellow\"];"
            ),
        };
    }
    dot_edges(&mut out, p.graph());
    out.push_str("}\n");
    out
}

pub fn document_to_dot(doc: &Document) -> String {
    match doc {
        Document::Plain(g) => to_dot(g),
        Document::Labeled(p) => labeled_to_dot(p),
    }
}

/// Vertices listed as `{a,b,c}`.
pub fn format_set(vertices: &[Vertex]) -> String {
    let inner: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::{generalized_corona, uniform};
    use crate::graph::{double_star, generate, Family};

    #[test]
    fn parses_edge_list_with_comments() {
        let text = "# the double star\n6 5\n0 1\n1 2 # spine\n2 3\n1 4\n\n2 5\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, double_star(2, 2).unwrap());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_edge_list(""), Err(ParseError::Empty));
        assert_eq!(parse_edge_list("# only a comment\n"), Err(ParseError::Empty));
        assert!(matches!(parse_edge_list("3\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert_eq!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeCount { declared: 2, found: 1 }));
        assert!(matches!(parse_edge_list("2 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 2\n"), Err(ParseError::Graph(GraphError::OutOfRange { .. }))));
        assert!(matches!(parse_edge_list("2 1\n1 1\n"), Err(ParseError::Graph(GraphError::SelfLoop(1)))));
    }

    #[test]
    fn labeled_round_trip() {
        let hs = [
            generate(Family::Path, 2).unwrap(),
            generate(Family::Complete, 4).unwrap(),
            generate(Family::Cycle, 5).unwrap(),
        ];
        let p = generalized_corona(&generate(Family::Cycle, 3).unwrap(), &hs).unwrap();
        let text = write_labeled(&p);
        assert!(text.contains("variant corona\nv 0 base 0\n"));
        assert!(text.contains("v 13 sat 2 4\n"));
        assert_eq!(parse_labeled(&text).unwrap(), p);
        assert_eq!(parse_edge_list(&text).unwrap(), *p.graph());
    }

    #[test]
    fn labeled_errors() {
        let p = uniform(Variant::EdgeCorona, &generate(Family::Path, 2).unwrap(), &Graph::empty(1)).unwrap();
        let text = write_labeled(&p);
        let missing = text.replace("v 2 sat 0 0\n", "");
        assert!(parse_labeled(&missing).is_err());
        assert!(parse_labeled(&text.replace("variant edge", "variant spiral")).is_err());
        assert!(parse_labeled("2 1\n0 1\n").is_err());
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&double_star(2, 2).unwrap());
        assert_eq!(dot.matches("--").count(), 5);
        assert_eq!(dot.matches("[label=").count(), 6);

        let p = uniform(Variant::Corona, &generate(Family::Path, 2).unwrap(), &Graph::empty(1)).unwrap();
        let dot = labeled_to_dot(&p);
        assert_eq!(dot.matches("class=\"base\"").count(), 2);
        assert_eq!(dot.matches("class=\"satellite\"").count(), 2);
    }
}
