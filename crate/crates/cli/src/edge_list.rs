//! Plain-text edge lists: one `source target [weight]` per line.
//!
//! `#` starts a comment anywhere on a line and blank lines are skipped.
//! Labels are any non-whitespace tokens; the universe is ordered by first
//! appearance.

use std::collections::HashSet;

use rtclosure_core::path_algebra::WeightedDigraph;
use rtclosure_core::{Relation, Universe};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: weighted and unweighted edges are mixed")]
    MixedWeights { line: usize },
    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: String },
    #[error("line {line}: duplicate edge {from} {to}")]
    DuplicateEdge { line: usize, from: String, to: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub weight: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeListDocument {
    pub labels: Vec<String>,
    pub edges: Vec<Edge>,
}

impl EdgeListDocument {
    pub fn is_weighted(&self) -> bool {
        self.edges.first().is_some_and(|e| e.weight.is_some())
    }

    pub fn universe(&self) -> Universe {
        Universe::new(self.labels.iter().cloned()).expect("labels are collected without duplicates")
    }

    /// The edges as a relation, ignoring weights.
    pub fn relation(&self) -> Relation {
        let u = self.universe();
        Relation::from_pairs(&u, self.edges.iter().map(|e| (e.source.as_str(), e.target.as_str())))
            .expect("edge endpoints are declared labels")
    }

    /// The edges as a weighted digraph; unweighted edges count as weight 1.
    pub fn digraph(&self) -> WeightedDigraph {
        let u = self.universe();
        let mut g = WeightedDigraph::new(u.len());
        for e in &self.edges {
            let (x, y) = (u.index_of(&e.source), u.index_of(&e.target));
            g.add_edge(x.expect("declared"), y.expect("declared"), e.weight.unwrap_or(1));
        }
        g
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument, ParseError> {
    let mut doc = EdgeListDocument::default();
    let mut seen_labels = HashSet::new();
    let mut seen_edges = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (source, target, weight) = match tokens.as_slice() {
            [] => continue,
            [s, t] => (*s, *t, None),
            [s, t, w] => (*s, *t, Some(parse_weight(line, w)?)),
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("expected `source target [weight]`, found {} token(s)", tokens.len()),
                })
            }
        };
        if doc.edges.first().is_some_and(|e| e.weight.is_some() != weight.is_some()) {
            return Err(ParseError::MixedWeights { line });
        }
        if weight.is_none() && !seen_edges.insert((source, target)) {
            return Err(ParseError::DuplicateEdge {
                line,
                from: source.to_owned(),
                to: target.to_owned(),
            });
        }
        for label in [source, target] {
            if seen_labels.insert(label) {
                doc.labels.push(label.to_owned());
            }
        }
        doc.edges.push(Edge {
            source: source.to_owned(),
            target: target.to_owned(),
            weight,
        });
    }
    Ok(doc)
}

fn parse_weight(line: usize, token: &str) -> Result<u64, ParseError> {
    match token.parse::<i128>() {
        Ok(w) if w < 0 => Err(ParseError::NegativeWeight {
            line,
            weight: token.to_owned(),
        }),
        Ok(w) => u64::try_from(w).map_err(|_| ParseError::Malformed {
            line,
            message: format!("weight `{token}` is too large"),
        }),
        Err(_) => Err(ParseError::Malformed {
            line,
            message: format!("weight `{token}` is not an integer"),
        }),
    }
}
