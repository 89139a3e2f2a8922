//! Graph input formats, report emission, and the on-disk result cache.

pub mod edgelist;
pub mod graph6;
pub mod cache;
pub mod report;

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::domain(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn parse_graph_input(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => edgelist::decode(text),
        GraphFormat::Graph6 => graph6::decode(text.trim()),
    }
}

/// Guesses the format: an edge list starts with a line holding only digits.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if !first.is_empty() && first.chars().all(|c| c.is_ascii_digit()) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => edgelist::encode(g),
        GraphFormat::Graph6 => graph6::encode(g) + "\n",
    }
}
