//! Plain edge lists: a first line holding `n`, then one `i j` pair per line.
//! Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.low(), e.high()));
    }
    out
}

fn parse_field(tok: &str, line: usize, column: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        column,
        msg: format!("expected a vertex label, found {tok:?}"),
    })
}

/// Splits a line into whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        match n {
            None => {
                if toks.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        column: toks[1].0,
                        msg: "the first line must hold only the vertex count".into(),
                    });
                }
                n = Some(parse_field(toks[0].1, line_no, toks[0].0)?);
            }
            Some(count) => {
                if toks.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        column: toks.get(2).map_or(1, |t| t.0),
                        msg: format!("expected \"i j\", found {} fields", toks.len()),
                    });
                }
                let a = parse_field(toks[0].1, line_no, toks[0].0)?;
                let b = parse_field(toks[1].1, line_no, toks[1].0)?;
                for (v, col) in [(a, toks[0].0), (b, toks[1].0)] {
                    if v == 0 || v > count {
                        return Err(Error::Parse {
                            line: line_no,
                            column: col,
                            msg: format!("vertex {v} is outside 1..{count}"),
                        });
                    }
                }
                edges.push((line_no, a, b));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        column: 1,
        msg: "missing vertex count".into(),
    })?;
    // Validate edge by edge so the error names the offending line.
    let mut g = Graph::from_edges(n, std::iter::empty())?;
    for (line_no, a, b) in edges {
        let e = crate::graph::Edge::try_new(a, b)
            .map_err(|err| Error::Validation(format!("line {line_no}: {err}")))?;
        g = g.add_edge(e).map_err(|_| Error::Validation(format!("line {line_no}: duplicate edge {e}")))?;
    }
    Ok(g)
}
