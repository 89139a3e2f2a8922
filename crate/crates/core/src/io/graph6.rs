//! The graph6 format: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i + 1, j + 1));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(column: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        msg: msg.into(),
    }
}

pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(pos + 1, format!("byte {:#04x} is outside the graph6 range", bytes[pos])));
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(1, "empty graph6 string")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(2, "graphs this large are not supported"));
            }
            if bytes.len() < 4 {
                return Err(parse_err(bytes.len() + 1, "truncated size prefix"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            got: n,
            ceiling: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            bytes.len().min(expected) + 1,
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

/// Encodes one edge set per line.
pub fn encode_all<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> String {
    graphs.into_iter().map(|g| encode(g) + "\n").collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(decode("C~").unwrap(), Graph::complete(4));
        assert_eq!(encode(&Graph::complete(4)), "C~");
    }

    #[test]
    fn known_encodings() {
        // P_3 = 1-2-3: bits x12=1, x13=0, x23=1 -> 101000 -> 40 + 63.
        assert_eq!(encode(&Graph::path(3)), "Bg");
        assert_eq!(encode(&Graph::edgeless(0)), "?");
        assert_eq!(decode("?").unwrap().n(), 0);
        assert_eq!(decode("@").unwrap(), Graph::edgeless(1));
    }

    #[test]
    fn large_prefix_round_trips() {
        let g = Graph::path(64);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(decode(""), Err(Error::Parse { .. })));
        assert!(matches!(decode("C"), Err(Error::Parse { .. })));
        assert!(matches!(decode("C~~"), Err(Error::Parse { .. })));
        assert!(matches!(decode("C !"), Err(Error::Parse { column: 2, .. })));
    }
}
