//! graph6 and edge-list text encodings.
//!
//! graph6 is the standard one-line ASCII encoding: a size byte `n + 63`
//! followed by the upper triangle of the adjacency matrix, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte with 63
//! added. Only the short form (`n <= 62`) is supported.
//!
//! The edge-list format is a plain text block: the vertex count on the first
//! line, then one `a b` pair per line.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6 supports at most {MAX_GRAPH6_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    BadByte { byte: u8, pos: usize },
    #[error("graph6 string has {got} data bytes, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("bad edge list: {0}")]
    BadEdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(FormatError::TooManyVertices(n));
    }
    let mut bytes = vec![n as u8 + 63];
    let nbits = n * (n.saturating_sub(1)) / 2;
    let mut bit_pos = 0usize;
    let mut acc = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            bit_pos += 1;
            if bit_pos.is_multiple_of(6) {
                bytes.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !nbits.is_multiple_of(6) {
        acc <<= 6 - (nbits % 6);
        bytes.push(acc + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

/// Decodes a single graph6 line.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let bytes = s.trim().as_bytes();
    let first = *bytes.first().ok_or(FormatError::Empty)?;
    if !(63..=126).contains(&first) || first == b'~' {
        return Err(FormatError::BadByte {
            byte: first,
            pos: 0,
        });
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(FormatError::WrongLength {
            got: data.len(),
            expected,
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (pos, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte {
                byte: b,
                pos: pos + 1,
            });
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Writes the edge-list text form: vertex count, then one `a b` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Parses the edge-list text form. Blank lines are ignored.
pub fn from_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| FormatError::BadEdgeList("missing vertex count".into()))?
        .parse()
        .map_err(|_| FormatError::BadEdgeList("vertex count is not an integer".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::BadEdgeList(format!("bad edge line {line:?}")))?;
        let b: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::BadEdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(FormatError::BadEdgeList(format!(
                "trailing tokens on edge line {line:?}"
            )));
        }
        edges.push((a, b));
    }
    Ok(Graph::new(n, &edges)?)
}
