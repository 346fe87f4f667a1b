//! Text formats: graph6 (single-byte size form only) and a plain edge list.
//!
//! graph6 stores `n + 63` followed by the upper triangle of the adjacency
//! matrix in column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed six bits per byte (most significant first), each byte offset by 63
//! and the final group zero-padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

fn g6_error(record: &[u8], reason: impl Into<String>) -> Error {
    Error::Graph6 {
        record: String::from_utf8_lossy(record).into_owned(),
        reason: reason.into(),
    }
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A trailing line terminator and a leading
/// `>>graph6<<` header are tolerated.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut record = text;
    while let [rest @ .., b'\n' | b'\r'] = record {
        record = rest;
    }
    if let Some(rest) = record.strip_prefix(b">>graph6<<") {
        record = rest;
    }
    let (&size, payload) = record
        .split_first()
        .ok_or_else(|| g6_error(text, "empty record"))?;
    if !(OFFSET..=126).contains(&size) {
        return Err(g6_error(text, format!("invalid size byte {size}")));
    }
    if size == 126 {
        return Err(g6_error(text, "multi-byte size form is not supported (n > 62)"));
    }
    let n = (size - OFFSET) as usize;
    if n == 0 {
        return Err(g6_error(text, "order 0"));
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(g6_error(
            text,
            format!("expected {expected} payload bytes for n = {n}, found {}", payload.len()),
        ));
    }
    if let Some(&bad) = payload.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(g6_error(text, format!("invalid payload byte {bad}")));
    }

    let bit = |idx: usize| (payload[idx / 6] - OFFSET) >> (5 - idx % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                g.set_edge(i, j)?;
            }
            idx += 1;
        }
    }
    for pad in idx..expected * 6 {
        if bit(pad) {
            return Err(g6_error(text, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 record without a line terminator.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the edge-list format: a first line holding `n`, then one `u v` pair
/// per non-empty line. Duplicate edges collapse; self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first_line,
        reason: format!("unparsable vertex count {header:?}"),
    })?;
    let mut g = Graph::empty(n).map_err(|e| Error::EdgeList {
        line: first_line,
        reason: e.to_string(),
    })?;
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected two vertex indices, found {content:?}"),
            });
        };
        let parse = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::EdgeList {
                line,
                reason: format!("unparsable token {tok:?}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(Error::EdgeList { line, reason: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                reason: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        g.set_edge(u, v)?;
    }
    Ok(g)
}

/// Renders the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
