//! graph6 codec for graphs with at most 62 vertices.
//!
//! A record is the size byte `n + 63` followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte
//! (most significant first), each byte offset by 63 and the last one zero-padded.

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph, VertexSet};

pub const HEADER: &str = ">>graph6<<";

/// Largest order expressible with the one-byte size field.
pub const MAX_GRAPH6_ORDER: usize = 62;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and a trailing line break are
/// accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();

    let (&size, data) = body.split_first().ok_or_else(|| malformed("empty record"))?;
    if !(63..=126).contains(&size) {
        return Err(malformed(format!("invalid size byte {size:#04x}")));
    }
    if size == 126 {
        return Err(malformed(format!(
            "orders above {MAX_GRAPH6_ORDER} are not supported"
        )));
    }
    let n = (size - 63) as usize;
    let bits = pair_count(n);
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(malformed(format!(
            "truncated record: expected {expected} data bytes, found {}",
            data.len()
        )));
    }
    if data.len() > expected {
        return Err(malformed(format!(
            "trailing garbage: {} bytes after a record for n = {n}",
            data.len() - expected
        )));
    }
    if let Some(&c) = data.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(malformed(format!("character {c:#04x} outside 63..=126")));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let bit_at = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit_at(k) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit_at) {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(Graph::from_adjacency_unchecked(n, adj))
}

/// Encodes `g` as a graph6 record without header or line break.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 || n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let bits = pair_count(n);
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
