//! graph6 text encoding of simple undirected graphs.
//!
//! One graph per line, printable bytes in `63..=126`. The line is the size
//! header N(n) followed by the upper-triangle adjacency bits in column order
//! (b(0,1), b(0,2), b(1,2), b(0,3), ...), packed big-endian six bits per
//! byte with zero padding, each byte offset by 63. N(n) is a single byte
//! `n + 63` for `n <= 62` and the four-byte form `126, R(n)` (18 bits) for
//! larger n. Decoding is strict: byte range, exact length and zero padding
//! are all checked, so every accepted line re-encodes to itself.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    // n <= 32, so the single-byte header always applies
    let mut out = vec![BIAS + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("printable ascii")
}

/// Decodes one graph6 line. Leading/trailing whitespace and an optional
/// `>>graph6<<` marker are tolerated.
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = parse_header(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - BIAS;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    // padding bits must be zero for the encoding to be canonical
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::Graph6("8-byte size header (n > 258047) is not supported".into()));
    }
    if bytes.len() < 4 {
        return Err(Error::Graph6("truncated 4-byte size header".into()));
    }
    let n = bytes[1..4]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
    if n <= 62 {
        return Err(Error::Graph6("non-minimal size header".into()));
    }
    Ok((n, &bytes[4..]))
}
