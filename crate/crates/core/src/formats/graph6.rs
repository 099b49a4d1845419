//! graph6 encoding.
//!
//! Size prefix: `n + 63` for `n <= 62`; `126` followed by three 6-bit bytes
//! for `n <= 258047`; `126 126` followed by six 6-bit bytes beyond that. The
//! body lists the upper triangle column by column (`x01, x02, x12, x03, ...`),
//! six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
        return;
    }
    let groups = if n <= 258_047 {
        out.push(LONG as char);
        3
    } else {
        out.push(LONG as char);
        out.push(LONG as char);
        6
    };
    for k in (0..groups).rev() {
        out.push((((n >> (6 * k)) & 0x3f) as u8 + OFFSET) as char);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        None => Err(err(pos, "unexpected end of input")),
        Some(&b) if (OFFSET..=LONG).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(err(pos, format!("byte {b} outside the range 63..=126"))),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted. Error offsets count bytes from the start of the
/// graph data (after any header).
pub fn decode(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }

    let (n, mut pos) = if bytes[0] != LONG {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&LONG) {
        let mut n = 0usize;
        for k in 1..4 {
            n = (n << 6) | sextet(bytes, k)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for k in 2..8 {
            n = (n << 6) | sextet(bytes, k)? as usize;
        }
        (n, 8)
    };

    let total_bits = n * n.saturating_sub(1) / 2;
    let body_len = total_bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < body_len {
        return Err(err(
            bytes.len(),
            format!("truncated body: expected {body_len} bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(err(pos + body_len, "trailing bytes after graph body"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                g.toggle_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}
