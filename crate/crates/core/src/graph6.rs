//! Bit-exact graph6 encoding and decoding.
//!
//! The format packs the order, then the upper triangle of the adjacency
//! matrix in column order (bit `(i,j)` for `j = 1..n`, `i = 0..j`), six bits
//! per printable byte (value + 63), most significant bit first, zero-padded to
//! a byte boundary. Orders up to 62 use one byte; orders 63..=258047 use a
//! `126`-prefixed three-byte field; larger orders (capped here at 2^18) use a
//! `126 126`-prefixed six-byte field. An optional `>>graph6<<` header is
//! accepted on input and never produced on output.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order this codec accepts.
pub const MAX_ORDER: usize = 1 << 18;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("order field truncated at offset {offset}")]
    TruncatedOrder { offset: usize },
    #[error("edge bits truncated at offset {offset}: need {needed} bytes after the order, found {found}")]
    TruncatedBits {
        offset: usize,
        needed: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonCanonicalPadding { offset: usize },
    #[error("{extra} trailing bytes starting at offset {offset}")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("order {order} exceeds the supported cap {MAX_ORDER}")]
    OrderTooLarge { order: u64 },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::TruncatedOrder { offset }),
        Some(&b) if !(63..=126).contains(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
        Some(&b) => Ok((b - 63) as u64),
    }
}

/// Decodes the order field; returns (order, bytes consumed).
fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let first = sextet(bytes, base)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let second = sextet(bytes, base + 1)?;
    let (groups, skip) = if second < 63 { (3, 1) } else { (6, 2) };
    let mut n: u64 = 0;
    for k in 0..groups {
        n = (n << 6) | sextet(bytes, base + skip + k)?;
    }
    if n as usize > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    Ok((n as usize, skip + groups))
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    debug_assert!(n <= MAX_ORDER);
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        out.push(126);
        out.push(126);
        for k in (0..6).rev() {
            out.push(63 + ((n >> (6 * k)) & 63) as u8);
        }
    }
}

/// Parses one graph6 line (an optional `>>graph6<<` header is stripped).
/// Reported byte offsets are relative to the full input line.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    // Work on the full byte slice so offsets line up with the input.
    let bytes = line.as_bytes();
    if body.is_empty() {
        return Err(Graph6Error::TruncatedOrder { offset: base });
    }
    let (n, order_len) = decode_order(bytes, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let found = bytes.len() - base - order_len;
    if found < needed {
        return Err(Graph6Error::TruncatedBits {
            offset: bytes.len(),
            needed,
            found,
        });
    }
    if found > needed {
        return Err(Graph6Error::TrailingBytes {
            offset: base + order_len + needed,
            extra: found - needed,
        });
    }
    let data = base + order_len;
    // Validate every data byte (earliest offending offset wins).
    for (k, &b) in bytes[data..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: data + k,
                byte: b,
            });
        }
    }
    let bit = |idx: usize| -> bool {
        let b = bytes[data + idx / 6] - 63;
        (b >> (5 - idx % 6)) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    for pad in bits..needed * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonCanonicalPadding {
                offset: data + pad / 6,
            });
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range and loop-free"))
}

/// Writes the canonical graph6 line for `g` (no header, shortest order form).
///
/// # Panics
/// Panics if `g.order() > MAX_ORDER` (graphs that large cannot be built from
/// this crate's parsers).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "order {n} exceeds graph6 cap {MAX_ORDER}");
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    encode_order(n, &mut out);
    let data = out.len();
    out.resize(data + bits.div_ceil(6), 63);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[data + idx / 6] += 1 << (5 - idx % 6);
            }
            idx += 1;
        }
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
