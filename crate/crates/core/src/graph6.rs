//! graph6 text encoding.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits
//! per byte and offset by 63. `N(n)` is one byte for `n <= 62`, `~` plus
//! three bytes for `n <= 258047`, and `~~` plus six bytes beyond that.

use crate::graph::{bit, Graph, MAX_VERTICES};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Decodes `N(n)`, returning `n` and the number of bytes consumed.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let sextet = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(malformed(format!("byte {b:#04x} out of range")))
        }
    };
    let take = |from: usize, len: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + len)
            .ok_or_else(|| malformed("truncated size field"))?;
        chunk.iter().try_fold(0usize, |acc, &b| Ok((acc << 6) | sextet(b)?))
    };
    match bytes {
        [] => Err(malformed("empty input")),
        [126, 126, ..] => {
            let n = take(2, 6)?;
            if n <= 258_047 {
                return Err(malformed("non-minimal size field"));
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = take(1, 3)?;
            if n <= 62 {
                return Err(malformed("non-minimal size field"));
            }
            Ok((n, 4))
        }
        [b, ..] => {
            let n = sextet(*b)?;
            Ok((n, 1))
        }
    }
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, used) = decode_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
    }
    let body = &bytes[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[idx / 6];
            if !(63..=126).contains(&b) {
                return Err(malformed(format!("byte {b:#04x} out of range")));
            }
            if (b - 63) & (0x20 >> (idx % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            idx += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(malformed(format!("byte {last:#04x} out of range")));
        }
        let pad = expected * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut fill = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses every non-empty line of a multi-line graph6 document.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}
