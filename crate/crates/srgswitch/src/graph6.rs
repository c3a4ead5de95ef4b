//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column, in 6-bit groups offset by 63.

use std::path::Path;

use srgswitch_core::{F2Matrix, Graph};
use thiserror::Error;

use crate::error::{IoError, IoResult};

/// Largest order representable with the 4-byte size prefix.
const MAX_SHORT: usize = 258_047;
const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {pos} ({byte:#04x}) is outside 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    BadPadding,
    #[error("{0} trailing bytes")]
    TrailingData(usize),
    #[error("order {0} too large for graph6")]
    TooLarge(usize),
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_SHORT {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::new();
    push_size(&mut out, n);
    let (mut acc, mut nbits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.is_adjacent(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                (acc, nbits) = (0, 0);
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn sextet(bytes: &[u8], pos: usize) -> Result<usize, Graph6Error> {
    match bytes.get(pos) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(&b) => Err(Graph6Error::InvalidByte { pos, byte: b }),
        None => Err(Graph6Error::Truncated {
            expected: pos + 1,
            found: bytes.len(),
        }),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, start) = if bytes[0] != 126 {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for p in 1..4 {
            n = n << 6 | sextet(bytes, p)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for p in 2..8 {
            n = n << 6 | sextet(bytes, p)?;
        }
        (n, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() < nbytes {
        return Err(Graph6Error::Truncated {
            expected: start + nbytes,
            found: bytes.len(),
        });
    }
    if body.len() > nbytes {
        return Err(Graph6Error::TrailingData(body.len() - nbytes));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for p in 0..nbytes {
        let v = sextet(bytes, start + p)?;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Graph6Error::BadPadding);
    }
    let mut adj = F2Matrix::zeros(n, n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj, None).expect("symmetric with zero diagonal"))
}

/// Reads the first graph of a graph6 file.
pub fn read_file(path: &Path) -> IoResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| IoError::file(path, e))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    Ok(decode(line)?)
}

pub fn write_file(path: &Path, g: &Graph) -> IoResult<()> {
    let mut s = encode(g)?;
    s.push('\n');
    std::fs::write(path, s).map_err(|e| IoError::file(path, e))
}
