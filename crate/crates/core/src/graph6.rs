//! graph6 encoding and decoding, bit-exact per the published format.
//!
//! The order is encoded as one byte `n + 63` for `n <= 62`, as `126` plus
//! three bytes for `n <= 258047`, and as `126 126` plus six bytes beyond
//! that. The upper triangle is read column by column (`x_{0,1}, x_{0,2},
//! x_{1,2}, ...`), packed six bits per byte, each byte offset by 63.

use crate::error::Error;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits: u8 = 0;
    let mut filled: u8 = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(bits + 63);
                bits = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((bits << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph, Error> {
    let text = text.trim();
    let stripped = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = stripped.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside the graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = decode_order(bytes)?;
    let pair_count = n * n.saturating_sub(1) / 2;
    let body_bytes = pair_count.div_ceil(6);
    if bytes.len() - pos < body_bytes {
        return Err(err(
            bytes.len(),
            format!(
                "truncated: need {body_bytes} adjacency bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > body_bytes {
        return Err(err(
            pos + body_bytes,
            format!("trailing data after {body_bytes} adjacency bytes"),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j)
                    .expect("upper-triangle pairs are in range");
            }
            bit_index += 1;
        }
    }
    // Padding bits must be zero for a canonical encoding.
    if bit_index % 6 != 0 {
        let byte = bytes[pos + bit_index / 6] - 63;
        let pad = 6 - bit_index % 6;
        if byte & ((1 << pad) - 1) != 0 {
            return Err(err(pos + bit_index / 6, "nonzero padding bits"));
        }
    }
    pos += body_bytes;
    let _ = pos;
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 8-byte order field"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(err(bytes.len(), "truncated 4-byte order field"));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        n = (n << 6) | (b - 63) as usize;
    }
    Ok((n, 4))
}
