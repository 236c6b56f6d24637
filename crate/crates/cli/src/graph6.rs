//! graph6 encoding.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, as `~` plus
//! three 6-bit groups for `n <= 258047`, and as `~~` plus six groups above
//! that. The upper triangle follows column by column (`(0,1), (0,2),
//! (1,2), (0,3), ...`), packed six bits per byte, most significant first,
//! zero padded, each byte offset by 63.

use lollipop_core::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, Graph6Error> {
    Err(Graph6Error {
        offset,
        message: message.into(),
    })
}

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend(*b"~~");
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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

/// Decodes one graph6 string. An optional `>>graph6<<` header and a
/// trailing newline are accepted; anything else out of place is an error
/// naming the byte offset.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    if bytes[pos..end].ends_with(b"\n") {
        end -= 1;
        if bytes[pos..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    let body = &bytes[..end];
    for (i, &b) in body.iter().enumerate().skip(pos) {
        if !(63..=126).contains(&b) {
            return err(i, format!("byte 0x{b:02x} is outside the graph6 range 63..=126"));
        }
    }
    let group = |count: usize, pos: &mut usize| -> Result<usize, Graph6Error> {
        if *pos + count > body.len() {
            return err(body.len(), "input ends inside the order field");
        }
        let v = body[*pos..*pos + count].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        *pos += count;
        Ok(v)
    };
    if pos >= body.len() {
        return err(pos, "missing order byte");
    }
    let n = if body[pos] != b'~' {
        group(1, &mut pos)?
    } else if body.get(pos + 1) != Some(&b'~') {
        pos += 1;
        group(3, &mut pos)?
    } else {
        pos += 2;
        group(6, &mut pos)?
    };
    if n > MAX_ORDER {
        return err(0, format!("order {n} exceeds the supported maximum of {MAX_ORDER}"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have != need {
        let at = if have < need { body.len() } else { pos + need };
        return err(at, format!("order {n} needs {need} adjacency bytes, found {have}"));
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return err(body.len() - 1, "nonzero padding bits");
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| Graph6Error {
        offset: 0,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lollipop_core::graph::complete;

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), complete(3).unwrap());
    }
}
