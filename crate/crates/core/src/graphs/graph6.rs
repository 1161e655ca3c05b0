//! graph6 text encoding.
//!
//! The upper triangle is read column by column (`(0,1), (0,2), (1,2), (0,3),
//! …`), packed six bits per byte most-significant first, and offset by 63.
//! Orders up to 62 take one size byte, up to 258047 take `~` plus three
//! bytes, larger orders `~~` plus six bytes.

use super::{GraphError, SimpleGraph};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn encode_graph6_bytes(g: &SimpleGraph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}

pub fn encode_graph6(g: &SimpleGraph) -> String {
    // Every byte is in 63..=126, so this is ASCII.
    String::from_utf8(encode_graph6_bytes(g)).expect("graph6 is ASCII")
}

fn sextet(bytes: &[u8], pos: usize) -> Result<usize, GraphError> {
    let b = *bytes.get(pos).ok_or(GraphError::Truncated)?;
    if !(OFFSET..=126).contains(&b) {
        return Err(GraphError::MalformedByte { byte: b, pos });
    }
    Ok(usize::from(b - OFFSET))
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn decode_graph6(text: &str) -> Result<SimpleGraph, GraphError> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Truncated);
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for p in 1..4 {
            n = (n << 6) | sextet(bytes, p)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for p in 2..8 {
            n = (n << 6) | sextet(bytes, p)?;
        }
        (n, 8)
    };
    for p in pos..bytes.len() {
        sextet(bytes, p)?;
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = pos + bit_count.div_ceil(6);
    if bytes.len() < expected {
        return Err(GraphError::Truncated);
    }
    if bytes.len() > expected {
        return Err(GraphError::SizeMismatch {
            n,
            expected,
            found: bytes.len(),
        });
    }
    let mut g = SimpleGraph::empty(n);
    let mut word = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if word >> left & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&SimpleGraph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&SimpleGraph::empty(5)), "D??");
        assert_eq!(encode_graph6(&SimpleGraph::empty(0)), "?");
        assert_eq!(encode_graph6(&SimpleGraph::empty(1)), "@");
        // a-c, a-e, b-d, d-e on five vertices.
        let g = SimpleGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn large_header() {
        let g = SimpleGraph::path(63);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(
            decode_graph6("B w"),
            Err(GraphError::MalformedByte { byte: b' ', pos: 1 })
        ));
        assert!(matches!(decode_graph6("D?"), Err(GraphError::Truncated)));
        assert!(matches!(decode_graph6(""), Err(GraphError::Truncated)));
        assert!(matches!(
            decode_graph6("Bw?"),
            Err(GraphError::SizeMismatch { .. })
        ));
        assert_eq!(
            decode_graph6(">>graph6<<Bw\n").unwrap(),
            SimpleGraph::complete(3)
        );
    }
}
