//! graph6 (short form): one size byte `n + 63`, then the upper triangle read
//! column by column, six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const SHORT_FORM_MAX: usize = 62;

/// Encodes `g` as graph6. Only the single-byte size prefix is supported.
pub fn graph6_encode(g: &Graph) -> Result<Vec<u8>> {
    if g.order() > SHORT_FORM_MAX {
        return Err(Error::Unsupported(format!(
            "graph6 short form holds at most {SHORT_FORM_MAX} vertices, got {}",
            g.order()
        )));
    }
    let mut out = vec![g.order() as u8 + BIAS];
    push_upper_triangle(g, &mut out);
    Ok(out)
}

/// graph6 body with the long-form size prefix allowed; used for canonical
/// forms of 63- and 64-vertex graphs.
pub(crate) fn graph6_any_order(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = if n <= SHORT_FORM_MAX {
        vec![n as u8 + BIAS]
    } else {
        vec![126, (n >> 12 & 63) as u8 + BIAS, (n >> 6 & 63) as u8 + BIAS, (n & 63) as u8 + BIAS]
    };
    push_upper_triangle(g, &mut out);
    out
}

fn push_upper_triangle(g: &Graph, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..g.order() {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
}

/// Decodes a short-form graph6 string. The input must be exactly one graph
/// with no line terminator; nonzero padding bits are rejected.
pub fn graph6_decode(bytes: &[u8]) -> Result<Graph> {
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(BIAS..=126).contains(&head) {
        return Err(Error::Graph6(format!("byte {head:#04x} at offset 0 is outside [63, 126]")));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form size prefix (n > 62) is not supported".into()));
    }
    let n = (head - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if let Some(pos) = body.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {:#04x} at offset {} is outside [63, 126]",
            body[pos],
            pos + 1
        )));
    }
    if body.len() < expected {
        return Err(Error::Graph6(format!(
            "length: order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(Error::Graph6(format!(
            "trailing garbage: {} bytes after offset {}",
            body.len() - expected,
            expected + 1
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, empty, path};

    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&complete(3)).unwrap(), b"Bw");
        assert_eq!(graph6_encode(&complete(4)).unwrap(), b"C~");
        assert_eq!(graph6_encode(&empty(0)).unwrap(), b"?");
        assert_eq!(graph6_encode(&empty(1)).unwrap(), b"@");
        // the 5-vertex example from petgraph's graph6 tests: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g).unwrap(), b"DQc");
    }

    #[test]
    fn decode_known() {
        assert_eq!(graph6_decode(b"Bw").unwrap(), complete(3));
        assert_eq!(graph6_decode(b"C~").unwrap(), complete(4));
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &empty(1)).unwrap();
        let s = graph6_encode(&c4k1).unwrap();
        assert_eq!(graph6_decode(&s).unwrap(), c4k1);
    }

    #[test]
    fn decode_errors() {
        assert!(graph6_decode(b"").is_err());
        assert!(graph6_decode(b"C").is_err(), "missing data byte");
        assert!(graph6_decode(b"Bw?").is_err(), "trailing garbage");
        assert!(graph6_decode(b"Bw\n").is_err(), "line terminator is garbage");
        assert!(graph6_decode(b"B\x7f").is_err(), "byte above 126");
        assert!(graph6_decode(b"B ").is_err(), "byte below 63");
        assert!(graph6_decode(b"~?").is_err(), "long form");
        assert!(graph6_decode(b"Bx").is_err(), "padding bit set");
    }

    #[test]
    fn encode_limits() {
        assert!(graph6_encode(&path(62)).is_ok());
        assert!(graph6_encode(&path(63)).is_err());
        assert_eq!(graph6_any_order(&empty(63))[..4], [126, 63, 63, 126]);
    }
}
