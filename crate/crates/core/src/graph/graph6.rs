//! graph6 encoding: vertex count header, then the upper triangle of the
//! adjacency matrix column by column, packed six bits per byte with offset 63.

use super::{GraphError, SimpleGraph};

const OFFSET: u8 = 63;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else if n < 258_048 {
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

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let sextet = |b: u8| -> Result<usize, GraphError> {
        if (OFFSET..=OFFSET + 63).contains(&b) {
            Ok(usize::from(b - OFFSET))
        } else {
            Err(GraphError::Graph6(format!("byte {b} outside 63..=126")))
        }
    };
    let read = |from: usize, count: usize| -> Result<usize, GraphError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| GraphError::Graph6("truncated order header".into()))?;
        chunk.iter().try_fold(0usize, |acc, &b| Ok((acc << 6) | sextet(b)?))
    };
    match bytes.first() {
        None => Err(GraphError::Graph6("empty string".into())),
        Some(&126) if bytes.get(1) == Some(&126) => Ok((read(2, 6)?, 8)),
        Some(&126) => Ok((read(1, 3)?, 4)),
        Some(&b) => Ok((sextet(b)?, 1)),
    }
}

pub fn decode(s: &str) -> Result<SimpleGraph, GraphError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let (n, header) = decode_order(bytes)?;
    let body = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = SimpleGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(OFFSET..=OFFSET + 63).contains(&byte) {
                return Err(GraphError::Graph6(format!("byte {byte} outside 63..=126")));
            }
            if (byte - OFFSET) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - OFFSET;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // standard examples from the format description
        let k4 = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(encode(&k4), "C~");
        let p3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
        assert_eq!(encode(&SimpleGraph::empty(0)), "?");
        assert_eq!(encode(&SimpleGraph::empty(1)), "@");
        let g = SimpleGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn large_order_header() {
        let g = SimpleGraph::from_edges(70, [(0, 69), (3, 4)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("B\x7f").is_err());
        // padding bits must be zero: 3 vertices use 3 of 6 bits
        assert!(decode("Bh").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..40, seed in any::<u64>()) {
            let mut state = seed;
            let mut g = SimpleGraph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 62 == 0 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g.clone());
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
