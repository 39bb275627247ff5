//! graph6 codec (one graph per line, UTF-8/ASCII). The standard single-byte
//! header covers orders up to 62; the 4- and 8-byte extended headers cover
//! larger orders. An optional `>>graph6<<` prefix is accepted on input.

use crate::graph::Graph;
use crate::{Error, Result};

const HEADER_PREFIX: &str = ">>graph6<<";
const MAX_ORDER: usize = 100_000;

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

/// Parse a single graph6 line. Vertex order is preserved from the encoding.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (line, base) = match line.strip_prefix(HEADER_PREFIX) {
        Some(rest) => (rest, HEADER_PREFIX.len()),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside graph6 range 63..=126")));
        }
    }

    // vertex count
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated 4-byte header"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(base + bytes.len(), "truncated 8-byte header"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(err(base, format!("vertex count {n} exceeds supported maximum {MAX_ORDER}")));
    }

    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(err(base + bytes.len(), format!(
            "truncated bit field: need {nbytes} data bytes, found {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() > pos + nbytes {
        return Err(err(base + pos + nbytes, "trailing garbage after bit field"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6];
            let shift = 5 - (bit % 6);
            if (byte - 63) >> shift & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += nbytes;
    let _ = pos;
    Graph::from_edges(n, &edges)
}

/// Canonical graph6 line for a graph (no `>>graph6<<` prefix, minimal header).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        out.push(126);
        out.push(126);
        for k in (0..6).rev() {
            out.push(63 + ((n >> (6 * k)) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    #[test]
    fn k2_is_a_underscore() {
        // hand decode: header 'A' = 2 vertices, '_' = 95 -> 32 = 100000,
        // first bit is x(0,1) = 1, so the single edge {0,1}.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(serialize_graph6(&g), "A_");
    }

    #[test]
    fn bw_hand_decode() {
        // 'B' = 3 vertices; 'W' = 87 -> 24 = 011000. Bit order is
        // x(0,1) x(0,2) x(1,2), so edges {0,2} and {1,2}: a path, not K_3.
        let g = parse_graph6("BW").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        // K_3 is all three bits set: 111000 = 56 -> 'w'.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn five_vertex_round_trip() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(serialize_graph6(&g), "D?{");
    }

    #[test]
    fn header_prefix_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn error_offsets() {
        match parse_graph6("") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("{other:?}"),
        }
        // 5 vertices need 2 data bytes; give 1
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, msg }) => {
                assert_eq!(offset, 2);
                assert!(msg.contains("truncated"));
            }
            other => panic!("{other:?}"),
        }
        match parse_graph6("A_X") {
            Err(Error::Graph6 { offset, msg }) => {
                assert_eq!(offset, 2);
                assert!(msg.contains("trailing"));
            }
            other => panic!("{other:?}"),
        }
        // byte below 63
        match parse_graph6("A ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn extended_header_round_trip() {
        let g = generators::path(70).unwrap();
        let s = serialize_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn generator_round_trips() {
        for g in [
            generators::complete(6).unwrap(),
            generators::cycle(9).unwrap(),
            generators::star(5).unwrap(),
            generators::hypercube(4).unwrap(),
            generators::complete_multipartite(&[2, 3, 1]).unwrap(),
            Graph::empty(4),
            Graph::empty(0),
            Graph::empty(1),
        ] {
            let s = serialize_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g, "round trip failed for {s}");
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(seed in 0u64..1000) {
            let n = 1 + (seed % 12) as usize;
            let g = generators::random_connected(n, 0.4, seed).unwrap();
            let s = serialize_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
