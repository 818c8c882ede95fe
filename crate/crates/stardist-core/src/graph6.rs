//! graph6 codec and the edge-list fallback format.
//!
//! graph6 layout (short header form, n <= 62): one byte `63 + n`, then the
//! upper triangle of the adjacency matrix in column order (columns 1..n-1,
//! rows 0..c-1 within column c), packed 6 bits per byte, most significant
//! bit first, final partial group padded with zero bits, every byte offset
//! by 63. Streams are newline-separated, one graph per line.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count representable with the short (single byte) header.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed length header")]
    BadHeader,
    #[error("byte {0} outside the printable range 63..=126")]
    ByteOutOfRange(u8),
    #[error("expected {expected} payload bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    TrailingBits,
    #[error("graph order {0} exceeds the short header range (max {GRAPH6_MAX_N})")]
    TooLarge(usize),
}

fn payload_len(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` stream header is accepted
/// and stripped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b));
        }
    }
    if bytes[0] == 126 {
        // extended headers exist in the wild but are outside the supported range
        return Err(Graph6Error::BadHeader);
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: payload.len(),
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = payload[bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    // padding bits of the final partial group must be zero
    if bit_index % 6 != 0 {
        let byte = payload[bit_index / 6] - 63;
        let pad_mask = (1u8 << (6 - bit_index % 6)) - 1;
        if byte & pad_mask != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

/// Encodes a graph with n <= 62 as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(row, col) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the fallback edge-list format: first line `n m`, then m lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GraphError::MalformedEdgeList("missing header".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::MalformedEdgeList("bad vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::MalformedEdgeList("bad edge count".into()))?;
    if it.next().is_some() {
        return Err(GraphError::MalformedEdgeList("trailing tokens in header".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| GraphError::MalformedEdgeList("fewer edge lines than declared".into()))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line: {line}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line: {line}")))?;
        if it.next().is_some() {
            return Err(GraphError::MalformedEdgeList(format!("trailing tokens: {line}")));
        }
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(GraphError::MalformedEdgeList("more edge lines than declared".into()));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn smallest_headers() {
        // "@" is K1
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(write_graph6(&g).unwrap(), "@");

        // "A_" is K2: '_' - 63 = 32 = 0b100000, first bit set => edge 0-1
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert!(g.has_edge(0, 1));
        assert_eq!(write_graph6(&g).unwrap(), "A_");

        // "?" is K0
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn five_vertex_hand_decode() {
        // "D?{": n = 5; first payload byte '?' = 000000 covers pairs
        // (0,1),(0,2),(1,2),(0,3),(1,3),(2,3); second byte '{' = 111100
        // covers (0,4),(1,4),(2,4),(3,4) then two padding zeros.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn stream_header_is_stripped() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.n(), 2);
    }

    #[test]
    fn error_cases() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::BadHeader));
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::WrongLength {
                expected: 1,
                found: 0
            })
        );
        // n=2 needs 1 triangle bit; low 5 bits must be zero padding
        assert_eq!(parse_graph6("A o"), Err(Graph6Error::ByteOutOfRange(b' ')));
        assert_eq!(parse_graph6("AO"), Err(Graph6Error::TrailingBits));
        assert!(matches!(
            write_graph6(&Graph::empty(63)),
            Err(Graph6Error::TooLarge(63))
        ));
    }

    #[test]
    fn family_round_trips() {
        for g in [
            families::path(1),
            families::path(7),
            families::cycle(5),
            families::complete(5),
            families::star(4),
            families::hourglass(),
            families::petersen(),
            families::net(),
        ] {
            let enc = write_graph6(&g).unwrap();
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = families::net();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
        assert!(parse_edge_list("1 2\n").is_err());
    }
}
