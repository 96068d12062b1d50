//! File formats: graph6 for simple graphs (bit-exact, strict padding),
//! a plain edge-list format for multigraphs, and the B/W colouring line.
//!
//! graph6 follows the published format: one printable ASCII line, a size
//! header (`n + 63`, or `~` followed by three sextets for 63 <= n <= 258047)
//! and then the upper triangle of the adjacency matrix in column-major
//! order, packed big-endian six bits per byte, zero-padded.
//!
//! The edge-list document is `n m` on the first line followed by one `u v`
//! line per edge, 0-based, duplicates encoding parallel edges. Files are
//! UTF-8 with LF line endings.

use thiserror::Error;

use crate::graph::{Colour, Colouring, GraphError, Multigraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("payload length mismatch: expected {expected} bytes, got {got}")]
    PayloadLengthMismatch { expected: usize, got: usize },
    #[error("nonzero padding bits")]
    NonCanonicalPadding,
    #[error("graph has parallel edges and cannot be written as graph6")]
    NotSimple,
    #[error("edge {edge} has an endpoint out of range")]
    EndpointOutOfRange { edge: usize },
    #[error("edge {edge} is a loop")]
    LoopRejected { edge: usize },
    #[error("invalid colour character {ch:?} at position {pos}")]
    InvalidColour { pos: usize, ch: char },
}

impl From<GraphError> for CodecError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::LoopRejected { edge } => CodecError::LoopRejected { edge },
            GraphError::EndpointOutOfRange { edge } => CodecError::EndpointOutOfRange { edge },
        }
    }
}

const G6_MAX_ORDER: usize = 258_047;

/// Decodes one graph6 line into a simple multigraph. Strict: byte range,
/// payload length and zero padding are all enforced.
pub fn read_graph6(line: &str) -> Result<Multigraph, CodecError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(CodecError::MalformedHeader(
            "byte outside printable graph6 range".into(),
        ));
    }
    if bytes.is_empty() {
        return Err(CodecError::MalformedHeader("empty line".into()));
    }
    let (n, payload) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(CodecError::MalformedHeader(
                "orders above 258047 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(CodecError::MalformedHeader("truncated size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        if n <= 62 {
            return Err(CodecError::MalformedHeader(
                "long size header used for a small order".into(),
            ));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() != expected {
        return Err(CodecError::PayloadLengthMismatch {
            expected,
            got: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits after the triangle must be zero.
    while !bit.is_multiple_of(6) {
        let byte = payload[bit / 6] - 63;
        if (byte >> (5 - bit % 6)) & 1 == 1 {
            return Err(CodecError::NonCanonicalPadding);
        }
        bit += 1;
    }
    Ok(Multigraph::new(n, edges).expect("triangle decode yields valid edges"))
}

/// Encodes a simple graph as one graph6 line (no trailing newline).
/// Round-trips with [`read_graph6`] bit-exactly.
pub fn write_graph6(g: &Multigraph) -> Result<String, CodecError> {
    if !g.is_simple() {
        return Err(CodecError::NotSimple);
    }
    let n = g.n();
    if n > G6_MAX_ORDER {
        return Err(CodecError::MalformedHeader(
            "orders above 258047 are not supported".into(),
        ));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3F) as u8 + 63);
        out.push(((n >> 6) & 0x3F) as u8 + 63);
        out.push((n & 0x3F) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the `n m` + edge-lines document. Trailing newline optional;
/// multiplicity and edge order are preserved exactly.
pub fn read_edge_list(text: &str) -> Result<Multigraph, CodecError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CodecError::MalformedHeader("empty document".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CodecError::MalformedHeader(format!("bad header line {header:?}")))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CodecError::MalformedHeader(format!("bad header line {header:?}")))?;
    if parts.next().is_some() {
        return Err(CodecError::MalformedHeader(format!(
            "trailing tokens in header {header:?}"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let mut parts = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize, CodecError> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| CodecError::MalformedHeader(format!("bad edge line {line:?}")))
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(CodecError::MalformedHeader(format!(
                "trailing tokens in edge line {line:?}"
            )));
        }
        if u >= n || v >= n {
            return Err(CodecError::EndpointOutOfRange { edge: i });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CodecError::MalformedHeader(format!(
            "header promises {m} edges, document has {}",
            edges.len()
        )));
    }
    Ok(Multigraph::new(n, edges)?)
}

/// Canonical edge-list document: trailing LF, no extra whitespace.
/// `read_edge_list(write_edge_list(g))` reproduces `g` exactly, and writing
/// a parsed canonical document is byte-identical.
pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a single-line colouring document over the alphabet {B, W}.
pub fn read_colouring(text: &str) -> Result<Colouring, CodecError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let mut colours = Vec::with_capacity(line.len());
    for (pos, ch) in line.chars().enumerate() {
        colours.push(match ch {
            'B' => Colour::Black,
            'W' => Colour::White,
            other => return Err(CodecError::InvalidColour { pos, ch: other }),
        });
    }
    Ok(Colouring::new(colours))
}

/// One line of B/W characters, vertex `i` at position `i`, trailing LF.
pub fn write_colouring(c: &Colouring) -> String {
    let mut out: String = c.colours().iter().map(|col| col.letter()).collect();
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_named;
    use crate::rng::SplitMix64;

    #[test]
    fn k4_decodes_from_canonical_line() {
        // 'C' = 67 -> n = 4; '~' = 126 -> sextet 111111: all six pairs.
        let g = read_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert!(g.is_cubic());
        assert!(crate::iso::isomorphic(&g, &gen_named("k4").unwrap()));
    }

    #[test]
    fn k4_encodes_to_canonical_line() {
        assert_eq!(write_graph6(&gen_named("k4").unwrap()).unwrap(), "C~");
    }

    #[test]
    fn trivial_orders() {
        // '?' = 63 -> n = 0, '@' = 64 -> n = 1; both have empty payloads.
        let empty = read_graph6("?").unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));
        let single = read_graph6("@").unwrap();
        assert_eq!((single.n(), single.m()), (1, 0));
        assert_eq!(write_graph6(&empty).unwrap(), "?");
        assert_eq!(write_graph6(&single).unwrap(), "@");
    }

    #[test]
    fn single_edge_line() {
        // n = 2, bit x01 = 1 -> sextet 100000 = 32 -> '_'.
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "A_");
        assert_eq!(read_graph6("A_").unwrap().edges(), &[(0, 1)]);
    }

    #[test]
    fn petersen_census_line() {
        // Canonical census encoding of the Petersen graph.
        let g = read_graph6("IsP@OkWHG").unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Some(5));
        assert!(crate::iso::isomorphic(&g, &gen_named("petersen").unwrap()));
    }

    #[test]
    fn multigraph_rejected_by_graph6_writer() {
        assert_eq!(
            write_graph6(&gen_named("theta").unwrap()),
            Err(CodecError::NotSimple)
        );
    }

    #[test]
    fn corrupt_padding_rejected() {
        // n = 2 leaves five padding bits; "A_" flips only the edge bit, so
        // any other set bit must be rejected.
        let err = read_graph6("A`").unwrap_err();
        assert_eq!(err, CodecError::NonCanonicalPadding);
    }

    #[test]
    fn payload_length_enforced() {
        assert_eq!(
            read_graph6("C"),
            Err(CodecError::PayloadLengthMismatch {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            read_graph6("C~~"),
            Err(CodecError::PayloadLengthMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn byte_range_enforced() {
        assert!(matches!(
            read_graph6("C\u{20}"),
            Err(CodecError::MalformedHeader(_))
        ));
    }

    #[test]
    fn long_header_roundtrip() {
        // Sparse graph on 100 vertices exercises the three-sextet header.
        let edges: Vec<(usize, usize)> = (0..99).map(|i| (i, i + 1)).collect();
        let g = Multigraph::new(100, edges).unwrap();
        let line = write_graph6(&g).unwrap();
        assert_eq!(line.as_bytes()[0], 126);
        let back = read_graph6(&line).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn graph6_roundtrip_random_simple_graphs() {
        let mut rng = SplitMix64::new(0x6EA9);
        for _ in 0..100 {
            let n = rng.below(13);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.below(2) == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Multigraph::new(n, edges).unwrap();
            let line = write_graph6(&g).unwrap();
            let back = read_graph6(&line).unwrap();
            assert_eq!(back.n(), g.n());
            // Same labelled adjacency; edge order is canonical column-major.
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        assert_eq!(back.adjacent(u, v), g.adjacent(u, v));
                    }
                }
            }
            assert_eq!(write_graph6(&back).unwrap(), line);
        }
    }

    #[test]
    fn theta_edge_list_roundtrip() {
        let doc = "2 3\n0 1\n0 1\n0 1\n";
        let g = read_edge_list(doc).unwrap();
        assert_eq!(g, gen_named("theta").unwrap());
        assert_eq!(write_edge_list(&g), doc);
    }

    #[test]
    fn edge_list_endpoint_out_of_range() {
        assert_eq!(
            read_edge_list("2 1\n0 2\n"),
            Err(CodecError::EndpointOutOfRange { edge: 0 })
        );
    }

    #[test]
    fn edge_list_loop_rejected() {
        assert_eq!(
            read_edge_list("2 1\n1 1\n"),
            Err(CodecError::LoopRejected { edge: 0 })
        );
    }

    #[test]
    fn edge_list_header_mismatch() {
        assert!(matches!(
            read_edge_list("2 2\n0 1\n"),
            Err(CodecError::MalformedHeader(_))
        ));
        assert!(matches!(
            read_edge_list("x y\n"),
            Err(CodecError::MalformedHeader(_))
        ));
    }

    #[test]
    fn colouring_document_roundtrip() {
        use Colour::*;
        let c = Colouring::new(vec![Black, White, White, Black]);
        let doc = write_colouring(&c);
        assert_eq!(doc, "BWWB\n");
        assert_eq!(read_colouring(&doc).unwrap(), c);
    }

    #[test]
    fn colouring_rejects_other_alphabet() {
        assert_eq!(
            read_colouring("BWX"),
            Err(CodecError::InvalidColour { pos: 2, ch: 'X' })
        );
    }
}
