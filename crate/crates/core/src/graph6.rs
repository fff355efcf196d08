//! graph6 text encoding.
//!
//! A graph6 line is a size header followed by the upper triangle of the
//! adjacency matrix, column by column: `(0,1), (0,2), (1,2), (0,3), ...`.
//! Bits are packed big-endian into six-bit groups, each group offset by 63
//! so the output is printable ASCII. The final group is zero-padded.
//!
//! Sizes up to 62 use a single header byte `n + 63`. Larger sizes use `~`
//! followed by three six-bit groups (18 bits); graphs above 258047 vertices
//! would need the `~~` form, which this crate never produces because of the
//! 512-vertex cap.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Graph6Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn decode_byte(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let b = bytes[offset];
    if !(OFFSET..=OFFSET + 63).contains(&b) {
        return Err(Graph6Error::InvalidByte { byte: b, offset });
    }
    Ok(b - OFFSET)
}

fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] != b'~' {
        return Ok((decode_byte(bytes, 0)? as usize, 1));
    }
    if bytes.get(1) == Some(&b'~') {
        if bytes.len() < 8 {
            return Err(Graph6Error::Header("truncated 36-bit size".into()));
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | decode_byte(bytes, i)? as usize;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::Header("truncated 18-bit size".into()));
    }
    let mut n = 0usize;
    for i in 1..4 {
        n = (n << 6) | decode_byte(bytes, i)? as usize;
    }
    if n < 63 {
        return Err(Graph6Error::Header(format!(
            "size {n} must use the one-byte header"
        )));
    }
    Ok((n, 4))
}

/// Decodes one graph6 line (without its trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = parse_header(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let expected = payload_len(n);
    let found = bytes.len() - start;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found }.into());
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage { expected }.into());
    }

    let mut adj = vec![VertexSet::new(); n];
    let mut bit = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    let mut groups = Vec::with_capacity(expected);
    for i in 0..expected {
        groups.push(decode_byte(bytes, start + i)?);
    }
    for j in 1..n {
        for i in 0..j {
            let g = groups[bit / 6];
            if g >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    if total % 6 != 0 {
        let pad = 6 - total % 6;
        if groups[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding.into());
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_vectors() {
        let k4 = Graph::complete(4).unwrap();
        let e4 = Graph::empty(4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(to_graph6(&e4), "C?");
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        assert_eq!(parse_graph6("C?").unwrap(), e4);
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), c5);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(100).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = Graph::path(512).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty.into()));
        assert!(matches!(
            parse_graph6("D"),
            Err(Error::Graph6(Graph6Error::Truncated { expected: 2, found: 0 }))
        ));
        assert!(matches!(
            parse_graph6("Dhcx"),
            Err(Error::Graph6(Graph6Error::TrailingGarbage { .. }))
        ));
        assert!(matches!(
            parse_graph6("C\u{7f}"),
            Err(Error::Graph6(Graph6Error::InvalidByte { offset: 1, .. }))
        ));
        assert!(matches!(
            parse_graph6("Dhd"),
            Err(Error::Graph6(Graph6Error::NonzeroPadding))
        ));
        assert!(matches!(
            parse_graph6("~?A"),
            Err(Error::Graph6(Graph6Error::Header(_)))
        ));
        // a long header encoding a small size is not canonical
        assert!(matches!(
            parse_graph6("~??D"),
            Err(Error::Graph6(Graph6Error::Header(_)))
        ));
        // 513 vertices
        assert_eq!(parse_graph6("~?G@"), Err(Error::TooManyVertices(513)));
    }
}
