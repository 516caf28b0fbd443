//! Text formats: edge lists, graph6 and coloring documents.

use std::fmt::Write as _;

use thiserror::Error;

use crate::dynamic::Coloring;
use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed token {token:?}")]
    Token { line: usize, token: String },
    #[error("line {line}: expected one or two vertices, found {count} tokens")]
    Arity { line: usize, count: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: Vertex, v: Vertex },
    #[error("graph6: byte {byte:#04x} at offset {offset} outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: only graphs with at most 62 vertices are supported (got {0})")]
    Graph6Size(usize),
    #[error("graph6: vertices must be 0..n, found {0}")]
    Graph6Labels(Vertex),
    #[error("graph6: nonzero padding bits")]
    Graph6Padding,
    #[error("coloring: missing header line k=<int>")]
    MissingHeader,
    #[error("line {line}: vertex {vertex} colored twice")]
    Recolored { line: usize, vertex: Vertex },
    #[error("line {line}: color {color} outside 1..={k}")]
    ColorRange { line: usize, color: usize, k: usize },
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Token { line, token: tok.to_string() });
    }
    tok.parse().map_err(|_| ParseError::Token { line, token: tok.to_string() })
}

/// Meaningful lines with 1-based numbers: comments after `#` stripped,
/// blank lines dropped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses lines `u v`; a line with a single vertex declares an isolated
/// vertex.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    for (line, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[..] {
            [v] => {
                g.add_vertex(number(line, v)?);
            }
            [u, v] => {
                let (u, v) = (number(line, u)?, number(line, v)?);
                match g.insert_edge(u, v) {
                    Ok(true) => {}
                    Ok(false) => return Err(ParseError::Duplicate { line, u, v }),
                    Err(GraphError::Loop(vertex)) => return Err(ParseError::Loop { line, vertex }),
                    Err(e) => unreachable!("{e}"),
                }
            }
            _ => return Err(ParseError::Arity { line, count: toks.len() }),
        }
    }
    Ok(g)
}

/// Canonical edge list: edges `min max` in ascending order, then isolated
/// vertices on their own lines.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{v}").unwrap();
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(ParseError::Graph6Byte { offset, byte });
    }
    let Some(&head) = bytes.first() else {
        return Err(ParseError::Graph6Length { expected: 1, found: 0 });
    };
    let n = usize::from(head - 63);
    if n > 62 {
        return Err(ParseError::Graph6Size(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(ParseError::Graph6Length { expected, found: bytes.len() });
    }
    let bit = |i: usize| (bytes[1 + i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                g.insert_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    if (bits..(expected - 1) * 6).any(bit) {
        return Err(ParseError::Graph6Padding);
    }
    Ok(g)
}

/// graph6 of a graph on vertices `0..n`, `n ≤ 62`.
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(ParseError::Graph6Size(n));
    }
    if let Some(v) = g.vertices().find(|&v| v >= n) {
        return Err(ParseError::Graph6Labels(v));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// `k=<k>`, then `vertex color` lines sorted by vertex, then `trace:` and
/// the given trace lines.
pub fn emit_coloring(c: &Coloring, trace: &[String]) -> String {
    let mut out = format!("k={}\n", c.k());
    for (v, col) in c.iter() {
        writeln!(out, "{v} {col}").unwrap();
    }
    if !trace.is_empty() {
        out.push_str("trace:\n");
        for t in trace {
            writeln!(out, "{t}").unwrap();
        }
    }
    out
}

/// Reads a coloring document; everything after `trace:` is ignored.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut c: Option<Coloring> = None;
    for (line, l) in lines(text) {
        if l == "trace:" {
            break;
        }
        let Some(c) = c.as_mut() else {
            let k = l.strip_prefix("k=").ok_or(ParseError::MissingHeader)?;
            c = Some(Coloring::new(number(line, k.trim())?));
            continue;
        };
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v, col] = toks[..] else {
            return Err(ParseError::Arity { line, count: toks.len() });
        };
        let (vertex, color) = (number(line, v)?, number(line, col)?);
        if c.get(vertex).is_some() {
            return Err(ParseError::Recolored { line, vertex });
        }
        c.set(vertex, color).map_err(|_| ParseError::ColorRange { line, color, k: c.k() })?;
    }
    c.ok_or(ParseError::MissingHeader)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, path, petersen};

    #[test]
    fn edgelist_basics() {
        let g = parse_edgelist("0 1\n1 2").unwrap();
        assert_eq!(g, path(3));
        let g = parse_edgelist("# header\n\n2 1  # trailing\n5\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(emit_edgelist(&g), "1 2\n5\n");
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(parse_edgelist("0 0"), Err(ParseError::Loop { line: 1, vertex: 0 }));
        assert_eq!(
            parse_edgelist("0 1\n\n1 0"),
            Err(ParseError::Duplicate { line: 3, u: 1, v: 0 })
        );
        assert!(matches!(parse_edgelist("0 x"), Err(ParseError::Token { line: 1, .. })));
        assert!(matches!(parse_edgelist("0 -1"), Err(ParseError::Token { .. })));
        assert!(matches!(parse_edgelist("0 1 2"), Err(ParseError::Arity { count: 3, .. })));
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(parse_graph6("A_").unwrap(), path(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(emit_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&petersen()).unwrap().len(), 1 + 8);
        assert_eq!(parse_graph6("?").unwrap(), Graph::new());
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("A "), Err(ParseError::Graph6Byte { offset: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(ParseError::Graph6Length { .. })));
        assert_eq!(parse_graph6("A`"), Err(ParseError::Graph6Padding));
        assert!(matches!(parse_graph6("~"), Err(ParseError::Graph6Size(63))));
        assert_eq!(emit_graph6(&parse_edgelist("0 4\n1").unwrap()), Err(ParseError::Graph6Labels(4)));
    }

    #[test]
    fn coloring_documents() {
        let c = Coloring::from_pairs(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let text = emit_coloring(&c, &["PlanarBase n=3".into()]);
        assert_eq!(text, "k=4\n0 1\n1 2\n2 3\ntrace:\nPlanarBase n=3\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
        assert_eq!(parse_coloring("0 1"), Err(ParseError::MissingHeader));
        assert!(matches!(parse_coloring("k=2\n0 3"), Err(ParseError::ColorRange { line: 2, .. })));
        assert!(matches!(parse_coloring("k=2\n0 1\n0 2"), Err(ParseError::Recolored { .. })));
    }
}
