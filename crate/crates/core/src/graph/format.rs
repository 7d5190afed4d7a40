//! graph6 and plain edge-list serialization.

use std::fmt::Write as _;

use super::SimpleGraph;
use crate::error::GraphError;

/// Largest order representable with the single-byte graph6 size header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &SimpleGraph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode_graph6(text: &str) -> Result<SimpleGraph, GraphError> {
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(bad("empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(bad("size byte outside 63..=126"));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_VERTICES {
        return Err(bad("multi-byte size headers are not supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expect {
        return Err(GraphError::MalformedGraph6(format!(
            "expected {expect} data bytes for n={n}, found {}",
            data.len()
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut k = 0;
    let mut j = 1;
    let mut i = 0;
    for (idx, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad("data byte outside 63..=126"));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let set = (v >> shift) & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(GraphError::MalformedGraph6(format!("nonzero padding in byte {idx}")));
                }
                continue;
            }
            if set {
                g.add_edge(i, j);
            }
            k += 1;
            i += 1;
            if i == j {
                j += 1;
                i = 0;
            }
        }
    }
    Ok(g)
}

/// Parses the plain edge-list format: the vertex count on the first line,
/// then one `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, GraphError> {
    let bad = |line: usize, msg: &str| GraphError::MalformedEdgeList(format!("line {line}: {msg}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((ln, head)) = lines.next() else {
        return Err(GraphError::MalformedEdgeList("empty input".into()));
    };
    let n: usize = head.parse().map_err(|_| bad(ln, "expected vertex count"))?;
    let mut pairs = Vec::new();
    for (ln, line) in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad(ln, "expected two vertex indices"));
        };
        let u: usize = a.parse().map_err(|_| bad(ln, "bad vertex index"))?;
        let v: usize = b.parse().map_err(|_| bad(ln, "bad vertex index"))?;
        pairs.push((u, v));
    }
    SimpleGraph::from_edge_list(n, &pairs)
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Accepts either format: text whose first meaningful line is a lone integer
/// is an edge list, anything else is graph6.
pub fn parse_graph_text(text: &str) -> Result<SimpleGraph, GraphError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => parse_edge_list(text),
        Some(l) => {
            let rest = text.lines().map(str::trim).filter(|l| !l.is_empty()).count();
            if rest > 1 {
                return Err(GraphError::MalformedGraph6("trailing data after graph6 line".into()));
            }
            decode_graph6(l)
        }
        None => Err(GraphError::MalformedGraph6("empty input".into())),
    }
}
