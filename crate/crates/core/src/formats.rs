//! Graph ingestion and export: graph6 strings and DIMACS ".col" edge lists.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("dimacs line {0}: {1}")]
    Dimacs(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a graph6 string (no header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n < 63 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= 258047, "graph6 encoding limited to n <= 258047 here");
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.adjacent(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes a graph6 string (optionally prefixed with ">>graph6<<").
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim().trim_start_matches(">>graph6<<");
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6("empty string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6(format!("invalid byte {b}")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(FormatError::Graph6("unsupported size header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for n={}, got {}",
            need,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    let mut left = 0;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if cur >> 5 & 1 == 1 {
                edges.push((u, v));
            }
            cur <<= 1;
            left -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    Ok(Graph::from_edges(n, &edges)?)
}

/// Parses a DIMACS ".col" edge list. Vertices are 1-indexed in the file.
/// Loops and duplicate edges are rejected with a diagnostic.
pub fn from_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                let kind = parts.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(FormatError::Dimacs(
                        lineno,
                        format!("expected 'p edge', got 'p {kind}'"),
                    ));
                }
                let nv = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| FormatError::Dimacs(lineno, "bad vertex count".into()))?;
                n = Some(nv);
            }
            Some("e") => {
                let u: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| FormatError::Dimacs(lineno, "bad edge endpoint".into()))?;
                let v: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| FormatError::Dimacs(lineno, "bad edge endpoint".into()))?;
                if u == 0 || v == 0 {
                    return Err(FormatError::Dimacs(lineno, "vertices are 1-indexed".into()));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(FormatError::Dimacs(
                    lineno,
                    format!("unknown record '{other}'"),
                ));
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| FormatError::Dimacs(0, "missing 'p edge' line".into()))?;
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn graph6_known_strings() {
        // K4 is "C~", C5 is "DqK" in canonical labelling? Check by structure
        // instead: round-trip plus a couple of fixed references.
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        let p = from_graph6("DQc").unwrap();
        assert_eq!(p.n(), 5);
    }

    #[test]
    fn graph6_roundtrip() {
        for g in [
            Graph::empty(0),
            Graph::empty(1),
            Graph::cycle(7),
            Graph::petersen(),
            Graph::complete(12),
            Graph::path(70),
        ] {
            let s = to_graph6(&g);
            let back = from_graph6(&s).unwrap();
            assert_eq!(g, back, "graph6 roundtrip failed for {s}");
        }
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err()); // truncated K4-sized header
        assert!(from_graph6("\u{7f}ab").is_err());
    }

    #[test]
    fn dimacs_roundtrip_and_diagnostics() {
        let g = Graph::petersen();
        let text = to_dimacs(&g);
        let back = from_dimacs(&text).unwrap();
        assert_eq!(g, back);

        let loops = "p edge 3 1\ne 2 2\n";
        assert!(from_dimacs(loops).is_err());
        let dup = "p edge 3 2\ne 1 2\ne 2 1\n";
        assert!(from_dimacs(dup).is_err());
        let nohdr = "e 1 2\n";
        assert!(from_dimacs(nohdr).is_err());
    }
}
