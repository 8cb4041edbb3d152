//! Edge-list text and graph6 encodings.

use super::Graph;
use crate::{Error, Result};

/// Largest order accepted by the graph6 reader and writer (single-byte
/// order header).
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Parses the edge-list text format: the first non-comment line is the order,
/// each later non-comment line holds two 0-based vertex indices. Lines whose
/// first non-blank character is `#` and blank lines are skipped.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        match order {
            None => {
                let n: usize = fields
                    .next()
                    .unwrap()
                    .parse()
                    .map_err(|_| parse_err(format!("expected vertex count, found {line:?}")))?;
                if fields.next().is_some() {
                    return Err(parse_err("vertex count line has extra fields".into()));
                }
                order = Some(n);
            }
            Some(n) => {
                let mut endpoint = || -> Result<usize> {
                    let field = fields
                        .next()
                        .ok_or_else(|| parse_err("expected two vertex indices".into()))?;
                    let v: usize = field
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex index {field:?}")))?;
                    if v >= n {
                        return Err(parse_err(format!(
                            "vertex index {v} out of range for order {n}"
                        )));
                    }
                    Ok(v)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if fields.next().is_some() {
                    return Err(parse_err("edge line has extra fields".into()));
                }
                if u == v {
                    return Err(parse_err(format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::new(n, &edges)
}

/// Renders a graph in the edge-list text format.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!(
            "bad character {:?} at offset 0",
            head as char
        )));
    }
    if head == 126 {
        return Err(Error::Graph6(format!(
            "orders above {GRAPH6_MAX_ORDER} are not supported"
        )));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if body.len() < nchars {
        return Err(Error::Graph6(format!(
            "truncated: expected {nchars} data characters, found {}",
            body.len()
        )));
    }
    if body.len() > nchars {
        return Err(Error::Graph6(format!(
            "trailing data: expected {nchars} data characters, found {}",
            body.len()
        )));
    }
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Error::Graph6(format!(
                "bad character {:?} at offset {}",
                c as char,
                i + 1
            )));
        }
    }
    let bit = |k: usize| -> bool { (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 };
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes a graph in graph6. Fails for orders above 62.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + n * n / 12);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let p2 = from_edge_list_text("2\n0 1").unwrap();
        assert_eq!(p2.edges(), vec![(0, 1)]);
        let p4 = from_edge_list_text("# a path\n4\n0 1\n1 2\n\n2 3\n").unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let err = from_edge_list_text("3\n0 5").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn edge_list_errors() {
        assert!(from_edge_list_text("").is_err());
        assert!(from_edge_list_text("# only comment\n").is_err());
        assert!(from_edge_list_text("x\n").is_err());
        assert!(from_edge_list_text("3\n0\n").is_err());
        assert!(from_edge_list_text("3\n0 1 2\n").is_err());
        assert!(from_edge_list_text("3\n1 1\n").is_err());
        assert!(from_edge_list_text("3\n0 -1\n").is_err());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::new(5, &[(0, 4), (1, 3), (2, 3)]).unwrap();
        assert_eq!(from_edge_list_text(&to_edge_list_text(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_hand_decoded() {
        // n = 2 -> '@' + 1 = 'A'; the single bit 1 padded to 100000 = 32 -> '_'.
        let p2 = from_graph6("A_").unwrap();
        assert_eq!(p2.order(), 2);
        assert_eq!(p2.edges(), vec![(0, 1)]);
        assert_eq!(to_graph6(&Graph::new(1, &[]).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::new(0, &[]).unwrap()).unwrap(), "?");
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), p2);
    }

    #[test]
    fn graph6_matches_petgraph_reference() {
        // 5 vertices with edges ac, ae, bd, de encodes as "DQc".
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("A_x_").is_err());
        assert!(from_graph6("A ").is_err());
        assert!(from_graph6("B\u{7f}").is_err());
        assert!(from_graph6("~??").is_err());
        assert!(to_graph6(&Graph::new(63, &[]).unwrap()).is_err());
    }
}
