use super::Graph;
use crate::parse::{content_lines, parse_usize, ParseError};
use std::fmt::Write;

/// Parses `n m` followed by `m` lines `u v` (0-based).
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(ParseError::new(line_no, "header must be `n m`"));
    }
    let n = parse_usize(head[0], line_no)?;
    let m = parse_usize(head[1], line_no)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::new(line_no, "edge lines must be `u v`"));
        }
        let u = parse_usize(toks[0], line_no)?;
        let v = parse_usize(toks[1], line_no)?;
        g.add_edge(u, v).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(ParseError::new(0, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Inverse of [`parse_edge_list`]; edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(ParseError::new(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(ParseError::new(1, "empty graph6 string")),
        [126, 126, ..] => return Err(ParseError::new(1, "graphs above 258047 vertices unsupported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(ParseError::new(1, "truncated graph6 size field")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if rest.len() != need {
        return Err(ParseError::new(1, format!("expected {need} data bytes, found {}", rest.len())));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("graph6 pairs are distinct");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 size field overflow");
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
