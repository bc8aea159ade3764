use super::{LabelSet, OverlapRep};
use crate::parse::{content_lines, parse_usize, ParseError};
use std::fmt::Write;

/// Line `t`, then `v: l1 l2 ...` for every vertex in order.
pub fn to_text(rep: &OverlapRep) -> String {
    let mut out = format!("{}\n", rep.size());
    for (v, s) in rep.sets().iter().enumerate() {
        writeln!(out, "{v}: {s}").unwrap();
    }
    out
}

/// Parses the representation format. Vertex lines may come in any order but
/// must cover `0..n` exactly once; the announced `t` must equal the number of
/// distinct labels. Labels are renumbered canonically.
pub fn parse_rep(text: &str) -> Result<OverlapRep, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, head) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let t = parse_usize(head, line_no)?;
    let mut sets: Vec<Option<LabelSet>> = Vec::new();
    for (line_no, line) in lines {
        let (v, rest) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(line_no, "expected `v: l1 l2 ...`"))?;
        let v = parse_usize(v.trim(), line_no)?;
        let mut set = LabelSet::new();
        for tok in rest.split_whitespace() {
            let l = parse_usize(tok, line_no)?;
            if l == 0 || l > u32::MAX as usize {
                return Err(ParseError::new(line_no, format!("label {l} out of range")));
            }
            set.insert(l as u32);
        }
        if set.is_empty() {
            return Err(ParseError::new(line_no, format!("vertex {v} has an empty set")));
        }
        if sets.len() <= v {
            sets.resize(v + 1, None);
        }
        if sets[v].replace(set).is_some() {
            return Err(ParseError::new(line_no, format!("vertex {v} listed twice")));
        }
    }
    let sets: Vec<LabelSet> = sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| ParseError::new(0, format!("vertex {v} missing"))))
        .collect::<Result<_, _>>()?;
    let rep = OverlapRep::new(sets).map_err(|e| ParseError::new(0, e.to_string()))?;
    if rep.size() != t {
        return Err(ParseError::new(
            line_no,
            format!("header announces {t} labels, found {}", rep.size()),
        ));
    }
    Ok(rep)
}
