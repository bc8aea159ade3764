use crate::Failure;
use anyhow::{Context, Result};
use clap::ValueEnum;
use overlap_core::bounds::BoundCertificate;
use overlap_core::graph::{parse_edge_list, parse_graph6};
use overlap_core::model::parse_rep;
use overlap_core::planar::{parse_rotation, PlaneGraph};
use overlap_core::{Graph, OverlapRep};
use std::io::Read;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Rotation system if any line contains `:`, else an edge list when the
    /// first line has two numbers, else graph6.
    Auto,
    Edges,
    Graph6,
    Rotation,
}

/// A graph, with its embedding when the input was a rotation system.
pub struct Loaded {
    pub graph: Graph,
    pub plane: Option<PlaneGraph>,
}

pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn detect(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if text.lines().any(|l| !l.trim_start().starts_with('#') && l.contains(':')) {
        GraphFormat::Rotation
    } else if first.is_some_and(|l| l.split_whitespace().count() == 2) {
        GraphFormat::Edges
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph_text(text: &str, format: GraphFormat) -> Result<Loaded, Failure> {
    let format = if format == GraphFormat::Auto { detect(text) } else { format };
    let parsed = match format {
        GraphFormat::Rotation => parse_rotation(text).map(|pg| Loaded { graph: pg.graph().clone(), plane: Some(pg) }),
        GraphFormat::Edges => parse_edge_list(text).map(|graph| Loaded { graph, plane: None }),
        GraphFormat::Graph6 | GraphFormat::Auto => parse_graph6(text).map(|graph| Loaded { graph, plane: None }),
    };
    parsed.map_err(|e| Failure::Parse(e.to_string()))
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<Loaded> {
    let text = read_text(path)?;
    parse_graph_text(&text, format).with_context(|| format!("parsing {}", path.display()))
}

/// A representation file, or an upper-bound certificate whose witness is used.
pub fn load_rep(path: &Path) -> Result<OverlapRep> {
    let text = read_text(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let rep = if first.starts_with("phi") || first.starts_with("pol") {
        BoundCertificate::parse(&text)
            .map_err(|e| Failure::Parse(e.to_string()))
            .and_then(|c| c.witness.ok_or_else(|| Failure::Parse("certificate has no witness".into())))
    } else {
        parse_rep(&text).map_err(|e| Failure::Parse(e.to_string()))
    };
    rep.with_context(|| format!("parsing {}", path.display()))
}

/// Writes to `path`, or to standard output when `path` is absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
