use crate::input::{parse_graph_text, GraphFormat};
use anyhow::{Context, Result};
use overlap_core::bounds::{certify, BoundsOptions};
use overlap_core::exact::SearchStatus;
use overlap_core::Quantity;
use rayon::prelude::*;
use std::path::{Path, PathBuf};

pub const COLUMNS: [&str; 9] = ["name", "n", "m", "lower", "lower_rule", "upper", "upper_rule", "pinned", "exact"];

pub struct Table {
    pub csv: String,
    pub failures: usize,
}

/// Files directly inside `dir`, skipping hidden ones, sorted by name.
fn inputs(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|f| f.to_string_lossy().starts_with('.')))
        .collect();
    files.sort();
    Ok(files)
}

fn row(path: &Path, format: GraphFormat, opts: &BoundsOptions) -> (Vec<String>, bool) {
    let name = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let fail = |msg: String| {
        let mut r = vec![name.clone(), String::new(), String::new(), String::new(), format!("error: {msg}")];
        r.extend([String::new(), String::new(), "error".into(), String::new()]);
        (r, false)
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let loaded = match parse_graph_text(&text, format) {
        Ok(l) => l,
        Err(e) => return fail(e.to_string()),
    };
    let g = &loaded.graph;
    let report = match certify(g, Quantity::Phi, loaded.plane.as_ref(), opts) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let low = report.best_lower();
    let exact = match &report.exact {
        Some(r) if r.status == SearchStatus::Exact => r.value.to_string(),
        Some(r) => r.status.to_string(),
        None => String::new(),
    };
    let r = vec![
        name,
        g.n().to_string(),
        g.edge_count().to_string(),
        low.value.to_string(),
        low.rule.clone(),
        report.upper.value.to_string(),
        report.upper.rule.clone(),
        report.pinned().is_some().to_string(),
        exact,
    ];
    (r, true)
}

/// Certifies φ for every file and renders the table in file-name order.
pub fn run(dir: &Path, format: GraphFormat, opts: &BoundsOptions) -> Result<Table> {
    let files = inputs(dir)?;
    let rows: Vec<(Vec<String>, bool)> = files.par_iter().map(|p| row(p, format, opts)).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS)?;
    for (r, _) in &rows {
        w.write_record(r)?;
    }
    let csv = String::from_utf8(w.into_inner().context("flushing CSV")?).context("CSV is UTF-8")?;
    Ok(Table { csv, failures: rows.iter().filter(|(_, ok)| !ok).count() })
}
