//! Explicit representations of small graphs, and a router for graphs on at
//! most five vertices.

use super::{edge_bound_rep, extend_leaf, reduce, unreduce, ConstructionError};
use crate::graph::{find_isomorphism, Graph};
use crate::model::{Label, OverlapRep, RepKind};
use crate::tree::tree_overlap_rep;

#[derive(Debug, Clone)]
pub struct SmallEntry {
    pub name: &'static str,
    pub rep: OverlapRep,
}

impl SmallEntry {
    /// The graph the sets represent: vertices adjacent iff their sets overlap.
    pub fn graph(&self) -> Graph {
        let n = self.rep.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                let rel = crate::model::pair_relation(self.rep.set(u), self.rep.set(v)).unwrap();
                if RepKind::Overlap.admits(true, rel) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}

/// Each set is written as its digits, e.g. `"145"`.
const TABLE: &[(&str, &[&str])] = &[
    ("K3", &["12", "13", "23"]),
    ("K4", &["123", "41", "42", "43"]),
    ("K1,3+", &["123", "124", "13", "23"]),
    ("K4 with a pendant edge", &["145", "245", "345", "1234", "45"]),
    ("K3 with pendant edges at two vertices", &["12", "23", "34", "45", "1245"]),
    ("K3 with a pendant path of length two", &["12", "23", "34", "45", "1235"]),
    ("K5", &["123", "234", "345", "451", "512"]),
    ("K2,2,1", &["12", "34", "14", "23", "13"]),
    ("complement of P2+3K1", &["123", "234", "345", "14", "25"]),
    ("K3,1,1", &["12", "34", "1234", "513", "524"]),
    ("complement of P3+2K1", &["12", "13", "14", "23", "234"]),
    ("complement of P4+K1", &["12", "23", "34", "45", "135"]),
];

pub fn small_table() -> Vec<SmallEntry> {
    TABLE
        .iter()
        .map(|&(name, sets)| {
            let lists = sets.iter().map(|s| s.bytes().map(|b| (b - b'0') as Label));
            SmallEntry { name, rep: OverlapRep::from_lists(lists).expect("table sets are nonempty") }
        })
        .collect()
}

fn lookup(h: &Graph) -> Option<(OverlapRep, &'static str)> {
    small_table().into_iter().find_map(|e| {
        let map = find_isomorphism(h, &e.graph())?;
        let sets = (0..h.n()).map(|v| e.rep.set(map[v]).clone()).collect();
        Some((OverlapRep::new(sets).unwrap(), e.name))
    })
}

/// Representation of a graph on at most five vertices: reduce, then use the
/// table, the tree construction, the edge bound or a leaf extension.
pub fn small_graph_rep(g: &Graph) -> Result<(OverlapRep, String), ConstructionError> {
    if g.n() > 5 {
        return Err(ConstructionError::Precondition(format!("{} vertices, at most 5 supported", g.n())));
    }
    if g.n() == 0 {
        return Ok((OverlapRep::new(Vec::new()).unwrap(), "empty".into()));
    }
    let (h, red) = reduce(g);
    let (rep, rule) = reduced_small_rep(&h)?;
    let rep = unreduce(&rep, &red)?;
    Ok((rep, rule))
}

fn reduced_small_rep(h: &Graph) -> Result<(OverlapRep, String), ConstructionError> {
    if let Some((rep, name)) = lookup(h) {
        return Ok((rep, format!("table:{name}")));
    }
    if h.is_tree() {
        let rep = tree_overlap_rep(h).expect("input is a tree");
        return Ok((rep, "tree".into()));
    }
    if h.min_degree().unwrap_or(0) >= 2 {
        let (u, v) = super::default_edge(h).expect("minimum degree two implies an edge");
        return Ok((edge_bound_rep(h, u, v)?, "edge-bound".into()));
    }
    let v = *h.leaves().last().ok_or_else(|| {
        ConstructionError::Precondition("reduced graph has neither a leaf nor minimum degree two".into())
    })?;
    let (rest, _) = small_graph_rep(&h.remove_vertex(v))?;
    Ok((extend_leaf(&rest, h, v)?, "leaf-extension".into()))
}
