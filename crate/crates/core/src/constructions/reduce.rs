use super::ConstructionError;
use crate::graph::Graph;
use crate::model::{LabelSet, OverlapRep};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStep {
    Isolated(usize),
    Duplicate { vertex: usize, twin: usize },
}

/// Removals in the order performed, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub steps: Vec<ReductionStep>,
    /// Original ids of the surviving vertices; vertex `i` of the reduced graph
    /// is `kept[i]`.
    pub kept: Vec<usize>,
    /// Vertex count of the original graph.
    pub n: usize,
}

impl Reduction {
    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Removes isolated vertices, then all but the smallest vertex of every class
/// of vertices sharing a neighbourhood. Neither removal creates new isolated
/// vertices or new twins, so one pass reaches the fixed point. The last
/// vertex of an edgeless graph is kept.
pub fn reduce(g: &Graph) -> (Graph, Reduction) {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut steps = Vec::new();
    let isolated = g.isolated_vertices();
    let skip = usize::from(isolated.len() == n && n > 0);
    for &v in &isolated[skip..] {
        removed[v] = true;
        steps.push(ReductionStep::Isolated(v));
    }
    let mut first: HashMap<&[usize], usize> = HashMap::new();
    for v in 0..n {
        if removed[v] || g.degree(v) == 0 {
            continue;
        }
        match first.get(g.neighbors(v)) {
            Some(&w) => {
                removed[v] = true;
                steps.push(ReductionStep::Duplicate { vertex: v, twin: w });
            }
            None => {
                first.insert(g.neighbors(v), v);
            }
        }
    }
    let gone: Vec<usize> = (0..n).filter(|&v| removed[v]).collect();
    let (reduced, kept) = g.remove_vertices(&gone);
    (reduced, Reduction { steps, kept, n })
}

/// Replays a reduction backwards on a representation of the reduced graph:
/// an isolated vertex gets the union of the sets present, a duplicate gets
/// its twin's set. The size does not change.
pub fn unreduce(rep: &OverlapRep, red: &Reduction) -> Result<OverlapRep, ConstructionError> {
    if rep.n() != red.kept.len() {
        return Err(ConstructionError::RepMismatch(format!(
            "reduction keeps {} vertices, representation has {}",
            red.kept.len(),
            rep.n()
        )));
    }
    let mut sets: Vec<Option<LabelSet>> = vec![None; red.n];
    for (i, &v) in red.kept.iter().enumerate() {
        sets[v] = Some(rep.set(i).clone());
    }
    for step in red.steps.iter().rev() {
        match *step {
            ReductionStep::Isolated(v) => {
                let mut u = LabelSet::new();
                for s in sets.iter().flatten() {
                    u.union_with(s);
                }
                if u.is_empty() {
                    return Err(ConstructionError::RepMismatch("no sets to take the union of".into()));
                }
                sets[v] = Some(u);
            }
            ReductionStep::Duplicate { vertex, twin } => {
                let s = sets[twin]
                    .clone()
                    .ok_or_else(|| ConstructionError::RepMismatch(format!("twin {twin} has no set yet")))?;
                sets[vertex] = Some(s);
            }
        }
    }
    let sets = sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| ConstructionError::RepMismatch(format!("vertex {v} never assigned"))))
        .collect::<Result<Vec<_>, _>>()?;
    OverlapRep::new(sets).map_err(|e| ConstructionError::RepMismatch(e.to_string()))
}
