//! Representation constructions for general graphs: clique decompositions,
//! the edge-labelling representation, representations of complete graphs,
//! one-vertex and triangle extensions, reductions and the small-graph table.

mod extend;
mod reduce;
mod small;

pub use extend::{disjoint_union_rep, extend_deg_le2, extend_leaf, extend_triangle};
pub use reduce::{reduce, unreduce, Reduction, ReductionStep};
pub use small::{small_graph_rep, small_table, SmallEntry};

use crate::graph::Graph;
use crate::model::{Label, LabelSet, OverlapRep};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("minimum degree {found} is below the required {need}")]
    MinDegree { need: usize, found: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is a book; its overlap number is 3")]
    Book,
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree}, at most {max} allowed")]
    DegreeTooLarge { vertex: usize, degree: usize, max: usize },
    #[error("invalid clique decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("representation does not match the graph: {0}")]
    RepMismatch(String),
}

/// Edge-disjoint complete subgraphs covering every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueDecomposition {
    /// Each part is a sorted vertex list with at least two vertices.
    pub parts: Vec<Vec<usize>>,
}

impl CliqueDecomposition {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        CliqueDecomposition { parts }
    }

    /// All edges as separate parts.
    pub fn edges(g: &Graph) -> Self {
        CliqueDecomposition { parts: g.edges().map(|(u, v)| vec![u, v]).collect() }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_order(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of parts containing each vertex.
    pub fn incidence(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for p in &self.parts {
            for &v in p {
                c[v] += 1;
            }
        }
        c
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ConstructionError> {
        let bad = |m: String| Err(ConstructionError::InvalidDecomposition(m));
        let mut covered = std::collections::HashSet::new();
        for p in &self.parts {
            if p.len() < 2 {
                return bad(format!("part {p:?} has fewer than two vertices"));
            }
            for (i, &u) in p.iter().enumerate() {
                if u >= g.n() {
                    return bad(format!("vertex {u} out of range"));
                }
                for &v in &p[i + 1..] {
                    if u == v || !g.has_edge(u, v) {
                        return bad(format!("part {p:?} is not a clique"));
                    }
                    if !covered.insert((u, v)) {
                        return bad(format!("edge ({u}, {v}) lies in two parts"));
                    }
                }
            }
        }
        if covered.len() != g.edge_count() {
            return bad(format!("{} of {} edges covered", covered.len(), g.edge_count()));
        }
        Ok(())
    }
}

/// Pure overlap representation assigning each vertex the parts containing it.
/// Requires a valid decomposition in which every vertex lies in at least two
/// parts; minimum degree at least the largest part order implies this.
pub fn decomposition_rep(g: &Graph, f: &CliqueDecomposition) -> Result<OverlapRep, ConstructionError> {
    f.validate(g)?;
    let inc = f.incidence(g.n());
    if let Some(v) = (0..g.n()).find(|&v| inc[v] < 2) {
        return Err(ConstructionError::Precondition(format!(
            "vertex {v} lies in {} part(s) of the decomposition, at least 2 needed",
            inc[v]
        )));
    }
    let mut sets = vec![LabelSet::new(); g.n()];
    for (i, p) in f.parts.iter().enumerate() {
        for &v in p {
            sets[v].insert(i as Label + 1);
        }
    }
    Ok(OverlapRep::new(sets).expect("every vertex is in two parts"))
}

/// Takes triangles in lexicographic order while every vertex keeps at least
/// two incident parts, then covers the remaining edges singly.
pub fn greedy_triangle_decomposition(g: &Graph) -> CliqueDecomposition {
    let mut used = std::collections::HashSet::new();
    let mut inc = g.degrees();
    let mut parts = Vec::new();
    for [a, b, c] in g.triangles() {
        let edges = [(a, b), (a, c), (b, c)];
        if edges.iter().any(|e| used.contains(e)) {
            continue;
        }
        // taking the triangle merges two edge-parts into one at each corner
        if [a, b, c].iter().any(|&x| inc[x] < 3) {
            continue;
        }
        for x in [a, b, c] {
            inc[x] -= 1;
        }
        used.extend(edges);
        parts.push(vec![a, b, c]);
    }
    parts.extend(g.edges().filter(|e| !used.contains(e)).map(|(u, v)| vec![u, v]));
    CliqueDecomposition { parts }
}

/// The edge maximizing `d(u) + d(v)`, lexicographically first on ties.
pub fn default_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .fold(None, |best: Option<(usize, usize)>, e| match best {
            Some(b) if g.degree(b.0) + g.degree(b.1) >= g.degree(e.0) + g.degree(e.1) => Some(b),
            _ => Some(e),
        })
}

/// One label per edge other than `uv`: a vertex outside `{u, v}` gets the
/// labels of its edges, and `u`, `v` get the labels of the edges avoiding them.
pub fn edge_bound_rep(g: &Graph, u: usize, v: usize) -> Result<OverlapRep, ConstructionError> {
    let delta = g.min_degree().unwrap_or(0);
    if delta < 2 {
        return Err(ConstructionError::MinDegree { need: 2, found: delta });
    }
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(ConstructionError::NotAnEdge(u, v));
    }
    if g.is_book() {
        return Err(ConstructionError::Book);
    }
    let mut sets = vec![LabelSet::new(); g.n()];
    let mut label = 0;
    for (x, y) in g.edges() {
        if (x, y) == (u.min(v), u.max(v)) {
            continue;
        }
        label += 1;
        for w in [x, y] {
            if w != u && w != v {
                sets[w].insert(label);
            }
        }
        for w in [u, v] {
            if w != x && w != y {
                sets[w].insert(label);
            }
        }
    }
    OverlapRep::new(sets).map_err(|e| ConstructionError::Precondition(e.to_string()))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Pure representation of `K_n` by `k`-subsets of `{1..2k-1}` for the
/// smallest such `k`.
pub fn clique_rep(n: usize) -> OverlapRep {
    assert!(n >= 1, "clique_rep needs at least one vertex");
    let mut k = 1u64;
    while binomial(2 * k - 1, k) < n as u64 {
        k += 1;
    }
    let m = (2 * k - 1) as Label;
    let mut sets = Vec::with_capacity(n);
    let mut cur: Vec<Label> = (1..=k as Label).collect();
    loop {
        sets.push(cur.iter().copied().collect::<LabelSet>());
        if sets.len() == n {
            break;
        }
        // next k-subset in lexicographic order
        let mut i = cur.len() - 1;
        while cur[i] == m - (cur.len() - 1 - i) as Label {
            i -= 1;
        }
        cur[i] += 1;
        for j in i + 1..cur.len() {
            cur[j] = cur[j - 1] + 1;
        }
    }
    OverlapRep::new(sets).expect("k-subsets are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{minimal_vertices, verify, RepKind};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn decomposition_examples() {
        let c5 = Graph::cycle(5);
        let rep = decomposition_rep(&c5, &CliqueDecomposition::edges(&c5)).unwrap();
        assert_eq!(rep.size(), 5);
        assert!(verify(&c5, &rep, RepKind::PureOverlap).is_ok());

        let k4 = Graph::complete(4);
        let f = CliqueDecomposition::new(vec![vec![0, 1, 2], vec![3, 0], vec![3, 1], vec![3, 2]]);
        let rep = decomposition_rep(&k4, &f).unwrap();
        assert_eq!(rep.size(), 4);
        assert!(verify(&k4, &rep, RepKind::PureOverlap).is_ok());

        let cube = Graph::cube();
        let rep = decomposition_rep(&cube, &CliqueDecomposition::edges(&cube)).unwrap();
        assert_eq!(rep.size(), 12);

        let p3 = Graph::path(3);
        assert!(decomposition_rep(&p3, &CliqueDecomposition::edges(&p3)).is_err());
        let bad = CliqueDecomposition::new(vec![vec![0, 1, 2]]);
        assert!(bad.validate(&c5).is_err());
    }

    #[test]
    fn edge_bound_examples() {
        for (g, size) in [(Graph::cycle(4), 3), (Graph::cube(), 11), (Graph::complete(4), 5)] {
            let rep = edge_bound_rep(&g, 0, 1).unwrap();
            assert_eq!(rep.size(), size);
            assert!(verify(&g, &rep, RepKind::Overlap).is_ok());
        }
        // C_4: f(u) equals the set of the vertex opposite u
        let rep = edge_bound_rep(&Graph::cycle(4), 0, 1).unwrap();
        assert_eq!(rep.set(0), rep.set(2));
        assert_eq!(edge_bound_rep(&Graph::complete(3), 0, 1), Err(ConstructionError::Book));
        assert!(matches!(edge_bound_rep(&Graph::path(3), 0, 1), Err(ConstructionError::MinDegree { .. })));
        assert_eq!(edge_bound_rep(&Graph::cycle(5), 0, 2), Err(ConstructionError::NotAnEdge(0, 2)));
    }

    #[test]
    fn clique_examples() {
        let r3 = clique_rep(3);
        assert_eq!(r3.sets(), &[LabelSet::from([1, 2]), LabelSet::from([1, 3]), LabelSet::from([2, 3])]);
        assert_eq!(clique_rep(10).size(), 5);
        assert_eq!(clique_rep(5).size(), 5);
        assert_eq!(clique_rep(1).size(), 1);
        for n in 1..=20 {
            assert!(verify(&Graph::complete(n), &clique_rep(n), RepKind::PureOverlap).is_ok());
        }
    }

    #[test]
    fn greedy_decomposition_is_valid() {
        let w = Graph::wheel(5);
        let f = greedy_triangle_decomposition(&w);
        assert!(f.validate(&w).is_ok());
        assert!(f.incidence(w.n()).iter().all(|&c| c >= 2));
        assert!(f.len() < w.edge_count());
    }

    fn random_min_degree_two(rng: &mut ChaCha8Rng) -> Graph {
        loop {
            let n = rng.gen_range(3..=12);
            let p = rng.gen_range(0.25..0.8);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if g.min_degree().unwrap() >= 2 && !g.is_book() {
                return g;
            }
        }
    }

    #[test]
    fn edge_bound_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = random_min_degree_two(&mut rng);
            let edges: Vec<_> = g.edges().collect();
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            let rep = edge_bound_rep(&g, u, v).unwrap();
            assert!(verify(&g, &rep, RepKind::Overlap).is_ok());
            assert_eq!(rep.size(), g.edge_count() - 1);
            for x in [u, v] {
                assert!(!rep.sets().iter().any(|s| rep.set(x).is_proper_subset(s)));
            }
            let f = greedy_triangle_decomposition(&g);
            assert!(f.validate(&g).is_ok());
            if f.incidence(g.n()).iter().all(|&c| c >= 2) {
                let rep = decomposition_rep(&g, &f).unwrap();
                assert!(verify(&g, &rep, RepKind::PureOverlap).is_ok());
                assert_eq!(minimal_vertices(&rep).len(), g.n());
            }
        }
    }

    proptest! {
        #[test]
        fn edge_decomposition_is_pure(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_min_degree_two(&mut rng);
            let rep = decomposition_rep(&g, &CliqueDecomposition::edges(&g)).unwrap();
            prop_assert!(verify(&g, &rep, RepKind::PureOverlap).is_ok());
        }
    }
}
