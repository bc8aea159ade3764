//! Plane graphs given by rotation systems.
//!
//! The rotation of a vertex lists its neighbours in cyclic order. Faces are
//! traced by following a dart `u → w` with `w → x`, where `x` is the
//! neighbour after `u` in the rotation of `w`.

mod decompose;
mod upper;

pub use decompose::{plan_decompose, DecompositionClass, PlanarDecomposition, PlanarPart};
pub use upper::{planar_phi_upper, planar_pol_upper};

use crate::graph::Graph;
use crate::parse::{content_lines, parse_usize, ParseError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} lists itself")]
    Loop(usize),
    #[error("vertex {0} lists neighbour {1} twice")]
    Repeated(usize, usize),
    #[error("{0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("rotation system has genus > 0 on the component of vertex {0}")]
    NotPlanar(usize),
    #[error("plane graph needs at least {need} vertices, has {found}")]
    TooSmall { need: usize, found: usize },
    #[error("{0}")]
    Diagnostic(String),
}

/// A facial walk, as the sequence of vertices visited.
pub type Face = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Checks the rotation lists for consistency and for genus zero.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        let n = rotation.len();
        let mut graph = Graph::new(n);
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(PlanarError::OutOfRange(u));
                }
                if u == v {
                    return Err(PlanarError::Loop(v));
                }
                if rot[..i].contains(&u) {
                    return Err(PlanarError::Repeated(v, u));
                }
                if !rotation[u].contains(&v) {
                    return Err(PlanarError::Asymmetric(v, u));
                }
                if v < u {
                    graph.add_edge(v, u).expect("checked above");
                }
            }
        }
        let pg = PlaneGraph { graph, rotation };
        pg.check_genus()?;
        Ok(pg)
    }

    fn check_genus(&self) -> Result<(), PlanarError> {
        let faces = self.faces();
        let comps = self.graph.components();
        let mut comp_of = vec![0; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in &faces {
            face_count[comp_of[f[0]]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let m: usize = c.iter().map(|&v| self.graph.degree(v)).sum::<usize>() / 2;
            if m > 0 && c.len() + face_count[i] != m + 2 {
                return Err(PlanarError::NotPlanar(c[0]));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn next_dart(&self, u: usize, w: usize) -> (usize, usize) {
        let rot = &self.rotation[w];
        let i = rot.iter().position(|&x| x == u).expect("dart exists");
        (w, rot[(i + 1) % rot.len()])
    }

    /// All facial walks, each starting at its first unused dart in the order
    /// (vertex, rotation position). Every dart is used exactly once.
    pub fn faces(&self) -> Vec<Face> {
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..self.n() {
            for i in 0..self.rotation[v].len() {
                if used[v][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, self.rotation[v][i]);
                loop {
                    let j = self.rotation[a].iter().position(|&x| x == b).unwrap();
                    if used[a][j] {
                        break;
                    }
                    used[a][j] = true;
                    face.push(a);
                    (a, b) = self.next_dart(a, b);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Facial triangles as sorted vertex triples, with the index of their face.
    pub fn facial_triangles(&self) -> Vec<([usize; 3], usize)> {
        self.faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.len() == 3)
            .map(|(i, f)| {
                let mut t = [f[0], f[1], f[2]];
                t.sort_unstable();
                (t, i)
            })
            .collect()
    }

    /// Whether every facial walk has length four.
    pub fn is_quadrangulated(&self) -> bool {
        let faces = self.faces();
        !faces.is_empty() && faces.iter().all(|f| f.len() == 4)
    }

    /// The embedding restricted to `keep`, renumbered `0..keep.len()` in the
    /// given order. Deleting vertices never breaks planarity.
    pub fn induced(&self, keep: &[usize]) -> PlaneGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rotation = keep
            .iter()
            .map(|&v| self.rotation[v].iter().filter(|&&u| index[u] != usize::MAX).map(|&u| index[u]).collect())
            .collect();
        PlaneGraph::new(rotation).expect("a sub-embedding of a plane graph is plane")
    }

    /// Removes `v`; the survivors keep their relative order.
    pub fn remove_vertex(&self, v: usize) -> PlaneGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }
}

/// `n` on the first line, then `v: u1 u2 ...` per vertex.
pub fn to_rotation_text(pg: &PlaneGraph) -> String {
    let mut s = format!("{}\n", pg.n());
    for v in 0..pg.n() {
        write!(s, "{v}:").unwrap();
        for u in pg.rotation(v) {
            write!(s, " {u}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn parse_rotation(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing vertex count"))?;
    let n = parse_usize(header.trim(), line_no)?;
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line_no, line) in lines {
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(line_no, "expected `vertex: neighbours`"))?;
        let v = parse_usize(head.trim(), line_no)?;
        if v >= n {
            return Err(ParseError::new(line_no, format!("vertex {v} out of range 0..{n}")));
        }
        if rotation[v].is_some() {
            return Err(ParseError::new(line_no, format!("vertex {v} listed twice")));
        }
        let nbrs = rest.split_whitespace().map(|t| parse_usize(t, line_no)).collect::<Result<Vec<_>, _>>()?;
        rotation[v] = Some(nbrs);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| ParseError::new(0, format!("vertex {v} has no rotation line"))))
        .collect::<Result<Vec<_>, _>>()?;
    PlaneGraph::new(rotation).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Standard embeddings used throughout the tests and generators.
pub mod embeddings {
    use super::PlaneGraph;

    /// `K_4` with vertex 3 inside triangle 0 1 2.
    pub fn k4() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]).unwrap()
    }

    /// The cycle `0 1 ... n-1`.
    pub fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::new((0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()).unwrap()
    }

    /// Wheel with hub 0 and rim `1..=k` in order.
    pub fn wheel(k: usize) -> PlaneGraph {
        let mut rot = vec![(1..=k).collect::<Vec<_>>()];
        for i in 1..=k {
            let next = i % k + 1;
            let prev = (i + k - 2) % k + 1;
            rot.push(vec![next, 0, prev]);
        }
        PlaneGraph::new(rot).unwrap()
    }

    /// `P_k □ C_4` as `k` nested 4-cycles; vertex `4r + i` is position `i`
    /// on ring `r`. `k = 2` is the cube.
    pub fn prism_stack(k: usize) -> PlaneGraph {
        let id = |r: usize, i: usize| 4 * r + i % 4;
        let rot = (0..4 * k)
            .map(|v| {
                let (r, i) = (v / 4, v % 4);
                let mut nb = Vec::new();
                if r + 1 < k {
                    nb.push(id(r + 1, i));
                }
                nb.push(id(r, i + 1));
                if r > 0 {
                    nb.push(id(r - 1, i));
                }
                nb.push(id(r, i + 3));
                nb
            })
            .collect();
        PlaneGraph::new(rot).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::embeddings::*;
    use super::*;

    fn lengths(pg: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = pg.faces().iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn face_examples() {
        assert_eq!(lengths(&k4()), vec![3, 3, 3, 3]);
        assert_eq!(lengths(&prism_stack(2)), vec![4; 6]);
        assert_eq!(lengths(&cycle(6)), vec![6, 6]);
        assert_eq!(lengths(&wheel(5)), vec![3, 3, 3, 3, 3, 5]);
        assert!(crate::graph::is_isomorphic(prism_stack(2).graph(), &Graph::cube()));
        for pg in [k4(), prism_stack(4), wheel(7)] {
            let total: usize = pg.faces().iter().map(Vec::len).sum();
            assert_eq!(total, 2 * pg.graph().edge_count());
        }
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(PlaneGraph::new(vec![vec![1], vec![]]), Err(PlanarError::Asymmetric(0, 1)));
        assert_eq!(PlaneGraph::new(vec![vec![0]]), Err(PlanarError::Loop(0)));
        assert!(matches!(PlaneGraph::new(vec![vec![1, 1], vec![0]]), Err(PlanarError::Repeated(0, 1))));
        // K_4 with one rotation reversed has genus one
        let bad = vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::new(bad), Err(PlanarError::NotPlanar(_))));
    }

    #[test]
    fn text_round_trip() {
        let pg = wheel(4);
        let text = to_rotation_text(&pg);
        assert_eq!(text, "5\n0: 1 2 3 4\n1: 2 0 4\n2: 3 0 1\n3: 4 0 2\n4: 1 0 3\n");
        assert_eq!(parse_rotation(&text).unwrap(), pg);
        assert!(parse_rotation("2\n0: 1\n").is_err());
        assert!(parse_rotation("2\n0: 1\n1: 0\n1: 0\n").is_err());
        let lonely = parse_rotation("1\n0:\n").unwrap();
        assert_eq!(to_rotation_text(&lonely), "1\n0:\n");
    }

    #[test]
    fn induced_keeps_planarity() {
        let w = wheel(6);
        let rim = w.remove_vertex(0);
        assert_eq!(lengths(&rim), vec![6, 6]);
        let q = prism_stack(3).induced(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(q.graph().edge_count(), 7);
    }
}
