use super::{PlanarError, PlaneGraph};
use crate::constructions::CliqueDecomposition;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarPart {
    Edge(usize, usize),
    /// A facial triangle, sorted, with the index of its face in [`PlaneGraph::faces`].
    Triangle { vertices: [usize; 3], face: usize },
}

/// Which case of the size bound a decomposition falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionClass {
    /// At most `2n − 5` parts.
    General,
    /// Every face has length four and all `2n − 4` edges are parts.
    Quadrangulation,
    /// `K_4`: three edges and one facial triangle.
    K4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDecomposition {
    pub parts: Vec<PlanarPart>,
    pub class: DecompositionClass,
}

impl PlanarDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn triangle_count(&self) -> usize {
        self.parts.iter().filter(|p| matches!(p, PlanarPart::Triangle { .. })).count()
    }

    pub fn edge_count(&self) -> usize {
        self.len() - self.triangle_count()
    }

    pub fn to_clique_decomposition(&self) -> CliqueDecomposition {
        CliqueDecomposition::new(
            self.parts
                .iter()
                .map(|p| match *p {
                    PlanarPart::Edge(u, v) => vec![u, v],
                    PlanarPart::Triangle { vertices, .. } => vertices.to_vec(),
                })
                .collect(),
        )
    }
}

impl fmt::Display for PlanarDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parts {} edges {} triangles {}", self.len(), self.edge_count(), self.triangle_count())?;
        for p in &self.parts {
            match p {
                PlanarPart::Edge(u, v) => writeln!(f, "edge {u} {v}")?,
                PlanarPart::Triangle { vertices: [a, b, c], face } => writeln!(f, "triangle {a} {b} {c} face {face}")?,
            }
        }
        Ok(())
    }
}

/// Decomposes a plane graph on at least three vertices into edges and facial
/// triangles: at most `2n − 5` parts, except `2n − 4` edges when every face
/// has length four and four parts for `K_4`.
///
/// The least facial triangle `T` is replaced by a new vertex joined to its
/// corners; the smaller graph is decomposed recursively and `T` put back.
/// When the smaller graph has only faces of length four, the triangles
/// across the edges of `T` are used instead.
pub fn plan_decompose(pg: &PlaneGraph) -> Result<PlanarDecomposition, PlanarError> {
    let n = pg.n();
    if n < 3 {
        return Err(PlanarError::TooSmall { need: 3, found: n });
    }
    let mut raw = decompose(pg)?;
    raw.sort_unstable();
    let facial = pg.facial_triangles();
    let parts = raw
        .into_iter()
        .map(|p| match p {
            Raw::Edge(u, v) => Ok(PlanarPart::Edge(u, v)),
            Raw::Tri(t) => facial
                .iter()
                .find(|(ft, _)| *ft == t)
                .map(|&(vertices, face)| PlanarPart::Triangle { vertices, face })
                .ok_or_else(|| PlanarError::Diagnostic(format!("triangle {t:?} is not a face"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dec = PlanarDecomposition { parts, class: DecompositionClass::General };
    dec.to_clique_decomposition()
        .validate(pg.graph())
        .map_err(|e| PlanarError::Diagnostic(e.to_string()))?;
    let class = if dec.len() + 5 <= 2 * n {
        DecompositionClass::General
    } else if dec.len() + 4 == 2 * n && dec.triangle_count() == 0 && pg.is_quadrangulated() {
        DecompositionClass::Quadrangulation
    } else if pg.graph().is_complete() && n == 4 && dec.len() == 4 {
        DecompositionClass::K4
    } else {
        return Err(PlanarError::Diagnostic(format!("{} parts exceed the bound for {n} vertices", dec.len())));
    };
    Ok(PlanarDecomposition { class, ..dec })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Raw {
    Edge(usize, usize),
    Tri([usize; 3]),
}

fn edge(u: usize, v: usize) -> Raw {
    Raw::Edge(u.min(v), u.max(v))
}

fn tri(a: usize, b: usize, c: usize) -> Raw {
    let mut t = [a, b, c];
    t.sort_unstable();
    Raw::Tri(t)
}

fn all_edges(pg: &PlaneGraph) -> Vec<Raw> {
    pg.graph().edges().map(|(u, v)| Raw::Edge(u, v)).collect()
}

fn take(parts: &mut Vec<Raw>, gone: &[Raw]) -> Result<(), PlanarError> {
    for g in gone {
        let i = parts
            .iter()
            .position(|p| p == g)
            .ok_or_else(|| PlanarError::Diagnostic(format!("expected part {g:?} in the decomposition of G'")))?;
        parts.swap_remove(i);
    }
    Ok(())
}

fn decompose(pg: &PlaneGraph) -> Result<Vec<Raw>, PlanarError> {
    let n = pg.n();
    if n < 3 {
        return Ok(all_edges(pg));
    }
    let faces = pg.faces();
    let Some(t_walk) = faces
        .iter()
        .filter(|f| f.len() == 3)
        .min_by_key(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
    else {
        return Ok(all_edges(pg));
    };
    let (a, b, c) = (t_walk[0], t_walk[1], t_walk[2]);

    // G': delete the edges of T and put a new vertex v inside it
    let v = n;
    let mut rot: Vec<Vec<usize>> = pg.rotations().to_vec();
    for (x, inc, out) in [(b, a, c), (c, b, a), (a, c, b)] {
        let r = &mut rot[x];
        let i = r.iter().position(|&y| y == inc).expect("face dart exists");
        let j = (i + 1) % r.len();
        if r[j] != out {
            return Err(PlanarError::Diagnostic(format!("corners of face {t_walk:?} are not consecutive at {x}")));
        }
        r[i] = v;
        r.remove(j);
    }
    rot.push(vec![a, c, b]);
    let g1 = PlaneGraph::new(rot)?;
    let mut parts = decompose(&g1)?;
    let v_edges = [edge(v, a), edge(v, b), edge(v, c)];

    if parts.len() + 5 <= 2 * (n + 1) {
        take(&mut parts, &v_edges)?;
        parts.push(tri(a, b, c));
        return Ok(parts);
    }
    if !g1.is_quadrangulated() {
        return Err(PlanarError::Diagnostic(format!(
            "G' after removing face {t_walk:?} has {} parts but not all faces of length four",
            parts.len()
        )));
    }

    // the faces around v are v x z y, one for each edge xy of T
    let around: Vec<(usize, usize, usize)> = g1
        .faces()
        .into_iter()
        .filter_map(|f| {
            let i = f.iter().position(|&u| u == v)?;
            Some((f[(i + 1) % 4], f[(i + 2) % 4], f[(i + 3) % 4]))
        })
        .collect();
    if around.len() != 3 {
        return Err(PlanarError::Diagnostic(format!("vertex {v} of G' lies on {} faces", around.len())));
    }
    let mut zs: Vec<usize> = around.iter().map(|&(_, z, _)| z).collect();
    zs.sort_unstable();
    zs.dedup();

    match zs.len() {
        3 => {
            let mut gone = v_edges.to_vec();
            for &(x, z, y) in &around {
                gone.extend([edge(x, z), edge(z, y)]);
            }
            take(&mut parts, &gone)?;
            parts.extend(around.iter().map(|&(x, z, y)| tri(x, y, z)));
            Ok(parts)
        }
        2 => {
            let shared_z = if around[0].1 == around[1].1 || around[0].1 == around[2].1 { around[0].1 } else { around[1].1 };
            let pair: Vec<&(usize, usize, usize)> = around.iter().filter(|f| f.1 == shared_z).collect();
            let (f1, f2) = (pair[0], pair[1]);
            let third = around.iter().find(|f| f.1 != shared_z).unwrap();
            let s = [f1.0, f1.2].into_iter().find(|x| *x == f2.0 || *x == f2.2).unwrap();
            let p = if f1.0 == s { f1.2 } else { f1.0 };
            let q = if f2.0 == s { f2.2 } else { f2.0 };
            let (z, w) = (shared_z, third.1);
            let mut gone = v_edges.to_vec();
            gone.extend([edge(p, z), edge(s, z), edge(q, z), edge(q, w), edge(p, w)]);
            take(&mut parts, &gone)?;
            parts.extend([tri(p, s, z), tri(p, q, w), edge(s, q), edge(q, z)]);
            Ok(parts)
        }
        _ => {
            // the component of T is K_4; decompose the rest separately
            let z = zs[0];
            let comp = [a, b, c, z];
            let keep: Vec<usize> = (0..n).filter(|u| !comp.contains(u)).collect();
            let rest = pg.induced(&keep);
            let mut parts: Vec<Raw> = decompose(&rest)?
                .into_iter()
                .map(|p| match p {
                    Raw::Edge(x, y) => edge(keep[x], keep[y]),
                    Raw::Tri([x, y, w]) => tri(keep[x], keep[y], keep[w]),
                })
                .collect();
            parts.extend([tri(a, b, c), edge(a, z), edge(b, z), edge(c, z)]);
            Ok(parts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::embeddings::*;
    use super::*;

    fn check(pg: &PlaneGraph) -> PlanarDecomposition {
        let d = plan_decompose(pg).unwrap();
        assert!(d.to_clique_decomposition().validate(pg.graph()).is_ok());
        let faces = pg.faces();
        for p in &d.parts {
            if let PlanarPart::Triangle { vertices, face } = p {
                let mut f = faces[*face].clone();
                f.sort_unstable();
                assert_eq!(&f[..], &vertices[..]);
            }
        }
        d
    }

    #[test]
    fn k4_and_cube() {
        let d = check(&k4());
        assert_eq!((d.class, d.edge_count(), d.triangle_count()), (DecompositionClass::K4, 3, 1));
        let d = check(&prism_stack(2));
        assert_eq!((d.class, d.len()), (DecompositionClass::Quadrangulation, 12));
    }

    #[test]
    fn wheels() {
        for k in 3..=9 {
            let w = wheel(k);
            let d = check(&w);
            if k == 3 {
                assert_eq!(d.class, DecompositionClass::K4);
            } else {
                assert_eq!(d.class, DecompositionClass::General);
                assert!(d.len() + 5 <= 2 * w.n(), "W_{k}: {} parts", d.len());
            }
        }
        assert!(check(&wheel(5)).len() <= 7);
    }

    #[test]
    fn triangle_and_small() {
        let d = check(&cycle(3));
        assert_eq!(d.parts.len(), 1);
        assert!(matches!(plan_decompose(&cycle(3).induced(&[0, 1])), Err(PlanarError::TooSmall { .. })));
        let d = check(&cycle(4));
        assert_eq!(d.class, DecompositionClass::Quadrangulation);
    }

    #[test]
    fn octahedron() {
        // vertices 0 and 5 are poles, 1..=4 the equator
        let rot = vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ];
        let pg = PlaneGraph::new(rot).unwrap();
        assert!(pg.faces().iter().all(|f| f.len() == 3));
        let d = check(&pg);
        assert!(d.len() <= 7);
    }

    #[test]
    fn disjoint_k4s() {
        // two copies of K_4 side by side
        let mut rot = k4().rotations().to_vec();
        rot.extend(k4().rotations().iter().map(|r| r.iter().map(|x| x + 4).collect()));
        let pg = PlaneGraph::new(rot).unwrap();
        let d = check(&pg);
        assert_eq!(d.len(), 8);
        assert!(d.len() + 5 <= 2 * 8);
    }
}
