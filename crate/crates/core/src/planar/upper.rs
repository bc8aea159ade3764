//! Representations of plane graphs within `2n − 5` labels (overlap) and
//! `2n − 2` labels (pure overlap).

use super::{plan_decompose, PlanarError, PlaneGraph};
use crate::constructions::{
    decomposition_rep, default_edge, edge_bound_rep, extend_deg_le2, extend_leaf, reduce, small_graph_rep, unreduce,
    CliqueDecomposition,
};
use crate::exact::{exact_pol, SearchConfig};
use crate::graph::Graph;
use crate::model::{verify, Label, LabelSet, OverlapRep, RepKind};

fn diag(e: impl std::fmt::Display) -> PlanarError {
    PlanarError::Diagnostic(e.to_string())
}

/// Overlap representation of a plane graph with `n ≥ 5` vertices using at
/// most `2n − 5` labels. Returns the representation and the route taken.
pub fn planar_phi_upper(pg: &PlaneGraph) -> Result<(OverlapRep, String), PlanarError> {
    let n = pg.n();
    if n < 5 {
        return Err(PlanarError::TooSmall { need: 5, found: n });
    }
    let (rep, route) = phi(pg)?;
    verify(pg.graph(), &rep, RepKind::Overlap).map_err(diag)?;
    if rep.size() + 5 > 2 * n {
        return Err(diag(format!("route {route} used {} labels on {n} vertices", rep.size())));
    }
    Ok((rep, route))
}

fn phi(pg: &PlaneGraph) -> Result<(OverlapRep, String), PlanarError> {
    let g = pg.graph();
    let n = g.n();
    if n <= 5 {
        let (rep, rule) = small_graph_rep(g).map_err(diag)?;
        return Ok((rep, format!("small({rule})")));
    }
    let (h, red) = reduce(g);
    if !red.is_identity() {
        let (rep, route) = phi(&pg.induced(&red.kept))?;
        return Ok((unreduce(&rep, &red).map_err(diag)?, format!("reduce>{route}")));
    }
    debug_assert_eq!(&h, g);
    if let Some(&v) = g.leaves().first() {
        let (rest, route) = phi(&pg.remove_vertex(v))?;
        return Ok((extend_leaf(&rest, g, v).map_err(diag)?, format!("leaf>{route}")));
    }

    let m = g.edge_count();
    let edge_bound = || {
        let (u, v) = default_edge(g).expect("minimum degree two");
        edge_bound_rep(g, u, v).map(|r| (r, "edge-bound".to_string())).map_err(diag)
    };
    if g.degeneracy().k <= 2 {
        if m + 3 < 2 * n {
            return edge_bound();
        }
        // |E| = 2n − 3: a triangle whose corners all have outside neighbours,
        // together with the remaining edges
        let t = g
            .triangles()
            .into_iter()
            .find(|t| t.iter().all(|&x| g.degree(x) >= 3))
            .ok_or_else(|| diag("2-degenerate graph with 2n-3 edges and no usable triangle (a book?)"))?;
        let mut parts = vec![t.to_vec()];
        parts.extend(
            g.edges()
                .filter(|&(u, v)| !(t.contains(&u) && t.contains(&v)))
                .map(|(u, v)| vec![u, v]),
        );
        let rep = decomposition_rep(g, &CliqueDecomposition::new(parts)).map_err(diag)?;
        return Ok((rep, "triangle-decomposition".into()));
    }
    if m + 4 <= 2 * n {
        return edge_bound();
    }
    let (rep, route) = pol(pg)?;
    Ok((rep, format!("pure>{route}")))
}

/// Pure overlap representation of a plane graph with at most `2n − 2` labels
/// (`n ≥ 3`), by planar decomposition when `δ ≥ 3` and by deleting a
/// minimum-degree vertex otherwise.
pub fn planar_pol_upper(pg: &PlaneGraph) -> Result<(OverlapRep, String), PlanarError> {
    let n = pg.n();
    if n < 3 {
        return Err(PlanarError::TooSmall { need: 3, found: n });
    }
    let (rep, route) = pol(pg)?;
    verify(pg.graph(), &rep, RepKind::PureOverlap).map_err(diag)?;
    if rep.size() + 2 > 2 * n {
        return Err(diag(format!("route {route} used {} labels on {n} vertices", rep.size())));
    }
    Ok((rep, route))
}

fn pol(pg: &PlaneGraph) -> Result<(OverlapRep, String), PlanarError> {
    let g = pg.graph();
    let n = g.n();
    if n <= 4 {
        let r = exact_pol(g, &SearchConfig::default()).map_err(diag)?;
        return Ok((r.witness.expect("small graphs are solved exactly"), "exact".into()));
    }
    let delta = g.min_degree().unwrap_or(0);
    if delta >= 3 {
        let d = plan_decompose(pg)?;
        let rep = decomposition_rep(g, &d.to_clique_decomposition()).map_err(diag)?;
        return Ok((rep, "planar-decomposition".into()));
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let rest_pg = pg.remove_vertex(v);
    let (rest, route) = pol(&rest_pg)?;
    if let Some(rep) = extend_one_label(&rest, g, v) {
        return Ok((rep, format!("delete+1>{route}")));
    }
    if g.degree(v) == 2 && rest_pg.graph().is_complete() && rest_pg.n() == 4 {
        return Ok((k4_plus_degree_two(g, v), "k4+deg2".into()));
    }
    Ok((extend_deg_le2(&rest, g, v).map_err(diag)?, format!("delete+2>{route}")))
}

/// Adds `v` (degree 1 or 2) to a pure representation of `G − v` with one new
/// label, when a neighbour has a label no other vertex uses, or the two
/// neighbours share a label no other vertex uses.
fn extend_one_label(rest: &OverlapRep, g: &Graph, v: usize) -> Option<OverlapRep> {
    let nbrs = g.neighbors(v);
    if nbrs.is_empty() || nbrs.len() > 2 {
        return None;
    }
    let mut sets: Vec<LabelSet> = Vec::with_capacity(g.n());
    let mut it = rest.sets().iter();
    for u in 0..g.n() {
        sets.push(if u == v { LabelSet::new() } else { it.next().unwrap().clone() });
    }
    let b = rest.size() as Label + 1;
    let holders = |a: Label| (0..g.n()).filter(|&u| sets[u].contains(a)).count();
    // a label private to a neighbour x; the other neighbour receives b
    for (i, &x) in nbrs.iter().enumerate() {
        if sets[x].len() < 2 {
            continue;
        }
        if let Some(a) = sets[x].iter().find(|&a| holders(a) == 1) {
            let mut out = sets.clone();
            out[v] = LabelSet::from([a, b]);
            if let Some(&y) = nbrs.get(1 - i) {
                out[y].insert(b);
            }
            return OverlapRep::new(out).ok().filter(|r| verify(g, r, RepKind::PureOverlap).is_ok());
        }
    }
    // a label held by exactly the two neighbours
    if let [x, y] = *nbrs {
        let shared = sets[x].intersection(&sets[y]);
        let found = shared.iter().find(|&a| holders(a) == 2);
        if let Some(a) = found {
            let mut out = sets;
            out[v] = LabelSet::from([a, b]);
            return OverlapRep::new(out).ok().filter(|r| verify(g, r, RepKind::PureOverlap).is_ok());
        }
    }
    None
}

/// `K_4` plus a vertex of degree two: five labels.
fn k4_plus_degree_two(g: &Graph, v: usize) -> OverlapRep {
    let (x, y) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    let others: Vec<usize> = (0..g.n()).filter(|&u| u != v && u != x && u != y).collect();
    let mut sets = vec![LabelSet::new(); g.n()];
    sets[x] = LabelSet::from([1, 2, 3]);
    sets[y] = LabelSet::from([1, 4]);
    sets[others[0]] = LabelSet::from([2, 4]);
    sets[others[1]] = LabelSet::from([3, 4]);
    sets[v] = LabelSet::from([1, 5]);
    OverlapRep::new(sets).unwrap()
}
