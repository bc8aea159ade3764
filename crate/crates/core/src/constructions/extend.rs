//! Adding one vertex or a triangle to an existing representation.
//!
//! Representations of `G − v` (or `G − T`) are indexed the way
//! [`Graph::remove_vertices`] numbers the surviving vertices: in increasing
//! order of their ids in `G`.

use super::ConstructionError;
use crate::graph::Graph;
use crate::model::{Label, LabelSet, OverlapRep};

/// Places the sets of `rep` (over `G − removed`) at their ids in `G`.
fn lift(g: &Graph, rep: &OverlapRep, removed: &[usize]) -> Result<(Vec<LabelSet>, Label), ConstructionError> {
    let (_, kept) = g.remove_vertices(removed);
    if kept.len() != rep.n() {
        return Err(ConstructionError::RepMismatch(format!(
            "expected a representation of {} vertices, got {}",
            kept.len(),
            rep.n()
        )));
    }
    let mut sets = vec![LabelSet::new(); g.n()];
    for (i, &v) in kept.iter().enumerate() {
        sets[v] = rep.set(i).clone();
    }
    Ok((sets, rep.size() as Label))
}

fn finish(sets: Vec<LabelSet>) -> OverlapRep {
    OverlapRep::new(sets).expect("extensions assign nonempty sets")
}

/// Deletion Bound extension: `v` has degree at most 2 and `rep` is a pure
/// representation of `G − v`. Adds one label when `v` is isolated and two
/// otherwise.
pub fn extend_deg_le2(rep: &OverlapRep, g: &Graph, v: usize) -> Result<OverlapRep, ConstructionError> {
    if g.n() < 3 {
        return Err(ConstructionError::Precondition("graph needs at least three vertices".into()));
    }
    let d = g.degree(v);
    if d > 2 {
        return Err(ConstructionError::DegreeTooLarge { vertex: v, degree: d, max: 2 });
    }
    let (mut sets, t) = lift(g, rep, &[v])?;
    let (a, b) = (t + 1, t + 2);
    if d == 0 {
        sets[v] = LabelSet::singleton(a);
    } else {
        sets[v] = LabelSet::from([a, b]);
        for (&x, c) in g.neighbors(v).iter().zip([a, b]) {
            sets[x].insert(c);
        }
    }
    Ok(finish(sets))
}

/// Leaf extension: `v` is a leaf, `G − v` has an edge, and `rep` is an
/// overlap representation of `G − v`. Adds two labels.
pub fn extend_leaf(rep: &OverlapRep, g: &Graph, v: usize) -> Result<OverlapRep, ConstructionError> {
    if g.degree(v) != 1 {
        return Err(ConstructionError::Precondition(format!("vertex {v} is not a leaf")));
    }
    if g.edge_count() < 2 {
        return Err(ConstructionError::Precondition("G − v has no edge".into()));
    }
    let u = g.neighbors(v)[0];
    let (mut sets, t) = lift(g, rep, &[v])?;
    let (a, b) = (t + 1, t + 2);
    if g.degree(u) == 1 {
        // isolated edge uv: both sit on top of everything else
        let mut r = LabelSet::new();
        for (x, s) in sets.iter().enumerate() {
            if x != u && x != v {
                r.union_with(s);
            }
        }
        sets[u] = r.clone();
        sets[u].insert(a);
        sets[v] = r;
        sets[v].insert(b);
        return Ok(finish(sets));
    }
    let fu = sets[u].clone();
    let s = LabelSet::from([a, b]);
    for (x, set) in sets.iter_mut().enumerate() {
        if x != u && x != v && set.is_superset(&fu) {
            set.union_with(&s);
        }
    }
    sets[u].insert(b);
    sets[v] = s;
    Ok(finish(sets))
}

/// Triangle extension: `rep` is a pure representation of `G − T`. The
/// triangle receives three new labels; a vertex with exactly one neighbour
/// in `G − T` lends its private label to its neighbours in `T`, and every
/// other vertex adjacent to `T` shares one new label with them.
pub fn extend_triangle(rep: &OverlapRep, g: &Graph, tri: [usize; 3]) -> Result<OverlapRep, ConstructionError> {
    let [p, q, r] = tri;
    let distinct = p != q && q != r && p != r;
    if !distinct || [p, q, r].iter().any(|&x| x >= g.n()) || !g.has_edge(p, q) || !g.has_edge(q, r) || !g.has_edge(p, r) {
        return Err(ConstructionError::NotATriangle(tri));
    }
    let (mut sets, t) = lift(g, rep, &tri)?;
    let in_t = |x: usize| tri.contains(&x);
    sets[p] = LabelSet::from([t + 1, t + 2]);
    sets[q] = LabelSet::from([t + 1, t + 3]);
    sets[r] = LabelSet::from([t + 2, t + 3]);
    let mut next = t + 4;
    for x in (0..g.n()).filter(|&x| !in_t(x)) {
        let t_nbrs: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| in_t(y)).collect();
        if t_nbrs.is_empty() {
            continue;
        }
        let outside: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !in_t(y)).collect();
        let label = if outside.len() == 1 {
            let mut private = sets[x].difference(&sets[outside[0]]);
            // the representation is pure, so f(x) − f(y) meets no other set
            for z in (0..g.n()).filter(|&z| !in_t(z) && z != x && z != outside[0]) {
                private.difference_with(&sets[z]);
            }
            let first = private.iter().next();
            first.ok_or_else(|| {
                ConstructionError::RepMismatch(format!("vertex {x} has no private label; representation is not pure"))
            })?
        } else {
            next += 1;
            next - 1
        };
        for y in t_nbrs {
            sets[y].insert(label);
        }
        if outside.len() != 1 {
            sets[x].insert(label);
        }
    }
    Ok(finish(sets))
}

/// Representation of a disjoint union: component `i` (vertex ids `parts[i]`
/// in the union) gets `reps[i]` on its own block of labels.
pub fn disjoint_union_rep(n: usize, parts: &[(Vec<usize>, OverlapRep)]) -> OverlapRep {
    let mut sets = vec![LabelSet::new(); n];
    let mut offset: Label = 0;
    for (ids, rep) in parts {
        assert_eq!(ids.len(), rep.n(), "component ids must match the representation");
        for (i, &v) in ids.iter().enumerate() {
            sets[v] = rep.set(i).iter().map(|l| l + offset).collect();
        }
        offset += rep.size() as Label;
    }
    finish(sets)
}
