//! Generators for extremal families and exhaustive enumeration of small
//! trees and graphs. Every generator re-checks its defining property.

use crate::graph::{canonical_code, Graph};
use crate::planar::{PlaneGraph, PlanarError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generated graph fails its defining property: {0}")]
    PropertyFailed(String),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

fn ensure(ok: bool, what: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::PropertyFailed(what.into()))
    }
}

/// `K_{⌊n/2⌋,⌈n/2⌉}` minus a matching of size `⌊n/2⌋`; for odd `n` the
/// unmatched vertex also loses one edge. Connected and triangle-free with
/// `⌊n²/4 − n/2⌋` edges; for even `n` also free of star-cutsets.
///
/// For odd `n` the unmatched vertex ends up with the same neighbourhood as
/// its matched twin, so `{twin} ∪ N(twin)` is a star-cutset and the graph is
/// no harder to represent than the instance on `n − 1` vertices.
pub fn gen_biclique_minus_matching(n: usize) -> Result<Graph, FamilyError> {
    if n < 6 {
        return Err(bad(format!("biclique minus matching needs n >= 6, got {n}")));
    }
    let a = n / 2;
    let mut g = Graph::complete_bipartite(a, n - a);
    for i in 0..a {
        g.remove_edge(i, a + i);
    }
    if n % 2 == 1 {
        g.remove_edge(0, n - 1);
    }
    ensure(g.edge_count() == (n * n - 2 * n) / 4, "edge count")?;
    ensure(g.is_connected() && g.is_triangle_free(), "connected and triangle-free")?;
    if n.is_multiple_of(2) {
        ensure(g.find_star_cutset().is_free(), "no star-cutset")?;
    }
    Ok(g)
}

/// A plane graph on `n` vertices (n = 4, 8 or n >= 10) whose faces all have
/// length four and which has no star-cutset (except `C_4`).
///
/// `n ≡ 0 (mod 4)`: nested 4-cycles. Other even `n`: a cycle on `n − 2`
/// vertices with one apex inside joined to the even positions and one
/// outside joined to the odd positions. Odd `n`: split a vertex of degree at
/// least four of the `n − 1` instance into two nonadjacent copies.
pub fn gen_quadrangulation(n: usize) -> Result<PlaneGraph, FamilyError> {
    if !(n == 4 || n == 8 || n >= 10) {
        return Err(bad(format!("quadrangulations are generated for n = 4, 8 or n >= 10, got {n}")));
    }
    let pg = if n.is_multiple_of(4) {
        crate::planar::embeddings::prism_stack(n / 4)
    } else if n.is_multiple_of(2) {
        double_apex(n - 2)
    } else {
        split_vertex(&gen_quadrangulation(n - 1)?)?
    };
    ensure(pg.is_quadrangulated(), "all faces of length four")?;
    ensure(pg.graph().edge_count() + 4 == 2 * n, "2n - 4 edges")?;
    if n > 4 {
        ensure(pg.graph().find_star_cutset().is_free(), "no star-cutset")?;
    }
    Ok(pg)
}

/// Cycle `0..len` with vertex `len` inside (even positions) and `len + 1`
/// outside (odd positions).
fn double_apex(len: usize) -> PlaneGraph {
    let (inner, outer) = (len, len + 1);
    let mut rot: Vec<Vec<usize>> = (0..len)
        .map(|i| {
            let (next, prev) = ((i + 1) % len, (i + len - 1) % len);
            if i % 2 == 0 {
                vec![next, inner, prev]
            } else {
                vec![outer, next, prev]
            }
        })
        .collect();
    rot.push((0..len).step_by(2).collect());
    rot.push((1..len).step_by(2).rev().collect());
    PlaneGraph::new(rot).expect("double apex embedding is plane")
}

/// Replaces the least vertex `x` of degree at least four by `x` and a new
/// vertex: with rotation `w0 w1 ... wd-1`, `x` keeps `w0 w1 w2` and the new
/// vertex takes `w2 ... wd-1 w0`, closing the face `x w0 x' w2`.
fn split_vertex(pg: &PlaneGraph) -> Result<PlaneGraph, FamilyError> {
    let n = pg.n();
    let x = (0..n)
        .find(|&v| pg.graph().degree(v) >= 4)
        .ok_or_else(|| FamilyError::PropertyFailed("no vertex of degree four to split".into()))?;
    let w = pg.rotation(x).to_vec();
    let d = w.len();
    let x2 = n;
    let mut rot: Vec<Vec<usize>> = pg.rotations().to_vec();
    rot[x] = vec![w[0], w[1], w[2]];
    let mut r2: Vec<usize> = w[2..].to_vec();
    r2.push(w[0]);
    rot.push(r2);
    for &y in &w[3..d] {
        for z in rot[y].iter_mut() {
            if *z == x {
                *z = x2;
            }
        }
    }
    for (y, first, second) in [(w[0], x, x2), (w[2], x2, x)] {
        let r = &mut rot[y];
        let i = r.iter().position(|&z| z == x).unwrap();
        r[i] = first;
        r.insert(i + 1, second);
    }
    PlaneGraph::new(rot).map_err(|e: PlanarError| FamilyError::PropertyFailed(e.to_string()))
}

/// `n − 2` triangles sharing the edge `01`.
pub fn gen_book(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad(format!("books need n >= 3, got {n}")));
    }
    let mut g = Graph::path(2);
    for _ in 2..n {
        let w = g.add_vertex();
        g.add_edge(0, w).unwrap();
        g.add_edge(1, w).unwrap();
    }
    ensure(g.book_hubs().is_some(), "book pattern")?;
    Ok(g)
}

/// Spine `0..legs.len()` with `legs[i]` pendant vertices at spine vertex `i`.
pub fn gen_caterpillar(legs: &[usize]) -> Result<Graph, FamilyError> {
    if legs.is_empty() {
        return Err(bad("caterpillar needs a nonempty spine"));
    }
    let mut g = Graph::path(legs.len());
    for (i, &k) in legs.iter().enumerate() {
        for _ in 0..k {
            let w = g.add_vertex();
            g.add_edge(i, w).unwrap();
        }
    }
    ensure(g.is_tree(), "tree")?;
    // deleting the leaves leaves a path
    let inner: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 1).collect();
    let derived = g.induced_subgraph(&inner);
    ensure(derived.n() == 0 || (derived.is_tree() && derived.max_degree().unwrap_or(0) <= 2), "caterpillar")?;
    Ok(g)
}

/// Centre 0 with a path of `legs[i]` vertices hanging from it for each `i`.
pub fn gen_spider(legs: &[usize]) -> Result<Graph, FamilyError> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(bad("spider legs must be positive and at least one"));
    }
    let mut g = Graph::new(1);
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            let w = g.add_vertex();
            g.add_edge(prev, w).unwrap();
            prev = w;
        }
    }
    ensure(g.is_tree(), "tree")?;
    Ok(g)
}

/// A spider with `k` legs of length two: a tree equal to its own skeleton.
pub fn gen_skeleton_sample(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(bad("skeleton sample needs at least two legs"));
    }
    gen_spider(&vec![2; k])
}

/// Level sequences of all rooted trees on `n` vertices, each in canonical
/// (lexicographically largest) form, by the successor rule of Beyer and
/// Hedetniemi. The root is at level 0.
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut l: Vec<usize> = (0..n).collect();
    loop {
        out.push(l.clone());
        let Some(p) = (0..n).rev().find(|&i| l[i] > 1) else { break };
        let q = (0..p).rev().find(|&j| l[j] + 1 == l[p]).unwrap();
        for i in p..n {
            l[i] = l[i - (p - q)];
        }
    }
    out
}

fn tree_from_levels(l: &[usize]) -> Graph {
    let mut g = Graph::new(l.len());
    let mut last_at_level: Vec<usize> = Vec::new();
    for (i, &lev) in l.iter().enumerate() {
        last_at_level.truncate(lev);
        if lev > 0 {
            g.add_edge(last_at_level[lev - 1], i).unwrap();
        }
        last_at_level.push(i);
    }
    g
}

/// One or two central vertices of a tree.
pub fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// All trees on `n` vertices up to isomorphism (`1 ≤ n ≤ 10`): rooted
/// trees rooted at a centre, keeping one rooting for bicentral trees.
pub fn enum_trees(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(1..=10).contains(&n) {
        return Err(bad(format!("tree enumeration supports 1 <= n <= 10, got {n}")));
    }
    let mut out = Vec::new();
    for l in rooted_level_sequences(n) {
        let t = tree_from_levels(&l);
        let centers = tree_centers(&t);
        if !centers.contains(&0) {
            continue;
        }
        if centers.len() == 2 {
            // compare the half hanging from the other centre with the rest
            let c = centers[1];
            let end = (c + 1..n).find(|&i| l[i] <= l[c]).unwrap_or(n);
            let sub: Vec<usize> = l[c..end].iter().map(|x| x - 1).collect();
            let rest: Vec<usize> = l[..c].iter().chain(&l[end..]).copied().collect();
            if rest < sub {
                continue;
            }
        }
        out.push(t);
    }
    Ok(out)
}

/// All connected graphs on `n` vertices up to isomorphism (`1 ≤ n ≤ 6`),
/// grown one edge at a time from the empty graph with duplicates rejected by
/// canonical form. Ordered by edge count, then canonical code.
pub fn enum_connected_graphs(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if !(1..=6).contains(&n) {
        return Err(bad(format!("graph enumeration supports 1 <= n <= 6, got {n}")));
    }
    let mut level: BTreeMap<u128, Graph> = BTreeMap::new();
    level.insert(canonical_code(&Graph::new(n)), Graph::new(n));
    let mut out = Vec::new();
    while !level.is_empty() {
        out.extend(level.values().filter(|g| g.is_connected()).cloned());
        let mut next = BTreeMap::new();
        for g in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v).unwrap();
                        next.entry(canonical_code(&h)).or_insert(h);
                    }
                }
            }
        }
        level = next;
    }
    Ok(out)
}

/// A plane embedding found by trying every rotation system, or `None` if
/// the graph is not planar. Meant for `n ≤ 8`.
pub fn embed_small(g: &Graph) -> Option<PlaneGraph> {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    // every cyclic order of each neighbourhood, first neighbour fixed
    let options: Vec<Vec<Vec<usize>>> = (0..n).map(|v| cyclic_orders(g.neighbors(v))).collect();
    let mut idx = vec![0usize; n];
    loop {
        let rot = (0..n).map(|v| options[v][idx[v]].clone()).collect();
        if let Ok(pg) = PlaneGraph::new(rot) {
            return Some(pg);
        }
        let mut v = 0;
        loop {
            if v == n {
                return None;
            }
            idx[v] += 1;
            if idx[v] < options[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn cyclic_orders(nbrs: &[usize]) -> Vec<Vec<usize>> {
    if nbrs.len() <= 2 {
        return vec![nbrs.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = nbrs[1..].to_vec();
    permutations(&mut rest, 0, &mut |p| {
        let mut o = vec![nbrs[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permutations(a: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use std::collections::BTreeSet;

    /// Centre-rooted AHU string, independent of the enumerator.
    fn tree_key(t: &Graph) -> String {
        fn enc(t: &Graph, v: usize, parent: usize) -> String {
            let mut kids: Vec<String> = t.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| enc(t, w, v)).collect();
            kids.sort();
            format!("({})", kids.concat())
        }
        tree_centers(t).iter().map(|&c| enc(t, c, usize::MAX)).min().unwrap()
    }

    fn trees_by_leaf_growth(n: usize) -> BTreeSet<String> {
        let mut current = vec![Graph::new(1)];
        for _ in 1..n {
            let mut seen = BTreeMap::new();
            for t in &current {
                for v in 0..t.n() {
                    let mut u = t.clone();
                    let w = u.add_vertex();
                    u.add_edge(v, w).unwrap();
                    seen.entry(tree_key(&u)).or_insert(u);
                }
            }
            current = seen.into_values().collect();
        }
        current.iter().map(tree_key).collect()
    }

    #[test]
    fn rooted_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn tree_counts_match_independent_enumeration() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for n in 1..=10 {
            let trees = enum_trees(n).unwrap();
            assert_eq!(trees.len(), expected[n - 1], "n = {n}");
            let keys: BTreeSet<String> = trees.iter().map(tree_key).collect();
            assert_eq!(keys.len(), trees.len(), "duplicates at n = {n}");
            assert!(trees.iter().all(|t| t.is_tree() && t.n() == n));
            if n <= 9 {
                assert_eq!(keys, trees_by_leaf_growth(n));
            }
        }
        assert_eq!((3..=10).map(|n| enum_trees(n).unwrap().len()).sum::<usize>(), 199);
        assert!(enum_trees(11).is_err());
    }

    #[test]
    fn graph_counts_match_brute_force() {
        let expected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            let graphs = enum_connected_graphs(n).unwrap();
            assert_eq!(graphs.len(), expected[n - 1], "n = {n}");
            if n <= 5 {
                let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let mut codes = BTreeSet::new();
                for mask in 0u32..1 << pairs.len() {
                    let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
                    if g.is_connected() {
                        codes.insert(canonical_code(&g));
                    }
                }
                let ours: BTreeSet<u128> = graphs.iter().map(canonical_code).collect();
                assert_eq!(ours, codes);
            }
        }
    }

    #[test]
    fn biclique_family() {
        assert!(is_isomorphic(&gen_biclique_minus_matching(6).unwrap(), &Graph::cycle(6)));
        for n in 6..=14 {
            let g = gen_biclique_minus_matching(n).unwrap();
            assert_eq!(g.edge_count(), (n * n - 2 * n) / 4);
            if n % 2 == 1 {
                assert!(!g.find_star_cutset().is_free());
                assert_eq!(g.duplicate_neighborhoods().len(), 1);
            } else {
                assert!(g.duplicate_neighborhoods().is_empty());
                assert_eq!(g.min_degree(), Some(n / 2 - 1));
            }
        }
        assert_eq!(gen_biclique_minus_matching(7).unwrap().edge_count(), 8);
        assert!(gen_biclique_minus_matching(5).is_err());
    }

    #[test]
    fn quadrangulations() {
        assert!(is_isomorphic(gen_quadrangulation(8).unwrap().graph(), &Graph::cube()));
        for n in [4, 8, 10, 11, 12, 13, 14, 15, 16, 17, 20] {
            let pg = gen_quadrangulation(n).unwrap();
            assert_eq!(pg.n(), n);
            assert!(pg.faces().iter().all(|f| f.len() == 4));
        }
        for n in [3, 5, 6, 7, 9] {
            assert!(gen_quadrangulation(n).is_err());
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(gen_book(3).unwrap(), Graph::complete(3));
        assert_eq!(gen_book(6).unwrap().edge_count(), 9);
        let c = gen_caterpillar(&[0, 2, 0, 1, 0]).unwrap();
        assert_eq!((c.n(), c.edge_count()), (8, 7));
        let s = gen_spider(&[2, 2, 2]).unwrap();
        assert_eq!(s.n(), 7);
        assert_eq!(crate::tree::skeleton(&s).unwrap().size(), 7);
        assert_eq!(gen_skeleton_sample(3).unwrap(), s);
        assert!(gen_spider(&[1, 0]).is_err());
        assert!(gen_book(2).is_err());
    }

    #[test]
    fn small_embeddings() {
        assert!(embed_small(&Graph::complete(4)).is_some());
        assert!(embed_small(&Graph::complete(5)).is_none());
        assert!(embed_small(&Graph::complete_bipartite(3, 3)).is_none());
        let planar = enum_connected_graphs(5).unwrap().iter().filter(|g| embed_small(g).is_some()).count();
        // only K_5 fails among connected 5-vertex graphs
        assert_eq!(planar, 20);
    }
}
