//! Brute-force isomorphism for very small graphs (at most 16 vertices, and
//! only fast for about 8). Used by the enumerators and table lookups.

use super::Graph;

/// Maximum over degree-respecting relabelings of the upper-triangle
/// adjacency bit string. Two graphs are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "canonical_code supports at most 16 vertices");
    let degs = g.degrees();
    let mut slots: Vec<usize> = degs.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut best = 0u128;
    extend_code(g, &degs, &slots, &mut order, &mut used, &mut best);
    best ^ ((n as u128) << 120)
}

fn extend_code(
    g: &Graph,
    degs: &[usize],
    slots: &[usize],
    order: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u128,
) {
    let n = g.n();
    if order.len() == n {
        let mut code = 0u128;
        for j in 1..n {
            for i in 0..j {
                code = code << 1 | g.has_edge(order[i], order[j]) as u128;
            }
        }
        *best = (*best).max(code);
        return;
    }
    let want = slots[order.len()];
    for v in 0..n {
        if !used[v] && degs[v] == want {
            used[v] = true;
            order.push(v);
            extend_code(g, degs, slots, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A bijection `map` with `uv ∈ E(g)` iff `map[u]map[v] ∈ E(h)`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    if match_from(g, h, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn match_from(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            if match_from(g, h, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    map[v] = usize::MAX;
    false
}
