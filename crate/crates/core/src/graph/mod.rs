//! Finite simple undirected graphs on dense vertex ids `0..n`.
//!
//! Besides the usual queries this module houses the structural predicates the
//! constructions rely on as preconditions: bipartition with odd-cycle witness,
//! degeneracy orders, duplicate neighborhoods, books and star-cutsets.

mod io;
mod iso;

pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use iso::{canonical_code, find_isomorphism, is_isomorphic};

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    MultiEdge(usize, usize),
}

/// A finite simple undirected graph. Adjacency lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// A separating set `S` containing a vertex adjacent to all of `S - center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCutset {
    pub center: usize,
    /// Sorted, contains `center`.
    pub set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarCutsetSearch {
    Found(StarCutset),
    None,
    /// The graph is disconnected; the question is only asked of connected graphs.
    NotApplicable,
}

impl StarCutsetSearch {
    pub fn is_free(&self) -> bool {
        matches!(self, StarCutsetSearch::None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// Vertex sequence of an odd cycle, consecutive entries adjacent and the
    /// last adjacent to the first.
    OddCycle(Vec<usize>),
}

/// Result of the min-degree elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub k: usize,
    /// Vertices in removal order; each has at most `k` neighbors later in the order.
    pub order: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::MultiEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// `None` for the graph with no vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn is_nontrivial(&self) -> bool {
        self.m > 0
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut c = self.adj[v].clone();
        let pos = c.binary_search(&v).unwrap_err();
        c.insert(pos, v);
        c
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Pairs `(v, w)` with `v > w` and `N(v) = N(w)`, ordered by `(v, w)`.
    pub fn duplicate_neighborhoods(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n() {
            for w in 0..v {
                if self.adj[v] == self.adj[w] {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph after deleting the vertices flagged in `removed`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// BFS two-colouring. On failure returns the odd cycle closed by the
    /// first monochromatic edge found.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::OddCycle(odd_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (left, right) = (0..n).partition(|&v| color[v] == Some(0));
        Bipartition::Bipartite { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Bipartite { .. })
    }

    /// All triangles as sorted triples, lexicographically ordered.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for &w in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !intersects_sorted(&self.adj[u], &self.adj[v]))
    }

    /// Repeatedly removes a minimum-degree vertex (lowest id on ties).
    pub fn degeneracy(&self) -> Degeneracy {
        let n = self.n();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut k = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("a vertex remains");
            k = k.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        Degeneracy { k, order }
    }

    /// Looks for a separating set `{x} ∪ A` with `A ⊆ N(x)`.
    ///
    /// For a fixed centre `x` with `R = V - N[x]`, such a separator exists iff
    /// `G[R]` has two or more components, or `R` is empty and `N(x)` holds two
    /// nonadjacent vertices, or `R` is connected and some neighbor of `x` has
    /// no neighbor in `R`. Centres are tried in increasing order.
    pub fn find_star_cutset(&self) -> StarCutsetSearch {
        if !self.is_connected() {
            return StarCutsetSearch::NotApplicable;
        }
        let n = self.n();
        for x in 0..n {
            let mut in_closed = vec![false; n];
            in_closed[x] = true;
            for &y in &self.adj[x] {
                in_closed[y] = true;
            }
            let rest = self.components_avoiding(&in_closed);
            let nbrs = &self.adj[x];
            let keep: Option<Vec<usize>> = match rest.len() {
                0 => nonadjacent_pair(self, nbrs).map(|(a, b)| vec![a, b]),
                1 => {
                    let outside = &rest[0];
                    nbrs.iter()
                        .copied()
                        .find(|&y| !self.adj[y].iter().any(|w| outside.binary_search(w).is_ok()))
                        .map(|y| vec![y])
                }
                _ => Some(Vec::new()),
            };
            if let Some(keep) = keep {
                let mut set: Vec<usize> =
                    nbrs.iter().copied().filter(|y| !keep.contains(y)).collect();
                set.push(x);
                set.sort_unstable();
                return StarCutsetSearch::Found(StarCutset { center: x, set });
            }
        }
        StarCutsetSearch::None
    }

    /// True when deleting `set` leaves at least two components.
    pub fn separates(&self, set: &[usize]) -> bool {
        let mut removed = vec![false; self.n()];
        for &v in set {
            removed[v] = true;
        }
        self.components_avoiding(&removed).len() >= 2
    }

    /// Returns the two dominating hub vertices when the graph is the book
    /// `B_n`: `n - 2 >= 1` triangles sharing one edge.
    pub fn book_hubs(&self) -> Option<(usize, usize)> {
        let n = self.n();
        if n < 3 || self.m != 2 * n - 3 {
            return None;
        }
        for (u, v) in self.edges() {
            if self.degree(u) == n - 1 && self.degree(v) == n - 1 {
                let rest_ok = (0..n)
                    .filter(|&w| w != u && w != v)
                    .all(|w| self.degree(w) == 2);
                if rest_ok {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_book(&self) -> bool {
        self.book_hubs().is_some()
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        g
    }

    /// `G - v`, with the vertices above `v` shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `G - S`, surviving vertices renumbered in increasing order.
    /// Returns the graph and the surviving original ids.
    pub fn remove_vertices(&self, set: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|w| !set.contains(w)).collect();
        (self.induced_subgraph(&keep), keep)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.clone();
        for _ in 0..other.n() {
            g.add_vertex();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("a permutation preserves simplicity")
    }
}

/// Standard graphs used throughout tests, examples and the CLI.
impl Graph {
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Graph {
        Graph::from_edges(m + 1, (1..=m).map(|v| (0, v))).unwrap()
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Wheel: hub 0 joined to the rim cycle `1..=k`.
    pub fn wheel(k: usize) -> Graph {
        let mut g = Graph::new(k + 1);
        for i in 0..k {
            g.add_edge(0, i + 1).unwrap();
            g.add_edge(i + 1, (i + 1) % k + 1).unwrap();
        }
        g
    }

    /// The 3-cube `Q_3`; vertices are bit strings, adjacent at Hamming distance 1.
    pub fn cube() -> Graph {
        let mut g = Graph::new(8);
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}

fn intersects_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn nonadjacent_pair(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left
}
