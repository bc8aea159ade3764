//! Skeletons of trees and optimal overlap representations of trees.
//!
//! The skeleton of a tree `T` is obtained by deleting all leaves and then
//! restoring one leaf at each leaf of what remains. Its vertex count is
//! `φ(T)`. The representation is assembled caterpillar by caterpillar along a
//! path decomposition of the skeleton: an initial caterpillar on a longest
//! path, then one extension per additional path.

use crate::graph::Graph;
use crate::model::{is_a_minimal, Label, LabelSet, OverlapRep};
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("tree has {0} vertices, at least 3 are required")]
    TooSmall(usize),
    #[error("input tree is not a caterpillar")]
    NotACaterpillar,
    #[error("vertex {vertex} is not {label}-minimal")]
    NotMinimal { vertex: usize, label: Label },
    #[error("attachment vertex {0} is isolated")]
    IsolatedAttachment(usize),
    #[error("invalid caterpillar step: {0}")]
    InvalidStep(String),
}

/// One caterpillar of the decomposition, in the ids of the ambient tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarStep {
    /// `w_0, ..., w_l`; for the initial caterpillar this is the whole longest path.
    pub spine: Vec<usize>,
    /// `w_0` for extension steps.
    pub attachment: Option<usize>,
    /// `(leaf, spine vertex)` pairs; spine vertices are internal to the spine.
    pub legs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonResult {
    /// Sorted vertex ids of the skeleton.
    pub vertices: Vec<usize>,
    /// Path decomposition: the first step is the initial caterpillar.
    pub steps: Vec<CaterpillarStep>,
}

impl SkeletonResult {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

fn check_tree(t: &Graph) -> Result<(), TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if t.n() < 3 {
        return Err(TreeError::TooSmall(t.n()));
    }
    Ok(())
}

/// Membership mask of the skeleton.
fn skeleton_mask(t: &Graph) -> Vec<bool> {
    let n = t.n();
    let is_leaf: Vec<bool> = (0..n).map(|v| t.degree(v) == 1).collect();
    let mut keep: Vec<bool> = is_leaf.iter().map(|&l| !l).collect();
    let derived: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let lowest_leaf = |v: usize| t.neighbors(v).iter().copied().find(|&u| is_leaf[u]);
    if derived.len() == 1 {
        let c = derived[0];
        for &u in t.neighbors(c).iter().filter(|&&u| is_leaf[u]).take(2) {
            keep[u] = true;
        }
        return keep;
    }
    for &y in &derived {
        let inner = t.neighbors(y).iter().filter(|&&u| !is_leaf[u]).count();
        if inner == 1 {
            keep[lowest_leaf(y).expect("a leaf of the derived tree has a leaf neighbour")] = true;
        }
    }
    keep
}

fn bfs_far(t: &Graph, mask: &[bool], src: usize) -> (usize, Vec<usize>) {
    let mut parent = vec![usize::MAX; t.n()];
    let mut dist = vec![usize::MAX; t.n()];
    dist[src] = 0;
    parent[src] = src;
    let mut queue = VecDeque::from([src]);
    let mut far = src;
    while let Some(v) = queue.pop_front() {
        if dist[v] > dist[far] || (dist[v] == dist[far] && v < far) {
            far = v;
        }
        for &u in t.neighbors(v) {
            if mask[u] && dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    (far, parent)
}

pub fn skeleton(t: &Graph) -> Result<SkeletonResult, TreeError> {
    check_tree(t)?;
    let n = t.n();
    let mask = skeleton_mask(t);
    let vertices: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();

    let (e1, _) = bfs_far(t, &mask, vertices[0]);
    let (e2, _) = bfs_far(t, &mask, e1);
    let (r, p) = (e1.min(e2), e1.max(e2));
    let (_, parent) = bfs_far(t, &mask, r);
    let mut first = vec![p];
    while *first.last().unwrap() != r {
        first.push(parent[*first.last().unwrap()]);
    }
    first.reverse();

    // rooted at r; children in increasing id order
    let (m, par) = (&mask, &parent);
    let children = |v: usize| {
        t.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| m[u] && par[u] == v && u != v)
    };

    let mut spines: Vec<Vec<usize>> = vec![first];
    let mut i = 0;
    while i < spines.len() {
        let spine = spines[i].clone();
        let start = if i == 0 { 0 } else { 1 };
        for (j, &u) in spine.iter().enumerate().skip(start) {
            let next = spine.get(j + 1).copied();
            for c in children(u) {
                if Some(c) == next {
                    continue;
                }
                let mut path = vec![u, c];
                let mut cur = c;
                while let Some(d) = children(cur).next() {
                    path.push(d);
                    cur = d;
                }
                spines.push(path);
            }
        }
        i += 1;
    }

    // owner[y] = index of the spine in which y is not the attachment
    let mut owner = vec![usize::MAX; n];
    for (k, spine) in spines.iter().enumerate() {
        let start = if k == 0 { 0 } else { 1 };
        for &v in &spine[start..] {
            owner[v] = k;
        }
    }
    let mut legs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); spines.len()];
    for x in (0..n).filter(|&x| !mask[x]) {
        let y = t.neighbors(x)[0];
        legs[owner[y]].push((x, y));
    }
    let steps = spines
        .into_iter()
        .zip(legs)
        .enumerate()
        .map(|(k, (spine, legs))| CaterpillarStep {
            attachment: (k > 0).then(|| spine[0]),
            spine,
            legs,
        })
        .collect();
    Ok(SkeletonResult { vertices, steps })
}

fn spine_positions(step: &CaterpillarStep) -> HashMap<usize, Label> {
    step.spine.iter().enumerate().map(|(i, &v)| (v, i as Label)).collect()
}

/// Raw sets of the initial caterpillar on labels `1..=l`, keyed by vertex id.
fn initial_sets(step: &CaterpillarStep) -> Vec<(usize, LabelSet)> {
    let l = step.spine.len() as Label;
    let mut out = Vec::new();
    for (i, &v) in step.spine.iter().enumerate() {
        let i = i as Label + 1;
        let set = if i < l { LabelSet::from([i, i + 1]) } else { LabelSet::range(1, l - 1) };
        out.push((v, set));
    }
    let pos = spine_positions(step);
    for &(x, y) in &step.legs {
        out.push((x, LabelSet::range(1, pos[&y] + 1)));
    }
    out
}

/// Raw sets for the new vertices of an extension step with label `a` and
/// new labels `b_1..b_l = lo..lo+l-1`.
fn extension_sets(step: &CaterpillarStep, a: Label, lo: Label) -> Vec<(usize, LabelSet)> {
    let l = step.spine.len() as Label - 1;
    let b = |i: Label| if i == 0 { a } else { lo + i - 1 };
    let mut out = Vec::new();
    for (i, &w) in step.spine.iter().enumerate().skip(1) {
        let i = i as Label;
        out.push((w, LabelSet::from([b(i - 1), b(i)])));
    }
    let pos = spine_positions(step);
    for &(x, y) in &step.legs {
        out.push((x, LabelSet::range(b(pos[&y]), b(l))));
    }
    out
}

/// Checks that `rep` represents a tree with vertices `0..rep.n()` and that
/// `step` attaches a caterpillar at one of them with new vertices numbered
/// from `rep.n()` on.
fn check_step(n_h: usize, step: &CaterpillarStep) -> Result<usize, TreeError> {
    let bad = |m: &str| TreeError::InvalidStep(m.to_string());
    let v = step.attachment.ok_or_else(|| bad("extension steps need an attachment vertex"))?;
    if step.spine.first() != Some(&v) || step.spine.len() < 2 {
        return Err(bad("spine must start at the attachment and have at least one new vertex"));
    }
    if v >= n_h {
        return Err(bad("attachment vertex is not in H"));
    }
    let mut new: Vec<usize> = step.spine[1..].to_vec();
    new.extend(step.legs.iter().map(|&(x, _)| x));
    new.sort_unstable();
    if new.iter().enumerate().any(|(i, &x)| x != n_h + i) {
        return Err(bad("new vertices must be numbered consecutively after H"));
    }
    let l = step.spine.len() - 1;
    if step.legs.iter().any(|&(_, y)| !step.spine[1..l].contains(&y)) {
        return Err(bad("legs must attach to internal spine vertices"));
    }
    Ok(v)
}

/// Overlap representation of a caterpillar of size equal to its longest path.
/// Returns the representation and the longest path `v_1..v_l` used as the
/// spine, so that `v_i` is minimal for the `i`-th label of the spine.
pub fn caterpillar_rep(t: &Graph) -> Result<(OverlapRep, Vec<usize>), TreeError> {
    check_tree(t)?;
    let derived: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) > 1).collect();
    let max_inner = derived
        .iter()
        .map(|&v| t.neighbors(v).iter().filter(|&&u| t.degree(u) > 1).count())
        .max()
        .unwrap_or(0);
    if max_inner > 2 {
        return Err(TreeError::NotACaterpillar);
    }
    let sk = skeleton(t)?;
    let step = &sk.steps[0];
    if sk.steps.len() != 1 {
        return Err(TreeError::NotACaterpillar);
    }
    let mut sets = vec![LabelSet::new(); t.n()];
    for (v, s) in initial_sets(step) {
        sets[v] = s;
    }
    let rep = OverlapRep::new(sets).expect("every vertex of a caterpillar is covered");
    Ok((rep, step.spine.clone()))
}

/// Extends a representation of `h` along a caterpillar attached at `v` using
/// an `a` for which `v` is `a`-minimal. Returns the combined graph and its
/// representation; `rep_h.size()` grows by the spine length `l`.
pub fn extend_caterpillar(
    rep_h: &OverlapRep,
    h: &Graph,
    step: &CaterpillarStep,
    a: Label,
) -> Result<(Graph, OverlapRep), TreeError> {
    let v = check_step(h.n(), step)?;
    if h.degree(v) == 0 {
        return Err(TreeError::IsolatedAttachment(v));
    }
    if !is_a_minimal(rep_h, v, a).unwrap_or(false) {
        return Err(TreeError::NotMinimal { vertex: v, label: a });
    }
    let total = h.n() + step.spine.len() - 1 + step.legs.len();
    let mut g = h.clone();
    while g.n() < total {
        g.add_vertex();
    }
    for w in step.spine.windows(2) {
        g.add_edge(w[0], w[1]).map_err(|e| TreeError::InvalidStep(e.to_string()))?;
    }
    for &(x, y) in &step.legs {
        g.add_edge(x, y).map_err(|e| TreeError::InvalidStep(e.to_string()))?;
    }
    let lo = rep_h.size() as Label + 1;
    let l = step.spine.len() as Label - 1;
    let bset = LabelSet::range(lo, lo + l - 1);
    let mut sets: Vec<LabelSet> = rep_h.sets().to_vec();
    for (u, s) in sets.iter_mut().enumerate() {
        if u != v && s.contains(a) {
            s.union_with(&bset);
        }
    }
    sets.resize(total, LabelSet::new());
    for (x, s) in extension_sets(step, a, lo) {
        sets[x] = s;
    }
    let rep = OverlapRep::new(sets).map_err(|e| TreeError::InvalidStep(e.to_string()))?;
    Ok((g, rep))
}

/// Extension steps as recorded by the tree construction.
struct Extension {
    a: Label,
    lo: Label,
    hi: Label,
    at: usize,
}

/// Shared bookkeeping for both routes: per-vertex raw base sets, creation
/// step, and the list of extensions.
struct Plan {
    base: Vec<LabelSet>,
    created: Vec<usize>,
    ext: Vec<Extension>,
}

fn plan(t: &Graph) -> Result<Plan, TreeError> {
    let sk = skeleton(t)?;
    let n = t.n();
    let mut base = vec![LabelSet::new(); n];
    let mut created = vec![0; n];
    let mut min_label = vec![0 as Label; n];
    let first = &sk.steps[0];
    for (v, s) in initial_sets(first) {
        base[v] = s;
    }
    for (i, &v) in first.spine.iter().enumerate() {
        min_label[v] = i as Label + 1;
    }
    let mut next = first.spine.len() as Label + 1;
    // step 0 is the initial caterpillar; extension k is step k
    let mut ext = vec![Extension { a: 0, lo: 1, hi: 0, at: usize::MAX }];
    for (k, step) in sk.steps.iter().enumerate().skip(1) {
        let at = step.attachment.expect("extension steps have an attachment");
        let a = min_label[at];
        debug_assert!(a != 0, "attachment points are internal skeleton vertices");
        let l = step.spine.len() as Label - 1;
        for (x, s) in extension_sets(step, a, next) {
            base[x] = s;
            created[x] = k;
        }
        for (i, &w) in step.spine.iter().enumerate().skip(1) {
            min_label[w] = next + i as Label - 1;
        }
        ext.push(Extension { a, lo: next, hi: next + l - 1, at });
        next += l;
    }
    Ok(Plan { base, created, ext })
}

fn small_tree_rep(t: &Graph) -> Option<OverlapRep> {
    match t.n() {
        1 => Some(OverlapRep::from_lists([[1]]).unwrap()),
        2 => Some(OverlapRep::from_lists([[1, 2], [2, 3]]).unwrap()),
        _ => None,
    }
}

/// Optimal overlap representation of a tree. Every set receives the label
/// blocks of later extensions by following, per vertex, the chain of
/// extensions its labels trigger; the work is proportional to the output.
pub fn tree_overlap_rep(t: &Graph) -> Result<OverlapRep, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if let Some(rep) = small_tree_rep(t) {
        return Ok(rep);
    }
    let Plan { base, created, ext } = plan(t)?;
    let max_label = ext.last().map_or(0, |e| e.hi).max(base.iter().filter_map(LabelSet::max_label).max().unwrap_or(0));
    let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); max_label as usize + 1];
    for (k, e) in ext.iter().enumerate().skip(1) {
        triggers[e.a as usize].push(k);
    }
    let mut sets = Vec::with_capacity(t.n());
    for x in 0..t.n() {
        let mut set = base[x].clone();
        let mut stack: Vec<Label> = set.iter().collect();
        while let Some(l) = stack.pop() {
            let list = &triggers[l as usize];
            let from = list.partition_point(|&k| k <= created[x]);
            for &k in &list[from..] {
                let e = &ext[k];
                if e.at == x {
                    continue;
                }
                for b in e.lo..=e.hi {
                    if set.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        sets.push(set);
    }
    Ok(OverlapRep::new(sets).expect("every tree vertex gets a nonempty set"))
}

/// The same construction with every extension applied eagerly to all
/// existing sets. Quadratic; kept as a cross-check.
pub fn tree_overlap_rep_naive(t: &Graph) -> Result<OverlapRep, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if let Some(rep) = small_tree_rep(t) {
        return Ok(rep);
    }
    let Plan { base, created, ext } = plan(t)?;
    let mut sets: Vec<Option<LabelSet>> = vec![None; t.n()];
    for x in 0..t.n() {
        if created[x] == 0 {
            sets[x] = Some(base[x].clone());
        }
    }
    for (k, e) in ext.iter().enumerate().skip(1) {
        let bset = LabelSet::range(e.lo, e.hi);
        for (x, s) in sets.iter_mut().enumerate() {
            if let Some(s) = s {
                if x != e.at && s.contains(e.a) {
                    s.union_with(&bset);
                }
            }
        }
        for x in 0..t.n() {
            if created[x] == k {
                sets[x] = Some(base[x].clone());
            }
        }
    }
    let sets = sets.into_iter().map(|s| s.expect("all vertices created")).collect();
    Ok(OverlapRep::new(sets).expect("every tree vertex gets a nonempty set"))
}
