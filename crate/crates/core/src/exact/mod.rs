//! Exhaustive computation of φ and Φ for small graphs.
//!
//! For each label budget `t`, vertices receive nonempty subsets of `1..=t`
//! in a fixed order, and every partial assignment is checked pairwise
//! against the vertices already placed. Labels are introduced in increasing
//! order, which removes the `t!` relabelings of each solution.

mod naive;

pub use naive::naive_exact;

use crate::constructions::{reduce, unreduce};
use crate::graph::Graph;
use crate::model::{verify, LabelSet, OverlapRep, Quantity};
use rayon::prelude::*;
use std::cmp::Ordering as CmpOrdering;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use thiserror::Error;

/// Largest label budget. Sets are stored as `u32` masks, but the candidate
/// list grows as `2^t`.
pub const MAX_LABELS: usize = 16;
/// Largest vertex count accepted by the solver.
pub const MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {0} vertices; the exact solver accepts at most {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Reverse of the min-degree elimination order.
    #[default]
    ReverseDegeneracy,
    /// Vertex ids ascending.
    Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// First budget tried; `None` starts from the trivial lower bound.
    pub t_min: Option<usize>,
    pub t_max: usize,
    pub order: VertexOrder,
    /// Maximum number of search nodes over the whole run.
    pub node_limit: Option<u64>,
    pub parallel: bool,
    /// Introduce labels in increasing order only. Turning this off leaves the
    /// answer unchanged and is used to test that claim.
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            t_min: None,
            t_max: 16,
            order: VertexOrder::default(),
            node_limit: None,
            parallel: false,
            symmetry_breaking: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every budget below `value` was refuted and a witness of size `value` exists.
    Exact,
    /// A witness of size `value` exists, but the search began above the trivial
    /// lower bound, so smaller budgets were not all refuted.
    UpperOnly,
    /// The node limit was hit; `value` is a lower bound (all smaller budgets refuted).
    BudgetExceeded,
    /// No representation with at most `t_max` labels; `value` is `t_max + 1`.
    Exhausted,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchStatus::Exact => "exact",
            SearchStatus::UpperOnly => "upper-only",
            SearchStatus::BudgetExceeded => "budget-exceeded",
            SearchStatus::Exhausted => "exhausted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub quantity: Quantity,
    pub value: usize,
    pub witness: Option<OverlapRep>,
    pub nodes: u64,
    pub status: SearchStatus,
}

impl ExactResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

/// φ ≥ 3 once there is an edge, since two overlapping sets need three labels.
pub fn trivial_lower_bound(g: &Graph) -> usize {
    if g.edge_count() > 0 {
        3
    } else {
        usize::from(g.n() > 0)
    }
}

pub fn exact_phi(g: &Graph, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    solve(g, Quantity::Phi, cfg)
}

pub fn exact_pol(g: &Graph, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    solve(g, Quantity::Pol, cfg)
}

/// φ after removing isolated vertices and duplicate neighbourhoods, which
/// leaves φ unchanged; the witness is mapped back to `g`.
pub fn exact_phi_reduced(g: &Graph, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    let (h, red) = reduce(g);
    let mut res = exact_phi(&h, cfg)?;
    if let Some(w) = res.witness.take() {
        res.witness = Some(unreduce(&w, &red).expect("reduction trace matches its own graph"));
    }
    Ok(res)
}

pub fn solve(g: &Graph, quantity: Quantity, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(ExactError::TooLarge(n));
    }
    let seed = trivial_lower_bound(g);
    let t_min = cfg.t_min.unwrap_or(seed);
    if t_min < seed {
        return Err(ExactError::InvalidConfig(format!("t_min {t_min} is below the trivial lower bound {seed}")));
    }
    if cfg.t_max > MAX_LABELS || cfg.t_max < t_min {
        return Err(ExactError::InvalidConfig(format!(
            "label range {t_min}..={} must lie within 1..={MAX_LABELS}",
            cfg.t_max
        )));
    }
    if n == 0 {
        let witness = OverlapRep::new(Vec::new()).unwrap();
        return Ok(ExactResult { quantity, value: 0, witness: Some(witness), nodes: 0, status: SearchStatus::Exact });
    }

    let order = match cfg.order {
        VertexOrder::ReverseDegeneracy => {
            let mut o = g.degeneracy().order;
            o.reverse();
            o
        }
        VertexOrder::Natural => (0..n).collect(),
    };
    let earlier = (0..n)
        .map(|i| (0..i).map(|j| (j, g.has_edge(order[i], order[j]))).collect())
        .collect();
    let counter = AtomicU64::new(0);
    let out_of_budget = AtomicBool::new(false);
    let mut search = Search {
        earlier,
        pure: quantity == Quantity::Pol,
        symmetry_breaking: cfg.symmetry_breaking,
        candidates: Vec::new(),
        limit: cfg.node_limit.unwrap_or(u64::MAX),
        counter: &counter,
        out_of_budget: &out_of_budget,
    };

    for t in t_min..=cfg.t_max {
        search.candidates = candidates(t);
        let found = if cfg.parallel { search.run_parallel() } else { search.run_from(Vec::new()) };
        let nodes = counter.load(Ordering::Relaxed);
        if out_of_budget.load(Ordering::Relaxed) {
            return Ok(ExactResult { quantity, value: t, witness: None, nodes, status: SearchStatus::BudgetExceeded });
        }
        if let Some(masks) = found {
            let mut sets = vec![LabelSet::new(); n];
            for (i, &m) in masks.iter().enumerate() {
                sets[order[i]] = mask_to_set(m);
            }
            let witness = OverlapRep::new(sets).expect("candidates are nonempty");
            debug_assert!(verify(g, &witness, quantity.kind()).is_ok());
            let status = if t_min == seed { SearchStatus::Exact } else { SearchStatus::UpperOnly };
            return Ok(ExactResult { quantity, value: witness.size(), witness: Some(witness), nodes, status });
        }
    }
    Ok(ExactResult {
        quantity,
        value: cfg.t_max + 1,
        witness: None,
        nodes: counter.load(Ordering::Relaxed),
        status: SearchStatus::Exhausted,
    })
}

fn mask_to_set(m: u32) -> LabelSet {
    (0..32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Nonempty subsets of `1..=t`, by size and then lexicographically.
fn candidates(t: usize) -> Vec<u32> {
    let mut c: Vec<u32> = (1..=(u32::MAX >> (32 - t))).collect();
    c.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then_with(|| lex(a, b)));
    c
}

/// Lexicographic order of the sorted label sequences.
fn lex(a: u32, b: u32) -> CmpOrdering {
    let diff = a ^ b;
    if diff == 0 {
        return CmpOrdering::Equal;
    }
    // the smallest label in exactly one of the sets decides, unless one
    // sequence is a prefix of the other
    let low = diff.trailing_zeros();
    let below = (1u32 << low) - 1;
    let (a_has, b_has) = (a >> low & 1 == 1, b >> low & 1 == 1);
    let a_rest = a & !below & !(1 << low);
    let b_rest = b & !below & !(1 << low);
    match (a_has, b_has) {
        // a continues with `low`, b continues with something larger or ends
        (true, false) if b_rest == 0 => CmpOrdering::Greater,
        (true, false) => CmpOrdering::Less,
        (false, true) if a_rest == 0 => CmpOrdering::Less,
        _ => CmpOrdering::Greater,
    }
}

struct Search<'a> {
    /// For position `i`, each earlier position with its adjacency to `i`.
    earlier: Vec<Vec<(usize, bool)>>,
    pure: bool,
    symmetry_breaking: bool,
    candidates: Vec<u32>,
    limit: u64,
    counter: &'a AtomicU64,
    out_of_budget: &'a AtomicBool,
}

impl Search<'_> {
    fn fits(&self, assigned: &[u32], m: u32) -> bool {
        self.earlier[assigned.len()].iter().all(|&(j, adjacent)| {
            let o = assigned[j];
            let meet = m & o != 0;
            let overlap = meet && m & !o != 0 && o & !m != 0;
            if adjacent {
                overlap
            } else if self.pure {
                !meet
            } else {
                !overlap
            }
        })
    }

    /// Labels in use form `1..=k`; a new set may add only `k+1..=k+j`.
    fn introduces_in_order(used: u32, m: u32) -> bool {
        let k = used.count_ones();
        let fresh = if k == 32 { 0 } else { m >> k };
        fresh & fresh.wrapping_add(1) == 0
    }

    fn options<'s>(&'s self, assigned: &'s [u32], used: u32) -> impl Iterator<Item = u32> + 's {
        self.candidates
            .iter()
            .copied()
            .filter(move |&m| !self.symmetry_breaking || Self::introduces_in_order(used, m))
            .filter(move |&m| self.fits(assigned, m))
    }

    fn tick(&self) -> bool {
        if self.out_of_budget.load(Ordering::Relaxed) {
            return false;
        }
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.limit {
            self.out_of_budget.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn run_from(&self, mut assigned: Vec<u32>) -> Option<Vec<u32>> {
        let used = assigned.iter().fold(0, |acc, m| acc | m);
        self.dfs(&mut assigned, used).then_some(assigned)
    }

    fn dfs(&self, assigned: &mut Vec<u32>, used: u32) -> bool {
        if assigned.len() == self.earlier.len() {
            return true;
        }
        let opts: Vec<u32> = self.options(assigned, used).collect();
        for m in opts {
            if !self.tick() {
                return false;
            }
            assigned.push(m);
            if self.dfs(assigned, used | m) {
                return true;
            }
            assigned.pop();
        }
        false
    }

    /// Splits the tree after the first two vertices and keeps the solution of
    /// the earliest prefix, which is the one the sequential search returns.
    fn run_parallel(&self) -> Option<Vec<u32>> {
        let depth = self.earlier.len().min(2);
        let mut prefixes = vec![Vec::new()];
        for _ in 0..depth {
            prefixes = prefixes
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    let used = p.iter().fold(0, |acc, m| acc | m);
                    self.options(&p, used)
                        .map(|m| {
                            let mut q = p.clone();
                            q.push(m);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        prefixes.into_par_iter().find_map_first(|p| self.run_from(p))
    }
}
