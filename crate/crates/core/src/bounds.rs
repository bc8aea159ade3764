//! Certified bounds on φ and Φ.
//!
//! A lower certificate names a rule whose preconditions are re-evaluated on
//! the graph by [`BoundCertificate::recheck`]; an upper certificate carries a
//! witness representation that is verified.
//!
//! Lower-bound rules:
//!
//! | rule | quantity | value |
//! |------|----------|-------|
//! | `nonempty` | both | 1 |
//! | `edge` | both | 3 |
//! | `tree-skeleton` | φ | skeleton size of a tree on at least 3 vertices |
//! | `triangle-free-star-cutset-free` | φ | `|E| − 1` for a connected triangle-free graph without star-cutset |
//! | `triangle-free-edges` | Φ | `|E|` for a triangle-free graph |
//! | `exact` | both | value found by exhaustive search |
//! | `reduced:R` | both | rule `R` applied to the reduced graph (an induced subgraph) |
//! | `from-phi:R` | Φ | φ rule `R`, since `φ ≤ Φ` |

use crate::constructions::{
    clique_rep, decomposition_rep, default_edge, disjoint_union_rep, edge_bound_rep, extend_deg_le2, extend_leaf,
    greedy_triangle_decomposition, reduce, small_graph_rep, unreduce, CliqueDecomposition,
};
use crate::exact::{exact_phi_reduced, exact_pol, ExactResult, SearchConfig, SearchStatus, MAX_VERTICES};
use crate::graph::Graph;
use crate::model::{parse_rep, to_text, verify, Label, LabelSet, OverlapRep, Quantity};
use crate::parse::{content_lines, parse_usize, ParseError};
use crate::planar::{planar_phi_upper, planar_pol_upper, PlaneGraph};
use crate::tree::{skeleton, tree_overlap_rep};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Upper,
    Lower,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "upper" => Ok(Direction::Upper),
            "lower" => Ok(Direction::Lower),
            _ => Err(format!("unknown direction `{s}` (upper, lower)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("upper certificate has no witness")]
    MissingWitness,
    #[error("certificate claims {claimed} but its witness has {found} labels")]
    SizeMismatch { claimed: usize, found: usize },
    #[error("witness does not verify: {0}")]
    Verify(String),
    #[error("rule `{0}` does not apply to this graph")]
    NotApplicable(String),
    #[error("rule `{rule}` gives {holds}, not the claimed {claimed}")]
    Overclaimed { rule: String, claimed: usize, holds: usize },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("no construction produced a representation: {0}")]
    Construction(String),
}

/// A bound `quantity(G) ≤ value` or `quantity(G) ≥ value` with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub quantity: Quantity,
    pub direction: Direction,
    pub value: usize,
    /// Rule or construction route; may contain spaces.
    pub rule: String,
    /// Present exactly for upper bounds.
    pub witness: Option<OverlapRep>,
}

impl BoundCertificate {
    pub fn upper(quantity: Quantity, witness: OverlapRep, rule: impl Into<String>) -> Self {
        BoundCertificate {
            quantity,
            direction: Direction::Upper,
            value: witness.size(),
            rule: rule.into(),
            witness: Some(witness),
        }
    }

    pub fn lower(quantity: Quantity, value: usize, rule: impl Into<String>) -> Self {
        BoundCertificate { quantity, direction: Direction::Lower, value, rule: rule.into(), witness: None }
    }

    /// Header line `quantity direction value rule`, followed by the witness in
    /// the representation format for upper bounds.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.quantity, self.direction, self.value, self.rule);
        if let Some(w) = &self.witness {
            out.push_str(&to_text(w));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let (no, head) = lines.next().ok_or_else(|| ParseError::new(0, "empty certificate"))?;
        let mut toks = head.splitn(4, char::is_whitespace);
        let mut field = |what: &str| toks.next().ok_or_else(|| ParseError::new(no, format!("missing {what}")));
        let quantity: Quantity = field("quantity")?.parse().map_err(|e: String| ParseError::new(no, e))?;
        let direction: Direction = field("direction")?.parse().map_err(|e: String| ParseError::new(no, e))?;
        let value = parse_usize(field("value")?, no)?;
        let rule = field("rule")?.trim().to_string();
        let rest: Vec<&str> = lines.map(|(_, l)| l).collect();
        let witness = match (direction, rest.is_empty()) {
            (Direction::Lower, true) => None,
            (Direction::Lower, false) => return Err(ParseError::new(no + 1, "lower certificates carry no witness")),
            (Direction::Upper, true) => return Err(ParseError::new(no, "upper certificate without witness")),
            (Direction::Upper, false) => {
                let rep = parse_rep(&rest.join("\n"))
                    .map_err(|e| ParseError::new(0, format!("witness: {}", e.message)))?;
                if rep.size() != value {
                    return Err(ParseError::new(no, format!("value {value} but witness has {} labels", rep.size())));
                }
                Some(rep)
            }
        };
        Ok(BoundCertificate { quantity, direction, value, rule, witness })
    }

    /// Re-derives the bound on `g`: verifies the witness of an upper bound,
    /// or re-evaluates the preconditions of a lower-bound rule.
    pub fn recheck(&self, g: &Graph) -> Result<(), BoundError> {
        match self.direction {
            Direction::Upper => {
                let w = self.witness.as_ref().ok_or(BoundError::MissingWitness)?;
                if w.size() != self.value {
                    return Err(BoundError::SizeMismatch { claimed: self.value, found: w.size() });
                }
                verify(g, w, self.quantity.kind()).map_err(|e| BoundError::Verify(e.to_string()))
            }
            Direction::Lower => {
                let holds = lower_rule(g, self.quantity, &self.rule)?;
                if holds < self.value {
                    return Err(BoundError::Overclaimed { rule: self.rule.clone(), claimed: self.value, holds });
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Value of a lower-bound rule on `g`, or why it does not apply.
fn lower_rule(g: &Graph, quantity: Quantity, rule: &str) -> Result<usize, BoundError> {
    let na = || BoundError::NotApplicable(rule.to_string());
    if let Some(inner) = rule.strip_prefix("reduced:") {
        return lower_rule(&reduce(g).0, quantity, inner);
    }
    if let Some(inner) = rule.strip_prefix("from-phi:") {
        return match quantity {
            Quantity::Pol => lower_rule(g, Quantity::Phi, inner),
            Quantity::Phi => Err(na()),
        };
    }
    let m = g.edge_count();
    match (rule, quantity) {
        ("nonempty", _) if g.n() > 0 => Ok(1),
        ("edge", _) if m > 0 => Ok(3),
        ("tree-skeleton", Quantity::Phi) => skeleton(g).map(|s| s.size()).map_err(|_| na()),
        ("triangle-free-star-cutset-free", Quantity::Phi) => {
            let ok = m > 0 && g.is_connected() && g.is_triangle_free() && g.find_star_cutset().is_free();
            if ok {
                Ok(m - 1)
            } else {
                Err(na())
            }
        }
        ("triangle-free-edges", Quantity::Pol) if g.is_triangle_free() => Ok(m),
        ("exact", _) => {
            if g.n() > MAX_VERTICES {
                return Err(na());
            }
            let res = run_exact(g, quantity, &SearchConfig::default());
            match res {
                Some(r) if r.is_exact() => Ok(r.value),
                _ => Err(na()),
            }
        }
        ("nonempty" | "edge" | "tree-skeleton" | "triangle-free-star-cutset-free" | "triangle-free-edges", _) => {
            Err(na())
        }
        _ => Err(BoundError::UnknownRule(rule.to_string())),
    }
}

fn run_exact(g: &Graph, quantity: Quantity, cfg: &SearchConfig) -> Option<ExactResult> {
    match quantity {
        Quantity::Phi => exact_phi_reduced(g, cfg).ok(),
        Quantity::Pol => exact_pol(g, cfg).ok(),
    }
}

const PHI_RULES: [&str; 4] = ["nonempty", "edge", "tree-skeleton", "triangle-free-star-cutset-free"];
const POL_RULES: [&str; 3] = ["nonempty", "edge", "triangle-free-edges"];

/// Every applicable rule-based lower bound, excluding exhaustive search.
pub fn lower_bound(g: &Graph, quantity: Quantity) -> Vec<BoundCertificate> {
    let mut rules: Vec<String> = Vec::new();
    let base: &[&str] = match quantity {
        Quantity::Phi => &PHI_RULES,
        Quantity::Pol => &POL_RULES,
    };
    let reduced = !reduce(g).1.is_identity();
    for r in base {
        rules.push(r.to_string());
        if reduced {
            rules.push(format!("reduced:{r}"));
        }
    }
    if quantity == Quantity::Pol {
        for r in &PHI_RULES[2..] {
            rules.push(format!("from-phi:{r}"));
            if reduced {
                rules.push(format!("from-phi:reduced:{r}"));
            }
        }
    }
    rules
        .into_iter()
        .filter_map(|r| lower_rule(g, quantity, &r).ok().map(|v| BoundCertificate::lower(quantity, v, r)))
        .collect()
}

/// Smallest verified overlap representation among the available
/// constructions. `plane` enables the planar route.
pub fn best_upper(g: &Graph, plane: Option<&PlaneGraph>) -> Result<BoundCertificate, BoundError> {
    upper_bound(g, Quantity::Phi, plane)
}

/// Smallest verified pure overlap representation among the available
/// constructions.
pub fn pol_upper(g: &Graph, plane: Option<&PlaneGraph>) -> Result<BoundCertificate, BoundError> {
    upper_bound(g, Quantity::Pol, plane)
}

pub fn upper_bound(g: &Graph, quantity: Quantity, plane: Option<&PlaneGraph>) -> Result<BoundCertificate, BoundError> {
    if let Some(pg) = plane {
        if pg.graph() != g {
            return Err(BoundError::Construction("embedding does not match the graph".into()));
        }
    }
    let (rep, rule) = match quantity {
        Quantity::Phi => phi_upper(g, plane),
        Quantity::Pol => pure_upper(g, plane),
    }
    .ok_or_else(|| BoundError::Construction(format!("{} vertices", g.n())))?;
    let cert = BoundCertificate::upper(quantity, rep, rule);
    cert.recheck(g)?;
    Ok(cert)
}

/// Keeps the first smallest candidate.
#[derive(Default)]
struct Best(Option<(OverlapRep, String)>);

impl Best {
    fn offer(&mut self, rep: OverlapRep, rule: impl Into<String>) {
        if self.0.as_ref().is_none_or(|(b, _)| rep.size() < b.size()) {
            self.0 = Some((rep, rule.into()));
        }
    }
}

fn empty_rep() -> OverlapRep {
    OverlapRep::new(Vec::new()).expect("no sets")
}

/// Decomposition representation in which a vertex lying in fewer than two
/// parts also gets a private label. Always a pure representation.
pub fn padded_decomposition_rep(g: &Graph, f: &CliqueDecomposition) -> Option<OverlapRep> {
    f.validate(g).ok()?;
    let inc = f.incidence(g.n());
    if inc.iter().all(|&k| k >= 2) {
        return decomposition_rep(g, f).ok();
    }
    let mut sets = vec![LabelSet::new(); g.n()];
    for (i, p) in f.parts.iter().enumerate() {
        for &v in p {
            sets[v].insert(i as Label + 1);
        }
    }
    let mut next = f.len() as Label;
    for v in (0..g.n()).filter(|&v| inc[v] < 2) {
        next += 1;
        sets[v].insert(next);
    }
    OverlapRep::new(sets).ok()
}

type Candidate = Option<(OverlapRep, String)>;

fn components_rep(
    g: &Graph,
    plane: Option<&PlaneGraph>,
    solve: fn(&Graph, Option<&PlaneGraph>) -> Candidate,
) -> Candidate {
    let mut parts = Vec::new();
    let mut rules = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let sub_plane = plane.map(|p| p.induced(&comp));
        let (rep, rule) = solve(&sub, sub_plane.as_ref())?;
        rules.push(rule);
        parts.push((comp, rep));
    }
    Some((disjoint_union_rep(g.n(), &parts), format!("components[{}]", rules.join(" | "))))
}

fn phi_upper(g: &Graph, plane: Option<&PlaneGraph>) -> Candidate {
    let n = g.n();
    if n == 0 {
        return Some((empty_rep(), "empty".into()));
    }
    let (h, red) = reduce(g);
    if !red.is_identity() {
        let sub_plane = plane.map(|p| p.induced(&red.kept));
        let (rep, rule) = phi_upper(&h, sub_plane.as_ref())?;
        return Some((unreduce(&rep, &red).ok()?, format!("reduce>{rule}")));
    }
    let mut best = Best::default();
    if n == 1 {
        best.offer(OverlapRep::from_lists([[1]]).unwrap(), "single-vertex");
    }
    if n <= 5 {
        if let Ok((rep, rule)) = small_graph_rep(g) {
            best.offer(rep, format!("small({rule})"));
        }
    }
    if g.is_tree() {
        if let Ok(rep) = tree_overlap_rep(g) {
            best.offer(rep, "tree");
        }
    }
    if !g.is_connected() {
        if let Some((rep, rule)) = components_rep(g, plane, phi_upper) {
            best.offer(rep, rule);
        }
    }
    if let Some((u, v)) = default_edge(g) {
        if let Ok(rep) = edge_bound_rep(g, u, v) {
            best.offer(rep, "edge-bound");
        }
    }
    if g.is_complete() {
        best.offer(clique_rep(n), "clique");
    }
    offer_decompositions(g, &mut best);
    if let Some(&v) = g.leaves().first() {
        if g.edge_count() >= 2 {
            let rest_plane = plane.map(|p| p.remove_vertex(v));
            if let Some((rest, rule)) = phi_upper(&g.remove_vertex(v), rest_plane.as_ref()) {
                if let Ok(rep) = extend_leaf(&rest, g, v) {
                    best.offer(rep, format!("leaf>{rule}"));
                }
            }
        }
    }
    if let Some(pg) = plane.filter(|_| n >= 5) {
        if let Ok((rep, rule)) = planar_phi_upper(pg) {
            best.offer(rep, format!("planar>{rule}"));
        }
    }
    if let Some((rep, rule)) = pure_upper(g, plane) {
        best.offer(rep, format!("pure>{rule}"));
    }
    best.0
}

fn offer_decompositions(g: &Graph, best: &mut Best) {
    let tri = greedy_triangle_decomposition(g);
    if let Some(rep) = padded_decomposition_rep(g, &tri) {
        best.offer(rep, "triangle-decomposition");
    }
    if let Some(rep) = padded_decomposition_rep(g, &CliqueDecomposition::edges(g)) {
        best.offer(rep, "edge-decomposition");
    }
}

fn pure_upper(g: &Graph, plane: Option<&PlaneGraph>) -> Candidate {
    let n = g.n();
    if n == 0 {
        return Some((empty_rep(), "empty".into()));
    }
    let mut best = Best::default();
    if n <= 4 {
        if let Ok(r) = exact_pol(g, &SearchConfig::default()) {
            if r.status == SearchStatus::Exact {
                best.offer(r.witness.expect("exact results carry a witness"), "exact");
            }
        }
    }
    if !g.is_connected() {
        if let Some((rep, rule)) = components_rep(g, plane, pure_upper) {
            best.offer(rep, rule);
        }
    }
    if g.is_complete() {
        best.offer(clique_rep(n), "clique");
    }
    offer_decompositions(g, &mut best);
    if n >= 2 && g.is_connected() {
        let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
        if g.degree(v) <= 2 {
            let rest_plane = plane.map(|p| p.remove_vertex(v));
            if let Some((rest, rule)) = pure_upper(&g.remove_vertex(v), rest_plane.as_ref()) {
                if let Ok(rep) = extend_deg_le2(&rest, g, v) {
                    best.offer(rep, format!("delete>{rule}"));
                }
            }
        }
    }
    if let Some(pg) = plane.filter(|_| n >= 3) {
        if let Ok((rep, rule)) = planar_pol_upper(pg) {
            best.offer(rep, format!("planar>{rule}"));
        }
    }
    best.0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsOptions {
    /// Run exhaustive search when the graph (reduced, for φ) has at most this
    /// many vertices.
    pub exact_threshold: usize,
    pub search: SearchConfig,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions { exact_threshold: 6, search: SearchConfig::default() }
    }
}

/// All certificates for one quantity of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub quantity: Quantity,
    pub lower: Vec<BoundCertificate>,
    pub upper: BoundCertificate,
    /// Result of exhaustive search, if it was run.
    pub exact: Option<ExactResult>,
}

impl BoundsReport {
    /// The strongest lower certificate (first among equals).
    pub fn best_lower(&self) -> &BoundCertificate {
        self.lower
            .iter()
            .reduce(|a, b| if b.value > a.value { b } else { a })
            .expect("nonempty graphs always have a lower certificate")
    }

    /// The common value when the bounds meet.
    pub fn pinned(&self) -> Option<usize> {
        (self.best_lower().value == self.upper.value).then_some(self.upper.value)
    }
}

/// Lower certificates, the best upper certificate and, for small graphs, an
/// exhaustive search that may tighten both.
pub fn certify(
    g: &Graph,
    quantity: Quantity,
    plane: Option<&PlaneGraph>,
    opts: &BoundsOptions,
) -> Result<BoundsReport, BoundError> {
    let mut lower = lower_bound(g, quantity);
    if lower.is_empty() {
        lower.push(BoundCertificate::lower(quantity, 0, "trivial"));
    }
    let mut upper = upper_bound(g, quantity, plane)?;
    let size = match quantity {
        Quantity::Phi => reduce(g).0.n(),
        Quantity::Pol => g.n(),
    };
    let mut exact = None;
    if size <= opts.exact_threshold.min(MAX_VERTICES) {
        let mut cfg = opts.search.clone();
        cfg.t_max = cfg.t_max.min(upper.value);
        if let Some(res) = run_exact(g, quantity, &cfg) {
            if res.is_exact() {
                lower.push(BoundCertificate::lower(quantity, res.value, "exact"));
                if let Some(w) = res.witness.as_ref().filter(|w| w.size() < upper.value) {
                    upper = BoundCertificate::upper(quantity, w.clone(), "exact");
                }
            }
            exact = Some(res);
        }
    }
    let top = lower.iter().map(|c| c.value).max().unwrap_or(0);
    if top > upper.value {
        return Err(BoundError::Construction(format!(
            "lower bound {top} exceeds upper bound {} ({})",
            upper.value, upper.rule
        )));
    }
    Ok(BoundsReport { quantity, lower, upper, exact })
}
