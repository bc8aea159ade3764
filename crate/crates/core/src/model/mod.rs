//! Overlap representations and everything needed to check them.

mod io;
mod labelset;

pub use io::{parse_rep, to_text};
pub use labelset::{Label, LabelSet};

use crate::graph::Graph;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("vertex {0} is assigned the empty set")]
    EmptySet(usize),
    #[error("pair relation is undefined for empty sets")]
    EmptyOperand,
    #[error("label {label} is not in the set of vertex {vertex}")]
    LabelNotInSet { vertex: usize, label: Label },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRelation {
    Overlap,
    Disjoint,
    ProperSubset,
    ProperSuperset,
    Equal,
}

impl fmt::Display for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairRelation::Overlap => "overlap",
            PairRelation::Disjoint => "disjoint",
            PairRelation::ProperSubset => "proper-subset",
            PairRelation::ProperSuperset => "proper-superset",
            PairRelation::Equal => "equal",
        })
    }
}

pub fn pair_relation(a: &LabelSet, b: &LabelSet) -> Result<PairRelation, ModelError> {
    if a.is_empty() || b.is_empty() {
        return Err(ModelError::EmptyOperand);
    }
    Ok(relation(a, b))
}

fn relation(a: &LabelSet, b: &LabelSet) -> PairRelation {
    if !a.intersects(b) {
        PairRelation::Disjoint
    } else if a == b {
        PairRelation::Equal
    } else if a.is_subset(b) {
        PairRelation::ProperSubset
    } else if b.is_subset(a) {
        PairRelation::ProperSuperset
    } else {
        PairRelation::Overlap
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepKind {
    Overlap,
    PureOverlap,
    Intersection,
}

impl RepKind {
    /// Whether a pair with relation `rel` is consistent with `adjacent`.
    pub fn admits(self, adjacent: bool, rel: PairRelation) -> bool {
        match self {
            RepKind::Overlap => adjacent == (rel == PairRelation::Overlap),
            RepKind::Intersection => adjacent == (rel != PairRelation::Disjoint),
            RepKind::PureOverlap => {
                if adjacent {
                    rel == PairRelation::Overlap
                } else {
                    rel == PairRelation::Disjoint
                }
            }
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Overlap => "overlap",
            RepKind::PureOverlap => "pure",
            RepKind::Intersection => "intersection",
        })
    }
}

impl std::str::FromStr for RepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "overlap" => Ok(RepKind::Overlap),
            "pure" => Ok(RepKind::PureOverlap),
            "intersection" => Ok(RepKind::Intersection),
            _ => Err(format!("unknown representation kind `{s}` (overlap, pure, intersection)")),
        }
    }
}

/// The two invariants bounded and computed here: the overlap number φ and
/// the pure overlap number Φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    Phi,
    Pol,
}

impl Quantity {
    /// The representation kind whose minimum size the quantity is.
    pub fn kind(self) -> RepKind {
        match self {
            Quantity::Phi => RepKind::Overlap,
            Quantity::Pol => RepKind::PureOverlap,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Phi => "phi",
            Quantity::Pol => "pol",
        })
    }
}

impl std::str::FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phi" => Ok(Quantity::Phi),
            "pol" => Ok(Quantity::Pol),
            _ => Err(format!("unknown quantity `{s}` (phi, pol)")),
        }
    }
}

/// A nonempty label set for each vertex. Labels are always `1..=t` and
/// numbered by first appearance (vertex order, then increasing old label).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverlapRep {
    t: usize,
    sets: Vec<LabelSet>,
}

impl OverlapRep {
    pub fn new(sets: Vec<LabelSet>) -> Result<Self, ModelError> {
        Self::with_relabeling(sets).map(|(rep, _)| rep)
    }

    /// Like [`OverlapRep::new`], also returning the old → new label map.
    pub fn with_relabeling(sets: Vec<LabelSet>) -> Result<(Self, HashMap<Label, Label>), ModelError> {
        if let Some(v) = sets.iter().position(LabelSet::is_empty) {
            return Err(ModelError::EmptySet(v));
        }
        let mut map: HashMap<Label, Label> = HashMap::new();
        let mut next = 0;
        let sets: Vec<LabelSet> = sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|l| {
                        *map.entry(l).or_insert_with(|| {
                            next += 1;
                            next
                        })
                    })
                    .collect()
            })
            .collect();
        Ok((OverlapRep { t: next as usize, sets }, map))
    }

    /// Convenience for literals such as `[[1, 2], [2, 3]]`.
    pub fn from_lists<I, J>(lists: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = Label>,
    {
        OverlapRep::new(lists.into_iter().map(|l| l.into_iter().collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// Number of labels in use.
    pub fn size(&self) -> usize {
        self.t
    }

    pub fn set(&self, v: usize) -> &LabelSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[LabelSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<LabelSet> {
        self.sets
    }

    pub fn union(&self) -> LabelSet {
        let mut u = LabelSet::new();
        for s in &self.sets {
            u.union_with(s);
        }
        u
    }

    /// Restriction to `keep`; vertex `i` of the result is `keep[i]`.
    pub fn restrict(&self, keep: &[usize]) -> OverlapRep {
        OverlapRep::new(keep.iter().map(|&v| self.sets[v].clone()).collect())
            .expect("restriction keeps nonempty sets")
    }

    /// `rep − S`: removes `s` from every set.
    pub fn minus(&self, s: &LabelSet) -> Result<OverlapRep, ModelError> {
        OverlapRep::new(self.sets.iter().map(|x| x.difference(s)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub relation: PairRelation,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let adj = if self.adjacent { "adjacent" } else { "nonadjacent" };
        write!(f, "pair ({}, {}): {adj} but sets are {}", self.u, self.v, self.relation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("graph has {vertices} vertices but the representation assigns {assigned}")]
    SizeMismatch { vertices: usize, assigned: usize },
    #[error("{} violating pair(s); first: {}", .0.len(), .0[0])]
    Violations(Vec<Violation>),
}

pub fn verify(g: &Graph, rep: &OverlapRep, kind: RepKind) -> Result<(), VerifyError> {
    if g.n() != rep.n() {
        return Err(VerifyError::SizeMismatch { vertices: g.n(), assigned: rep.n() });
    }
    let mut bad = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let rel = relation(&rep.sets[u], &rep.sets[v]);
            let adjacent = g.has_edge(u, v);
            if !kind.admits(adjacent, rel) {
                bad.push(Violation { u, v, adjacent, relation: rel });
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(VerifyError::Violations(bad))
    }
}

/// Whether removing `s` from every set keeps an overlap representation,
/// judged edge by edge. Emptiness is reported by [`deletion_creates_empty`].
pub fn deletable(g: &Graph, rep: &OverlapRep, s: &LabelSet) -> bool {
    g.edges().all(|(u, v)| {
        let (a, b) = (rep.set(u), rep.set(v));
        !a.intersection(b).is_subset(s) && !a.difference(b).is_subset(s) && !b.difference(a).is_subset(s)
    })
}

pub fn deletion_creates_empty(rep: &OverlapRep, s: &LabelSet) -> bool {
    rep.sets().iter().any(|x| x.is_subset(s))
}

/// Every set contains all of `s` or none of it.
pub fn is_uniform(rep: &OverlapRep, s: &LabelSet) -> bool {
    rep.sets().iter().all(|x| s.is_subset(x) || !s.intersects(x))
}

pub fn minimal_vertices(rep: &OverlapRep) -> Vec<usize> {
    (0..rep.n())
        .filter(|&v| !rep.sets().iter().any(|x| x.is_proper_subset(rep.set(v))))
        .collect()
}

pub fn is_a_minimal(rep: &OverlapRep, v: usize, a: Label) -> Result<bool, ModelError> {
    let fv = rep.set(v);
    if !fv.contains(a) {
        return Err(ModelError::LabelNotInSet { vertex: v, label: a });
    }
    Ok(!rep.sets().iter().any(|x| x.contains(a) && x.is_proper_subset(fv)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentCounterexample {
    pub vertex: usize,
    pub component: Vec<usize>,
}

/// For each `v` and each nontrivial component `H` of `G − N[v]`: if `f(v)`
/// contains the set of some vertex of `H`, it properly contains all of them.
///
/// The stronger "contains all or is disjoint from all" reading fails on valid
/// representations where `f(v)` sits inside a set of `H` (the caterpillar
/// representation of `P_4` is the smallest example), so it is not checked.
pub fn containment_property_check(g: &Graph, rep: &OverlapRep) -> Result<(), ContainmentCounterexample> {
    for v in 0..g.n() {
        let mut removed = vec![false; g.n()];
        for u in g.closed_neighborhood(v) {
            removed[u] = true;
        }
        for comp in g.components_avoiding(&removed) {
            if comp.len() < 2 {
                continue;
            }
            let fv = rep.set(v);
            let some_inside = comp.iter().any(|&h| rep.set(h).is_subset(fv));
            let all_inside = comp.iter().all(|&h| rep.set(h).is_proper_subset(fv));
            if some_inside && !all_inside {
                return Err(ContainmentCounterexample { vertex: v, component: comp });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rep(lists: &[&[Label]]) -> OverlapRep {
        OverlapRep::from_lists(lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    #[test]
    fn relations() {
        let r = |a: &[Label], b: &[Label]| {
            pair_relation(&a.iter().copied().collect(), &b.iter().copied().collect()).unwrap()
        };
        assert_eq!(r(&[1, 2], &[2, 3]), PairRelation::Overlap);
        assert_eq!(r(&[1, 2], &[1, 2, 3]), PairRelation::ProperSubset);
        assert_eq!(r(&[1, 2, 3], &[1, 2]), PairRelation::ProperSuperset);
        assert_eq!(r(&[1, 2], &[3, 4]), PairRelation::Disjoint);
        assert_eq!(r(&[1, 2], &[1, 2]), PairRelation::Equal);
        assert!(pair_relation(&LabelSet::new(), &LabelSet::from([1])).is_err());
    }

    #[test]
    fn normalization() {
        let r = rep(&[&[7, 3], &[3, 9]]);
        assert_eq!(r.size(), 3);
        assert_eq!(r.set(0), &LabelSet::from([1, 2]));
        assert_eq!(r.set(1), &LabelSet::from([1, 3]));
        assert_eq!(OverlapRep::from_lists([vec![1], vec![]]), Err(ModelError::EmptySet(1)));
    }

    #[test]
    fn k5_and_k4_table_entries() {
        let k5 = rep(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1], &[5, 1, 2]]);
        assert!(verify(&Graph::complete(5), &k5, RepKind::Overlap).is_ok());
        assert!(verify(&Graph::complete(5), &k5, RepKind::PureOverlap).is_ok());
        let k4 = rep(&[&[1, 2, 3], &[4, 1], &[4, 2], &[4, 3]]);
        assert!(verify(&Graph::complete(4), &k4, RepKind::Overlap).is_ok());
    }

    #[test]
    fn p3_violation_reported() {
        let p3 = Graph::path(3);
        assert!(verify(&p3, &rep(&[&[1, 2], &[2, 3], &[1, 2]]), RepKind::Overlap).is_ok());
        assert!(verify(&p3, &rep(&[&[1, 2], &[2, 3], &[3, 4]]), RepKind::Overlap).is_ok());
        let bad = rep(&[&[1, 2], &[2, 3], &[2, 3, 4]]);
        match verify(&p3, &bad, RepKind::Overlap) {
            Err(VerifyError::Violations(v)) => {
                assert!(v.iter().any(|x| (x.u, x.v, x.relation) == (1, 2, PairRelation::ProperSubset)));
                assert!(v.iter().any(|x| (x.u, x.v, x.relation) == (0, 2, PairRelation::Overlap)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            verify(&Graph::path(4), &bad, RepKind::Overlap),
            Err(VerifyError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn deletability_examples() {
        let k2 = Graph::path(2);
        let r = rep(&[&[1, 2], &[2, 3]]);
        assert!(deletable(&k2, &r, &LabelSet::new()));
        assert!(!deletable(&k2, &r, &LabelSet::from([2])));
        // caterpillar rep of P_3: {a1 a2}, {a2 a3}? no: v3 is the last spine vertex, {a1 a2}
        let p3 = rep(&[&[1, 2], &[2, 3], &[1, 2]]);
        assert!(verify(&Graph::path(3), &p3, RepKind::Overlap).is_ok());
        assert!(!deletable(&Graph::path(3), &p3, &LabelSet::from([1])));
    }

    #[test]
    fn minimality() {
        let r = rep(&[&[1, 2], &[2, 3], &[3, 4], &[1, 2, 3]]);
        assert_eq!(minimal_vertices(&r), vec![0, 1, 2]);
        assert!(is_a_minimal(&r, 0, 1).unwrap());
        assert!(!is_a_minimal(&r, 3, 1).unwrap());
        assert!(is_a_minimal(&r, 0, 3).is_err());
        let all_overlap = rep(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(minimal_vertices(&all_overlap), vec![0, 1, 2]);
    }

    #[test]
    fn containment_on_p4() {
        // f(0) lies inside f(3), which is neither "contains all" nor "disjoint"
        let g = Graph::path(4);
        let good = rep(&[&[1, 2], &[2, 3], &[3, 4], &[1, 2, 3]]);
        assert!(verify(&g, &good, RepKind::Overlap).is_ok());
        assert!(containment_property_check(&g, &good).is_ok());
        // invalid rep: f(0) contains f(2) but not f(3)
        let g = Graph::from_edges(4, [(2, 3)]).unwrap();
        let bad = rep(&[&[1, 2, 3], &[9], &[1, 2], &[2, 4]]);
        assert_eq!(
            containment_property_check(&g, &bad),
            Err(ContainmentCounterexample { vertex: 0, component: vec![2, 3] })
        );
    }

    fn arb_rep(n: usize, t: u32) -> impl Strategy<Value = Vec<LabelSet>> {
        proptest::collection::vec(proptest::collection::btree_set(1..=t, 1..=t as usize), n)
            .prop_map(|v| v.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn graph_of(sets: &[LabelSet], kind: RepKind) -> Graph {
        let mut g = Graph::new(sets.len());
        for u in 0..sets.len() {
            for v in u + 1..sets.len() {
                let rel = relation(&sets[u], &sets[v]);
                if kind.admits(true, rel) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    proptest! {
        #[test]
        fn relation_exhaustive(a in arb_rep(2, 6)) {
            let rel = pair_relation(&a[0], &a[1]).unwrap();
            let flip = pair_relation(&a[1], &a[0]).unwrap();
            let expect = match rel {
                PairRelation::ProperSubset => PairRelation::ProperSuperset,
                PairRelation::ProperSuperset => PairRelation::ProperSubset,
                r => r,
            };
            prop_assert_eq!(flip, expect);
        }

        #[test]
        fn deletable_implies_still_valid(sets in arb_rep(5, 6), s in proptest::collection::btree_set(1u32..=6, 0..4)) {
            let r = OverlapRep::new(sets).unwrap();
            let g = graph_of(r.sets(), RepKind::Overlap);
            prop_assert!(verify(&g, &r, RepKind::Overlap).is_ok());
            let s: LabelSet = s.into_iter().collect();
            if deletable(&g, &r, &s) && !deletion_creates_empty(&r, &s) {
                let smaller = r.minus(&s).unwrap();
                prop_assert!(verify(&g, &smaller, RepKind::Overlap).is_ok());
            }
            prop_assert!(containment_property_check(&g, &r).is_ok());
        }

        #[test]
        fn pure_implies_other_kinds(sets in arb_rep(5, 7)) {
            let r = OverlapRep::new(sets).unwrap();
            let g = graph_of(r.sets(), RepKind::Overlap);
            if verify(&g, &r, RepKind::PureOverlap).is_ok() {
                prop_assert!(verify(&g, &r, RepKind::Overlap).is_ok());
                prop_assert!(verify(&g, &r, RepKind::Intersection).is_ok());
            }
            prop_assert_eq!(r.size(), r.union().len());
        }
    }
}
