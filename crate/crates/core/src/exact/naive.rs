use crate::graph::Graph;
use crate::model::{pair_relation, verify, LabelSet, OverlapRep, Quantity};

/// Reference enumerator for tiny graphs. Tries every assignment of nonempty
/// subsets of `1..=t` in vertex-id order for `t = 0, 1, ...`, rejecting a
/// partial assignment only when one of its pairs is already infeasible. It
/// shares nothing with the optimized solver except the verifier.
///
/// Returns `None` if no representation uses at most `t_max` labels.
pub fn naive_exact(g: &Graph, quantity: Quantity, t_max: usize) -> Option<(usize, OverlapRep)> {
    for t in 0..=t_max {
        let subsets: Vec<LabelSet> = (1u32..1 << t)
            .map(|m| (0..t as u32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect())
            .collect();
        let mut chosen = Vec::with_capacity(g.n());
        if extend(g, quantity, &subsets, &mut chosen) {
            let rep = OverlapRep::new(chosen).expect("subsets are nonempty");
            assert!(verify(g, &rep, quantity.kind()).is_ok(), "naive search produced an invalid representation");
            return Some((rep.size(), rep));
        }
    }
    None
}

fn extend(g: &Graph, quantity: Quantity, subsets: &[LabelSet], chosen: &mut Vec<LabelSet>) -> bool {
    let v = chosen.len();
    if v == g.n() {
        return true;
    }
    for s in subsets {
        let ok = chosen.iter().enumerate().all(|(u, other)| {
            let rel = pair_relation(s, other).expect("nonempty sets");
            quantity.kind().admits(g.has_edge(u, v), rel)
        });
        if ok {
            chosen.push(s.clone());
            if extend(g, quantity, subsets, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
