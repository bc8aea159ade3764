//! Workloads shared by the benchmarks in `benches/`.

use overlap_core::Graph;

/// A deterministic tree on `n` vertices: vertex `i` hangs from a
/// pseudo-random earlier vertex, which gives a mix of long paths and bushy
/// parts.
pub fn scrambled_tree(n: usize) -> Graph {
    let mut g = Graph::new(n);
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for i in 1..n {
        state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        let parent = ((state >> 33) as usize) % i;
        g.add_edge(parent, i).expect("fresh edge");
    }
    g
}

#[cfg(test)]
mod tests {
    #[test]
    fn is_a_tree() {
        for n in [1, 2, 10, 500] {
            let t = super::scrambled_tree(n);
            assert!(t.is_tree());
            assert_eq!(t.n(), n);
        }
    }
}
