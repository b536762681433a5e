//! Small helpers shared by the unit tests.

use rand::Rng;

use crate::graph::Graph;

/// Decodes the graph on `n` vertices whose upper-triangle bit `k` (pairs in
/// lexicographic order) is bit `k` of `mask`.
pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
