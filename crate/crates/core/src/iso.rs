//! Graph isomorphism at desk scale: backtracking matcher, cheap invariant
//! signatures for bucketing, a dedup container, and enumeration of
//! isomorphism-class representatives by vertex extension.

use std::collections::HashMap;

use crate::graph::Graph;

/// Applies the permutation `perm` (old label -> new label) to `g`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(perm.len(), g.n());
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let mut h = Graph::empty(g.n());
    for (u, v) in edges {
        h.add_edge(u.min(v), u.max(v));
    }
    h
}

/// An isomorphism-invariant signature; equal graphs bucket together, unequal
/// buckets are certainly non-isomorphic.
pub fn signature(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut codes: Vec<u64> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let mut h: u64 = 1469598103934665603;
            h = h.wrapping_mul(1099511628211) ^ g.degree(v) as u64;
            for d in nd {
                h = h.wrapping_mul(1099511628211) ^ d as u64;
            }
            h
        })
        .collect();
    codes.sort_unstable();
    let mut sig = vec![n as u64, g.edge_count() as u64];
    sig.extend(codes);
    sig
}

/// Backtracking isomorphism test. Fast at the vertex counts used here
/// (n up to a dozen or so).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if signature(g) != signature(h) {
        return false;
    }
    let n = g.n();
    // Map g-vertices in decreasing-degree order; ties broken by label.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (usize::MAX - g.degree(v), v));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_mapping(g, h, &order, 0, &mut image, &mut used)
}

fn extend_mapping(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    i: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    'cand: for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        for &p in &order[..i] {
            if g.has_edge(v, p) != h.has_edge(w, image[p]) {
                continue 'cand;
            }
        }
        image[v] = w;
        used[w] = true;
        if extend_mapping(g, h, order, i + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// A set of graphs modulo isomorphism.
#[derive(Debug, Default)]
pub struct GraphSet {
    buckets: HashMap<Vec<u64>, Vec<Graph>>,
    len: usize,
}

impl GraphSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `g` unless an isomorphic copy is already present; returns
    /// whether it was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(signature(&g)).or_default();
        if bucket.iter().any(|r| is_isomorphic(r, &g)) {
            return false;
        }
        bucket.push(g);
        self.len += 1;
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.buckets
            .get(&signature(g))
            .is_some_and(|b| b.iter().any(|r| is_isomorphic(r, g)))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.buckets.values().flatten()
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.buckets.into_values().flatten().collect()
    }
}

/// Representatives of every isomorphism class of graphs on exactly `n`
/// vertices, built by one-vertex extensions of the classes on `n - 1`.
pub fn graph_class_representatives(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut reps = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut set = GraphSet::new();
        for base in &reps {
            for mask in 0u64..(1 << (k - 1)) {
                let mut g = Graph::empty(k);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        g.add_edge(v, k - 1);
                    }
                }
                set.insert(g);
            }
        }
        reps = set.into_vec();
    }
    reps
}
