//! Shared corpus generators and enumerators for the integration suites.
//! Each test binary pulls in the subset it needs.
#![allow(dead_code)]

use rand::Rng;

use po_core::graph::Graph;
use po_core::iso::{graph_class_representatives, GraphSet};
use po_core::orientation::Orientation;
use po_core::recognition::recognize;

/// All labeled graphs on exactly `n` vertices (n <= 7).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs <= 21);
    (0u32..(1 << pairs)).map(move |mask| {
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
    })
}

/// Isomorphism-class representatives of co-bipartite graphs on exactly `n`
/// vertices, generated as complements of bipartite graphs.
pub fn cobipartite_representatives(n: usize) -> Vec<Graph> {
    graph_class_representatives(n)
        .into_iter()
        .filter(|g| g.is_bipartite())
        .map(|g| g.complement())
        .collect()
}

/// All cographs on exactly `n` vertices up to isomorphism, built by unions
/// and joins of smaller cographs (binary splits generate every cotree).
pub fn cograph_representatives(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![], vec![Graph::complete(1)]];
    for n in 2..=max_n {
        let mut set = GraphSet::new();
        for a in 1..n {
            let b = n - a;
            if a > b {
                break;
            }
            for g1 in &levels[a] {
                for g2 in &levels[b] {
                    set.insert(g1.disjoint_union(g2));
                    set.insert(g1.join(g2));
                }
            }
        }
        levels.push(set.into_vec());
    }
    levels
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

/// Random graph with a 1-perfect witness, by rejection sampling.
pub fn random_one_po(rng: &mut impl Rng, max_n: usize) -> (Graph, Orientation) {
    loop {
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(rng, n, 0.4);
        if let Some(d) = recognize(&g) {
            return (g, d);
        }
    }
}

/// Random connected chordal graph: each new vertex attaches to a clique
/// inside an earlier vertex's closed neighborhood (a reversed perfect
/// elimination ordering).
pub fn random_chordal(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut candidates: Vec<usize> = g.neighbors(anchor).filter(|&u| u < v).collect();
        // Shuffle-ish: rotate by a random offset, then greedily keep a clique.
        if !candidates.is_empty() {
            let cut = rng.gen_range(0..candidates.len());
            candidates.rotate_left(cut);
        }
        for u in candidates {
            if rng.gen_bool(0.6) && clique.iter().all(|&x| g.has_edge(x, u)) {
                clique.push(u);
            }
        }
        for &u in &clique {
            g.add_edge(u, v);
        }
    }
    g
}

/// Complement of a disjoint union of random paths on `n` vertices total.
pub fn random_co_linear_forest(rng: &mut impl Rng, n: usize) -> Graph {
    let mut forest = Graph::empty(n);
    let mut v = 0;
    while v < n {
        let len = rng.gen_range(1..=n - v);
        for i in 1..len {
            forest.add_edge(v + i - 1, v + i);
        }
        v += len;
    }
    forest.complement()
}

/// Random co-bipartite graph with a 1-perfect witness.
pub fn random_cobipartite_one_po(rng: &mut impl Rng, max_side: usize) -> (Graph, Orientation) {
    loop {
        let a = rng.gen_range(1..=max_side);
        let b = rng.gen_range(1..=max_side);
        let mut bip = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                if rng.gen_bool(0.5) {
                    bip.add_edge(u, v);
                }
            }
        }
        let g = bip.complement();
        if let Some(d) = recognize(&g) {
            return (g, d);
        }
    }
}
