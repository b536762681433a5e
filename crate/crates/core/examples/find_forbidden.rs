//! Exhaustive derivation of the bundled catalog data.
//!
//! Two sweeps:
//!
//! 1. `small`: every graph on up to 8 vertices (isomorphism-class
//!    representatives) is tested for being a minimal forbidden induced minor
//!    of the 1-p.o. class (itself not 1-p.o., every one-vertex deletion and
//!    every one-edge contraction 1-p.o.).
//!
//! 2. `cobip`: every co-bipartite graph on up to 12 vertices with a
//!    *connected* complement, enumerated level by level as bipartite
//!    complements. A minimal forbidden co-bipartite graph always has a
//!    connected complement: were the complement disconnected, the graph would
//!    be a join of two co-bipartite graphs, the join characterization would
//!    force one operand to be non-1-p.o., and that operand would be a proper
//!    induced subgraph contradicting deletion-minimality. Every proper
//!    induced subgraph of a minimal forbidden graph is 1-p.o., so the level
//!    sets only need to carry "good" graphs (complement 1-p.o.), which keeps
//!    the enumeration tiny.
//!
//! Prints every minimal forbidden graph found, with complement structure and
//! minimum edge-clique-cover size, as edge-list blocks ready for
//! `data/forbidden_catalog.dat`.

use std::collections::BTreeSet;

use po_core::graph::Graph;
use po_core::iso::{graph_class_representatives, GraphSet};
use po_core::recognition::recognize;

fn is_minimal_forbidden_fast(g: &Graph) -> bool {
    if recognize(g).is_some() {
        return false;
    }
    for v in 0..g.n() {
        if recognize(&g.delete_vertex(v).unwrap()).is_none() {
            return false;
        }
    }
    for (u, v) in g.edges() {
        if recognize(&g.contract_edge(u, v).unwrap()).is_none() {
            return false;
        }
    }
    true
}

fn describe(tag: &str, g: &Graph) {
    let comp = g.complement();
    let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    let mut cdegs: Vec<usize> = (0..comp.n()).map(|v| comp.degree(v)).collect();
    cdegs.sort_unstable();
    println!(
        "--- {tag}: n={} m={} degrees={degs:?} | complement: m={} degrees={cdegs:?} \
         connected={} tree={} triangle-free={}",
        g.n(),
        g.edge_count(),
        comp.edge_count(),
        comp.is_connected(),
        comp.is_connected() && comp.edge_count() + 1 == comp.n(),
        !g.has_triangle(),
    );
    println!("    complement edges: {:?}", comp.edges());
    if let Some(size) = min_edge_clique_cover_at_most(g, 9) {
        println!("    min edge clique cover <= 9: yes ({size})");
    } else {
        println!("    min edge clique cover <= 9: no");
    }
    println!("[{tag}]");
    print!("{}", po_core::format::write_edge_list(g));
}

/// Exact minimum edge clique cover, bounded: returns the optimum if it is at
/// most `cap`, else None. Branch and bound over the lexicographically first
/// uncovered edge, trying only maximal cliques containing it.
fn min_edge_clique_cover_at_most(g: &Graph, cap: usize) -> Option<usize> {
    let edges = g.edges();
    if edges.is_empty() {
        return Some(0);
    }
    let mut best: Option<usize> = None;
    let mut chosen: Vec<BTreeSet<usize>> = Vec::new();
    cover_branch(g, &edges, &mut chosen, cap, &mut best);
    best
}

fn cover_branch(
    g: &Graph,
    edges: &[(usize, usize)],
    chosen: &mut Vec<BTreeSet<usize>>,
    cap: usize,
    best: &mut Option<usize>,
) {
    let bound = best.map_or(cap, |b| b.saturating_sub(1).min(cap));
    if chosen.len() > bound {
        return;
    }
    let uncovered = edges
        .iter()
        .find(|&&(u, v)| !chosen.iter().any(|c| c.contains(&u) && c.contains(&v)));
    let Some(&(u, v)) = uncovered else {
        let size = chosen.len();
        if best.is_none_or(|b| size < b) {
            *best = Some(size);
        }
        return;
    };
    if chosen.len() == bound {
        return;
    }
    for clique in maximal_cliques_containing(g, u, v) {
        chosen.push(clique);
        cover_branch(g, edges, chosen, cap, best);
        chosen.pop();
    }
}

fn maximal_cliques_containing(g: &Graph, u: usize, v: usize) -> Vec<BTreeSet<usize>> {
    let base: BTreeSet<usize> = [u, v].into_iter().collect();
    let candidates: Vec<usize> = g
        .vertices()
        .filter(|&x| x != u && x != v && g.has_edge(x, u) && g.has_edge(x, v))
        .collect();
    let mut out = Vec::new();
    extend_clique(g, base, &candidates, &mut out);
    out
}

fn extend_clique(
    g: &Graph,
    current: BTreeSet<usize>,
    candidates: &[usize],
    out: &mut Vec<BTreeSet<usize>>,
) {
    let extendable: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&x| current.iter().all(|&y| g.has_edge(x, y)))
        .collect();
    if extendable.is_empty() {
        out.push(current);
        return;
    }
    for (i, &x) in extendable.iter().enumerate() {
        let mut next = current.clone();
        next.insert(x);
        extend_clique(g, next, &extendable[i + 1..], out);
    }
}

fn sweep_small() {
    println!("== all graphs up to 8 vertices ==");
    for n in 1..=8usize {
        let reps = graph_class_representatives(n);
        let mut found = Vec::new();
        for g in &reps {
            if is_minimal_forbidden_fast(g) {
                found.push(g.clone());
            }
        }
        println!(
            "n = {n}: {} classes, {} minimal forbidden",
            reps.len(),
            found.len()
        );
        for (i, g) in found.iter().enumerate() {
            describe(&format!("small-{n}-{i}"), g);
        }
    }
}

fn sweep_cobipartite(max_n: usize) {
    println!("== co-bipartite graphs with connected complements, up to {max_n} vertices ==");
    // Level sets: connected bipartite graphs whose complements are 1-p.o.
    let mut good = vec![Graph::complete(1)];
    for n in 2..=max_n {
        let mut next_good = GraphSet::new();
        let mut minimal = GraphSet::new();
        for h in &good {
            let coloring = h
                .two_coloring()
                .expect("level sets hold bipartite graphs only");
            let side0: Vec<usize> = (0..h.n()).filter(|&v| !coloring[v]).collect();
            let side1: Vec<usize> = (0..h.n()).filter(|&v| coloring[v]).collect();
            for side in [&side0, &side1] {
                if side.is_empty() {
                    continue;
                }
                for mask in 1u64..(1 << side.len()) {
                    let mut ext = Graph::empty(h.n() + 1);
                    for (u, v) in h.edges() {
                        ext.add_edge(u, v);
                    }
                    for (i, &v) in side.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            ext.add_edge(v, h.n());
                        }
                    }
                    let comp = ext.complement();
                    if recognize(&comp).is_some() {
                        next_good.insert(ext);
                    } else if is_minimal_forbidden_fast(&comp) {
                        minimal.insert(ext);
                    }
                }
            }
        }
        let mut minimal: Vec<Graph> = minimal.into_vec();
        minimal.sort_by_key(|g| (g.edge_count(), g.edges()));
        println!(
            "n = {n}: good = {}, minimal forbidden = {}",
            next_good.len(),
            minimal.len()
        );
        for (i, h) in minimal.iter().enumerate() {
            describe(&format!("cobip-{n}-{i}"), &h.complement());
        }
        good = next_good.into_vec();
        good.sort_by_key(|g| g.edges());
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mode = args.first().map(String::as_str).unwrap_or("all");
    let max_n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    match mode {
        "small" => sweep_small(),
        "cobip" => sweep_cobipartite(max_n),
        _ => {
            sweep_small();
            sweep_cobipartite(max_n);
        }
    }
}
