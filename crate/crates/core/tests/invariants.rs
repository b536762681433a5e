//! Cross-module invariants at desk scale, exhaustive where stated.

mod common;

use rand::SeedableRng;

use po_core::catalog::{self, MinorGuard};
use po_core::cover::{self, CoverMode};
use po_core::graph::Graph;
use po_core::iso::{graph_class_representatives, relabel};
use po_core::oracle;
use po_core::orientation::Orientation;
use po_core::recognition::recognize;
use po_core::transforms;

/// Brute-force presence agrees with emptiness of the full enumeration, for
/// every labeled graph with up to 6 vertices.
#[test]
fn oracle_witness_iff_enumeration_nonempty() {
    for n in 0..=6 {
        for g in common::labeled_graphs(n) {
            let first = oracle::is_one_po_bruteforce(&g, 24).unwrap();
            let all = oracle::all_one_perfect_orientations(&g, 24).unwrap();
            assert_eq!(first.is_some(), !all.is_empty());
            if let Some(d) = first {
                assert_eq!(
                    d.forward_bits(),
                    all[0].forward_bits(),
                    "first witness is the enumeration head"
                );
            }
        }
    }
}

/// 1-perfectness is invariant under relabeling a graph and its orientation
/// consistently.
#[test]
fn one_perfect_is_isomorphism_invariant() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(31337);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        let g = common::random_graph(&mut rng, n, 0.5);
        let m = g.edge_count();
        let forward: Vec<bool> = (0..m).map(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
        let d = Orientation::new(g.clone(), forward);

        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rand::Rng::gen_range(&mut rng, 0..=i));
        }
        let h = relabel(&g, &perm);
        let mapped_arcs: Vec<(usize, usize)> = d
            .arcs()
            .iter()
            .map(|&(t, hd)| (perm[t], perm[hd]))
            .collect();
        let d2 = Orientation::from_arcs(h, &mapped_arcs).unwrap();
        assert_eq!(d.is_one_perfect(), d2.is_one_perfect());
    }
}

/// The full certificate equivalence on every labeled graph with up to 6
/// vertices: recognition, an exclusive-valid cover, and an inclusive-valid
/// cover all exist together (constructively from witnesses; refutation by
/// recognition absence refutes both cover forms through the equivalence).
#[test]
fn cover_equivalence_exhaustive_n6() {
    for n in 0..=6 {
        for g in common::labeled_graphs(n) {
            match recognize(&g) {
                Some(d) => {
                    let cov = cover::cover_from_orientation(&d).unwrap();
                    assert_eq!(
                        cover::validate_cover(&g, &cov, CoverMode::Exclusive),
                        Ok(true)
                    );
                    assert_eq!(
                        cover::validate_cover(&g, &cov, CoverMode::Inclusive),
                        Ok(true)
                    );
                    let back = cover::orientation_from_cover(&g, &cov).unwrap();
                    assert!(back.is_one_perfect());
                }
                None => {
                    // No 1-perfect orientation; were any valid cover to
                    // exist, orientation_from_cover would build one.
                    assert!(
                        oracle::is_one_po_bruteforce(&g, 24).unwrap().is_none(),
                        "oracle must agree with recognition"
                    );
                }
            }
        }
    }
}

/// Independent-system duality on every labeled graph with up to 6 vertices.
#[test]
fn independent_system_duality_exhaustive_n6() {
    for n in 0..=6 {
        for g in common::labeled_graphs(n) {
            let sys = cover::independent_system_for_complement(&g);
            assert_eq!(sys.is_some(), recognize(&g.complement()).is_some());
            if let Some(sys) = sys {
                assert!(cover::validate_independent_system(&g, &sys));
            }
        }
    }
}

/// Orientation-transfer transforms hold on every 1-perfect orientation of
/// every labeled graph with up to 5 vertices.
#[test]
fn transforms_on_all_witnesses_n5() {
    for n in 1..=5 {
        for g in common::labeled_graphs(n) {
            for d in oracle::one_perfect_orientations(&g, 24).unwrap() {
                assert!(transforms::orient_add_universal(&d)
                    .unwrap()
                    .is_one_perfect());
                for w in 0..n {
                    assert!(transforms::orient_add_true_twin(&d, w)
                        .unwrap()
                        .is_one_perfect());
                }
                assert!(transforms::orient_add_simplicial(&d, &[])
                    .unwrap()
                    .is_one_perfect());
                for v in 0..n {
                    assert!(transforms::orient_add_simplicial(&d, &[v])
                        .unwrap()
                        .is_one_perfect());
                }
                assert!(transforms::orient_disjoint_union(&d, &d)
                    .unwrap()
                    .is_one_perfect());
                for e in g.edges() {
                    assert!(transforms::orient_contract_edge(&d, e)
                        .unwrap()
                        .is_one_perfect());
                }
            }
        }
    }
}

/// Generated family members up to k = 5 fail recognition and are minimal.
#[test]
fn generated_families_minimal_up_to_k5() {
    for k in 3..=5 {
        let g = catalog::gen_f3(k).unwrap();
        assert!(
            catalog::verify_minimal_forbidden(&g).is_minimal_forbidden(),
            "F3({k})"
        );
    }
    for k in 1..=5 {
        let g = catalog::gen_f4(k).unwrap();
        assert!(
            catalog::verify_minimal_forbidden(&g).is_minimal_forbidden(),
            "F4({k})"
        );
    }
}

/// Soundness of the forbidden list: no 1-p.o. graph contains an in-guard
/// catalog member as an induced minor. Hosts are all graph classes on up to
/// 8 vertices; patterns are the catalog members within the default pattern
/// guard (K_2,3, F1, F3(3)).
#[test]
fn no_one_po_graph_contains_forbidden_minor() {
    let guard = MinorGuard::default();
    let patterns = vec![
        ("K_2,3", Graph::complete_bipartite(2, 3)),
        ("F1", catalog::load_bundled("F1").unwrap().graph),
        ("F3(3)", catalog::gen_f3(3).unwrap()),
    ];
    let mut hosts = 0u64;
    for n in 1..=8 {
        for g in graph_class_representatives(n) {
            if recognize(&g).is_none() {
                continue;
            }
            hosts += 1;
            for (name, h) in &patterns {
                assert!(
                    catalog::contains_induced_minor(&g, h, guard)
                        .unwrap()
                        .is_none(),
                    "1-p.o. host contains {name}: {g:?}"
                );
            }
        }
    }
    assert_eq!(hosts, 7542, "1-p.o. class count up to 8 vertices");
}

/// Containment of K_{2,3} as an *induced subgraph* forces non-1-p.o.
/// (closure under induced minors, forward direction on non-cograph hosts).
#[test]
fn planted_k23_is_never_one_po() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xBEEF);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 5..=9);
        let mut g = common::random_graph(&mut rng, n, 0.4);
        // Plant an induced K_{2,3} on the first five vertices.
        let (small, large) = ([0, 1], [2, 3, 4]);
        for &u in &small {
            for &v in &large {
                if !g.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        let g = {
            // Remove intra-side edges to make it induced.
            let mut edges = g.edges();
            edges.retain(|&(u, v)| {
                !(small.contains(&u) && small.contains(&v))
                    && !(large.contains(&u) && large.contains(&v))
            });
            Graph::from_edges(n, &edges).unwrap()
        };
        assert!(po_core::cograph::contains_k23(&g).is_some());
        assert!(
            recognize(&g).is_none(),
            "host with induced K_2,3 cannot be 1-p.o."
        );
    }
}

/// The partition-based induced-minor search agrees with an independent
/// route: breadth-first closure of the host under single vertex deletions
/// and edge contractions, collected up to isomorphism.
#[test]
fn induced_minor_search_matches_sequence_semantics() {
    use po_core::iso::GraphSet;
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xD00D);
    let guard = MinorGuard::default();
    for _ in 0..40 {
        let n = rand::Rng::gen_range(&mut rng, 3..=6);
        let host = common::random_graph(&mut rng, n, 0.5);

        // All induced minors of the host, by exhaustive reduction sequences.
        let mut seen = GraphSet::new();
        let mut queue = vec![host.clone()];
        seen.insert(host.clone());
        while let Some(g) = queue.pop() {
            let mut children = Vec::new();
            for v in 0..g.n() {
                children.push(g.delete_vertex(v).unwrap());
            }
            for (u, v) in g.edges() {
                children.push(g.contract_edge(u, v).unwrap());
            }
            for c in children {
                if c.n() > 0 && seen.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }

        // Compare against the branch-set search on assorted patterns.
        for _ in 0..12 {
            let k = rand::Rng::gen_range(&mut rng, 1..=n);
            let pattern = common::random_graph(&mut rng, k, 0.5);
            let fast = catalog::contains_induced_minor(&host, &pattern, guard)
                .unwrap()
                .is_some();
            let slow = seen.contains(&pattern);
            assert_eq!(fast, slow, "host {host:?} pattern {pattern:?}");
        }
    }
}

/// The propagating all-C4-cyclic search agrees with a dumb scan over all
/// orientations, including on its lexicographically-least witness.
#[test]
fn all_c4_cyclic_search_matches_dumb_scan() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xF00D);
    let mut tested = 0;
    while tested < 150 {
        let n = rand::Rng::gen_range(&mut rng, 3..=7);
        let g = common::random_graph(&mut rng, n, 0.55);
        let m = g.edge_count();
        if m > 14 {
            continue;
        }
        tested += 1;
        let fast = oracle::exists_orientation_all_c4_cyclic(&g, 24).unwrap();
        let mut slow = None;
        'scan: for mask in 0u64..(1 << m) {
            let forward: Vec<bool> = (0..m).map(|i| mask >> (m - 1 - i) & 1 == 0).collect();
            let d = Orientation::new(g.clone(), forward);
            if oracle::all_induced_c4_cyclic(&d) {
                slow = Some(d);
                break 'scan;
            }
        }
        match (fast, slow) {
            (Some(a), Some(b)) => assert_eq!(a.forward_bits(), b.forward_bits(), "{g:?}"),
            (None, None) => {}
            (a, b) => panic!("disagreement on {g:?}: fast={:?} slow={:?}", a.is_some(), b.is_some()),
        }
    }
}

/// Cotrees satisfy their structural invariant: internal nodes have at least
/// two children and alternate between union and join.
#[test]
fn cotree_structure_alternates() {
    use po_core::cograph::{build_cotree, Cotree};
    fn walk(t: &Cotree) {
        match t {
            Cotree::Leaf(_) => {}
            Cotree::Union(children) => {
                assert!(children.len() >= 2);
                for c in children {
                    assert!(!matches!(c, Cotree::Union(_)), "union child of union");
                    walk(c);
                }
            }
            Cotree::Join(children) => {
                assert!(children.len() >= 2);
                for c in children {
                    assert!(!matches!(c, Cotree::Join(_)), "join child of join");
                    walk(c);
                }
            }
        }
    }
    for level in &common::cograph_representatives(7) {
        for g in level {
            walk(&build_cotree(g).unwrap());
        }
    }
}

/// The lexicographically-least witness contract of the oracle.
#[test]
fn oracle_witness_is_lexicographically_least() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xCAFE);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let g = common::random_graph(&mut rng, n, 0.5);
        let m = g.edge_count();
        let Some(w) = oracle::is_one_po_bruteforce(&g, 24).unwrap() else {
            continue;
        };
        // Reference: scan bit strings in lexicographic order over the edge
        // sequence (edge 0 is the most significant position; a clear bit
        // keeps the canonical smaller-to-larger direction).
        let mut expected = None;
        'scan: for mask in 0u64..(1 << m) {
            let forward: Vec<bool> = (0..m).map(|i| mask >> (m - 1 - i) & 1 == 0).collect();
            let d = Orientation::new(g.clone(), forward);
            if d.is_one_perfect() {
                expected = Some(d);
                break 'scan;
            }
        }
        assert_eq!(w.forward_bits(), expected.unwrap().forward_bits());
    }
}
