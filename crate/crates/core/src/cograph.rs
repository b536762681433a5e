//! Cographs: cotree decomposition via the union / complement-connectivity
//! recursion, and the three-way characterization of 1-p.o. cographs
//! (1-p.o. iff K_{2,3}-free iff buildable from K_1, complements of perfect
//! matchings, disjoint unions, universal vertices and true twins).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::recognize;

/// The recursive union/join decomposition of a cograph. Leaves carry
/// original vertex labels; union nodes never have union children and join
/// nodes never have join children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Cotree::Leaf(v) => vec![*v],
            Cotree::Union(children) | Cotree::Join(children) => {
                let mut out: Vec<usize> = children.iter().flat_map(|c| c.leaves()).collect();
                out.sort_unstable();
                out
            }
        }
    }

    /// S-expression rendering, e.g. `(join (union 0 1) 2)`.
    pub fn to_sexpr(&self) -> String {
        match self {
            Cotree::Leaf(v) => v.to_string(),
            Cotree::Union(children) => sexpr_list("union", children),
            Cotree::Join(children) => sexpr_list("join", children),
        }
    }
}

fn sexpr_list(tag: &str, children: &[Cotree]) -> String {
    let mut out = format!("({tag}");
    for c in children {
        out.push(' ');
        out.push_str(&c.to_sexpr());
    }
    out.push(')');
    out
}

/// An induced path on 4 vertices, in path order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P4Witness(pub [usize; 4]);

/// Builds the cotree of `g`, or returns an induced `P_4` explaining why `g`
/// is not a cograph.
pub fn build_cotree(g: &Graph) -> std::result::Result<Cotree, P4Witness> {
    let verts: Vec<usize> = g.vertices().collect();
    decompose(g, &verts)
}

fn decompose(g: &Graph, verts: &[usize]) -> std::result::Result<Cotree, P4Witness> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let sub = g.induced(verts);
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| {
                let orig: Vec<usize> = c.iter().map(|&i| verts[i]).collect();
                decompose(g, &orig)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(Cotree::Union(children));
    }
    let co_comps = sub.complement().components();
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| {
                let orig: Vec<usize> = c.iter().map(|&i| verts[i]).collect();
                decompose(g, &orig)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(Cotree::Join(children));
    }
    // Connected with connected complement on >= 2 vertices: not a cograph;
    // dig out an induced P_4.
    let w = find_induced_p4(&sub).expect("connected, co-connected, n >= 2 graphs contain a P_4");
    Err(P4Witness(w.0.map(|i| verts[i])))
}

/// Brute-force induced-P_4 search.
pub fn find_induced_p4(g: &Graph) -> Option<P4Witness> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let sub = g.induced(&quad);
                    if sub.edge_count() != 3 {
                        continue;
                    }
                    let ends: Vec<usize> = (0..4).filter(|&v| sub.degree(v) == 1).collect();
                    if ends.len() != 2 {
                        continue;
                    }
                    // Walk the path from one end.
                    let mut order = vec![ends[0]];
                    while order.len() < 4 {
                        let last = *order.last().unwrap();
                        let next = sub.neighbors(last).find(|x| !order.contains(x)).unwrap();
                        order.push(next);
                    }
                    return Some(P4Witness([
                        quad[order[0]],
                        quad[order[1]],
                        quad[order[2]],
                        quad[order[3]],
                    ]));
                }
            }
        }
    }
    None
}

/// Reconstructs the graph a cotree describes. Leaf labels must form
/// `0..n` for some `n`.
pub fn rebuild(tree: &Cotree) -> Graph {
    let leaves = tree.leaves();
    let n = leaves.len();
    assert_eq!(
        leaves,
        (0..n).collect::<Vec<_>>(),
        "leaf labels must be 0..n"
    );
    let mut g = Graph::empty(n);
    add_tree_edges(tree, &mut g);
    g
}

fn add_tree_edges(tree: &Cotree, g: &mut Graph) {
    match tree {
        Cotree::Leaf(_) => {}
        Cotree::Union(children) => {
            for c in children {
                add_tree_edges(c, g);
            }
        }
        Cotree::Join(children) => {
            for c in children {
                add_tree_edges(c, g);
            }
            for (i, c1) in children.iter().enumerate() {
                for c2 in &children[i + 1..] {
                    for u in c1.leaves() {
                        for v in c2.leaves() {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
    }
}

/// The structural recursion: a cograph is 1-p.o. iff it is `K_1`, the
/// complement of a perfect matching on at least 4 vertices, a disjoint union
/// of 1-p.o. cographs, or arises from a 1-p.o. cograph by adding a universal
/// vertex or a true twin. Errs when `g` is not a cograph.
pub fn cograph_is_one_po_structural(g: &Graph) -> Result<bool> {
    if build_cotree(g).is_err() {
        return Err(Error::NotACograph);
    }
    Ok(structural(g))
}

fn structural(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    // complement(mK_2) with m >= 2: the complement is a perfect matching.
    if n >= 4 && n.is_multiple_of(2) {
        let comp = g.complement();
        if (0..n).all(|v| comp.degree(v) == 1) {
            return true;
        }
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps.iter().all(|c| structural(&g.induced(c)));
    }
    if let Some(u) = (0..n).find(|&u| g.degree(u) == n - 1) {
        return structural(&g.delete_vertex(u).unwrap());
    }
    if let Some((_, v)) = true_twins(g) {
        return structural(&g.delete_vertex(v).unwrap());
    }
    false
}

fn true_twins(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                continue;
            }
            let same = g
                .vertices()
                .filter(|&x| x != u && x != v)
                .all(|x| g.has_edge(u, x) == g.has_edge(v, x));
            if same {
                return Some((u, v));
            }
        }
    }
    None
}

/// A witness that `K_{2,3}` occurs as an induced subgraph: the 2-side and
/// the 3-side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K23Witness {
    pub small: [usize; 2],
    pub large: [usize; 3],
}

/// Brute-force induced-K_{2,3} search over 5-subsets.
pub fn contains_k23(g: &Graph) -> Option<K23Witness> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let mut five = Vec::with_capacity(5);
    pick_five(g, 0, &mut five)
}

fn pick_five(g: &Graph, start: usize, five: &mut Vec<usize>) -> Option<K23Witness> {
    if five.len() == 5 {
        return check_k23(g, five);
    }
    for v in start..g.n() {
        if g.n() - v < 5 - five.len() {
            break;
        }
        five.push(v);
        if let Some(w) = pick_five(g, v + 1, five) {
            five.pop();
            return Some(w);
        }
        five.pop();
    }
    None
}

fn check_k23(g: &Graph, five: &[usize]) -> Option<K23Witness> {
    for i in 0..5 {
        for j in i + 1..5 {
            let small = [five[i], five[j]];
            let large: Vec<usize> = five
                .iter()
                .copied()
                .filter(|v| *v != small[0] && *v != small[1])
                .collect();
            let ok = !g.has_edge(small[0], small[1])
                && large
                    .iter()
                    .enumerate()
                    .all(|(k, &x)| large[k + 1..].iter().all(|&y| !g.has_edge(x, y)))
                && small
                    .iter()
                    .all(|&x| large.iter().all(|&y| g.has_edge(x, y)));
            if ok {
                return Some(K23Witness {
                    small,
                    large: [large[0], large[1], large[2]],
                });
            }
        }
    }
    None
}

/// The three verdicts of the cograph characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CographReport {
    pub is_one_po: bool,
    pub k23_free: bool,
    pub structural: bool,
}

impl CographReport {
    pub fn agree(&self) -> bool {
        self.is_one_po == self.k23_free && self.is_one_po == self.structural
    }
}

/// Evaluates all three conditions on a cograph.
pub fn cograph_report(g: &Graph) -> Result<CographReport> {
    let structural = cograph_is_one_po_structural(g)?;
    Ok(CographReport {
        is_one_po: recognize(g).is_some(),
        k23_free: contains_k23(g).is_none(),
        structural,
    })
}

#[cfg(test)]
#[allow(non_snake_case)]
mod tests {
    use super::*;

    #[test]
    fn P_4_is_not_a_cograph() {
        let err = build_cotree(&Graph::path_graph(4)).unwrap_err();
        let P4Witness([a, b, c, d]) = err;
        assert_eq!(
            {
                let mut v = vec![a, b, c, d];
                v.sort_unstable();
                v
            },
            vec![0, 1, 2, 3]
        );
        // Witness really is a path in order.
        let g = Graph::path_graph(4);
        assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d));
        assert!(!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d));
    }

    #[test]
    fn K_23_cotree_is_a_join_of_stables() {
        let tree = build_cotree(&Graph::complete_bipartite(2, 3)).unwrap();
        match &tree {
            Cotree::Join(children) => assert_eq!(children.len(), 2),
            other => panic!("expected join root, got {other:?}"),
        }
        assert_eq!(rebuild(&tree), Graph::complete_bipartite(2, 3));
    }

    #[test]
    fn complement_of_matchings_has_cotree() {
        let g = Graph::matching(3).complement();
        let tree = build_cotree(&g).unwrap();
        assert_eq!(rebuild(&tree), g);
    }

    #[test]
    fn rebuild_round_trip_random_cographs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(4242);
        for _ in 0..100 {
            let n = rng.gen_range(1..=9);
            let g = random_cograph(&mut rng, n);
            let tree = build_cotree(&g).expect("constructed as a cograph");
            assert_eq!(rebuild(&tree), g);
        }
    }

    pub(crate) fn random_cograph(rng: &mut impl rand::Rng, n: usize) -> Graph {
        if n == 1 {
            return Graph::complete(1);
        }
        let k = rng.gen_range(1..n);
        let left = random_cograph(rng, k);
        let right = random_cograph(rng, n - k);
        if rng.gen_bool(0.5) {
            left.disjoint_union(&right)
        } else {
            left.join(&right)
        }
    }

    #[test]
    fn structural_examples() {
        assert_eq!(
            cograph_is_one_po_structural(&Graph::matching(4).complement()),
            Ok(true)
        );
        assert_eq!(
            cograph_is_one_po_structural(&Graph::complete_bipartite(2, 3)),
            Ok(false)
        );
        assert_eq!(cograph_is_one_po_structural(&Graph::complete(1)), Ok(true));
        assert!(cograph_is_one_po_structural(&Graph::path_graph(4)).is_err());
    }

    #[test]
    fn k23_detection() {
        let w = contains_k23(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(w.small.len(), 2);
        // complement(C_6) is K_{2,3}-free although it is not 1-p.o.; the
        // equivalence is specific to cographs.
        assert!(contains_k23(&Graph::cycle(6).complement()).is_none());
        assert!(contains_k23(&Graph::cycle(4)).is_none());

        // On a larger host: K_{2,3} plus an apex vertex still contains it.
        let host = Graph::complete_bipartite(2, 3).add_universal();
        let w = contains_k23(&host).unwrap();
        let all: Vec<usize> = w.small.iter().chain(w.large.iter()).copied().collect();
        let sub = {
            let mut s = all.clone();
            s.sort_unstable();
            Graph::complete_bipartite(2, 3).add_universal().induced(&s)
        };
        assert_eq!(sub.edge_count(), 6);
    }

    #[test]
    fn three_way_agreement_small_random() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(77);
        for _ in 0..120 {
            let n = rand::Rng::gen_range(&mut rng, 1..=8);
            let g = random_cograph(&mut rng, n);
            let report = cograph_report(&g).unwrap();
            assert!(report.agree(), "{report:?} on {g:?}");
        }
    }
}
