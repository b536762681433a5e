//! Closure operations that transfer 1-perfect orientations: the class of
//! 1-p.o. graphs is closed under disjoint union, universal-vertex addition,
//! true-twin addition, simplicial-vertex addition, duplication of a 2-branch
//! in the complement, vertex deletion and edge contraction, and (for
//! co-bipartite operands or a complete operand) under join. Each operation
//! here takes witness orientations and produces a witness for the transformed
//! graph.
//!
//! Vertex deletion transfers no orientation data: restricting a 1-perfect
//! orientation to an induced subgraph stays 1-perfect, so delete-then-
//! recognize covers it and no dedicated transfer routine exists.

use std::collections::BTreeSet;

use crate::cobipartite::{find_clique_bipartition, CliqueBipartition};
use crate::cover::{orientation_from_cover, EdgeCliqueCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoBranch};
use crate::orientation::Orientation;
use crate::recognition::recognize;

fn require_one_perfect(d: &Orientation) -> Result<()> {
    if d.is_one_perfect() {
        Ok(())
    } else {
        Err(Error::NotOnePerfect)
    }
}

/// Disjoint union of two witnesses. Arcs of `d2` shift up by `d1.base().n()`.
pub fn orient_disjoint_union(d1: &Orientation, d2: &Orientation) -> Result<Orientation> {
    require_one_perfect(d1)?;
    require_one_perfect(d2)?;
    let g = d1.base().disjoint_union(d2.base());
    let n1 = d1.base().n();
    let mut arcs = d1.arcs();
    arcs.extend(d2.arcs().iter().map(|&(t, h)| (t + n1, h + n1)));
    let out = Orientation::from_arcs(g, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// Join with `K_1`: every old vertex points at the new universal vertex, so
/// the new vertex has out-degree 0 and old out-neighborhoods only gain a
/// common neighbor.
pub fn orient_add_universal(d: &Orientation) -> Result<Orientation> {
    require_one_perfect(d)?;
    let n = d.base().n();
    let g = d.base().add_universal();
    let mut arcs = d.arcs();
    arcs.extend((0..n).map(|u| (u, n)));
    let out = Orientation::from_arcs(g, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// Adds a true twin `v` of `w`: `v` copies `w`'s arc pattern and the twin
/// edge is oriented `w -> v`.
pub fn orient_add_true_twin(d: &Orientation, w: usize) -> Result<Orientation> {
    require_one_perfect(d)?;
    let n = d.base().n();
    if w >= n {
        return Err(Error::VertexOutOfRange { v: w, n });
    }
    let g = d.base().add_true_twin(w)?;
    let v = n;
    let mut arcs = d.arcs();
    for u in d.out_neighbors(w) {
        arcs.push((v, u));
    }
    for u in d.in_neighbors(w) {
        arcs.push((u, v));
    }
    arcs.push((w, v));
    let out = Orientation::from_arcs(g, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// Adds a simplicial vertex adjacent to the clique `s`, with every new edge
/// oriented away from the new vertex.
pub fn orient_add_simplicial(d: &Orientation, s: &[usize]) -> Result<Orientation> {
    require_one_perfect(d)?;
    let n = d.base().n();
    let g = d.base().add_simplicial(s)?;
    let mut arcs = d.arcs();
    arcs.extend(s.iter().map(|&u| (n, u)));
    let out = Orientation::from_arcs(g, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// Duplicates the 2-branch `br = (a,b,c)` of `complement(g)` and returns the
/// transformed graph, i.e. `complement(duplicate_two_branch(complement(g), br))`,
/// together with a 1-perfect orientation of it.
///
/// The construction follows the independent-set certificate route: a witness
/// orientation of `g` gives the system `I_i = {v_i} ∪ N⁺(v_i)` (independent
/// in the complement), each `I_i` is greedily extended to a maximal
/// independent set of the complement (after which it contains exactly one of
/// `b`, `c`; this is asserted, not assumed), the two new sets for `b' = n`
/// and `c' = n+1` are `(I_b \ {b}) ∪ {b', c}` and `(I_c \ {a, c}) ∪ {b, c'}`,
/// old sets gain `b'` or `c'` according to which of `b`, `c` they contain,
/// and the resulting system converts back to an orientation through the
/// edge-clique-cover correspondence.
pub fn duplicate_two_branch_in_complement(
    g: &Graph,
    br: TwoBranch,
) -> Result<(Graph, Orientation)> {
    let comp = g.complement();
    comp.validate_two_branch(br)?;
    let d = recognize(g).ok_or(Error::NotOnePerfectlyOrientable)?;
    let n = g.n();

    // Independent sets of the complement are cliques of g; extend greedily
    // by ascending label until maximal.
    let mut sets: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            let mut set: BTreeSet<usize> = d.out_neighbors(v).collect();
            set.insert(v);
            for x in 0..n {
                if !set.contains(&x) && set.iter().all(|&y| !comp.has_edge(x, y)) {
                    set.insert(x);
                }
            }
            set
        })
        .collect();

    let TwoBranch { a, b, c } = br;
    for (i, set) in sets.iter().enumerate() {
        assert!(
            set.contains(&b) != set.contains(&c),
            "maximal independent set I_{i} must contain exactly one of b, c"
        );
    }

    let h_comp = comp.duplicate_two_branch(br)?;
    let h = h_comp.complement();
    let (b2, c2) = (n, n + 1);

    for set in sets.iter_mut() {
        if set.contains(&b) {
            set.insert(b2);
        } else {
            set.insert(c2);
        }
    }
    let mut set_b2: BTreeSet<usize> = sets[b].clone();
    set_b2.remove(&b);
    set_b2.insert(b2);
    set_b2.insert(c);
    let mut set_c2: BTreeSet<usize> = sets[c].clone();
    set_c2.remove(&a);
    set_c2.remove(&c);
    set_c2.insert(b);
    set_c2.insert(c2);
    sets.push(set_b2);
    sets.push(set_c2);

    // Independent sets of h_comp are cliques of h; the inclusive cover
    // conditions then hand back a 1-perfect orientation of h.
    let cover = EdgeCliqueCover { sets };
    let out = orientation_from_cover(&h, &cover)?;
    debug_assert!(out.is_one_perfect());
    Ok((h, out))
}

/// Contracts the edge `e = uv` of the base graph and transfers the
/// orientation. With the arc running `t -> h` in `d`, the neighbors of the
/// merged vertex split into `X = N(t)\N(h)`, `Y/U = N(t)∩N(h)` (arc into /
/// out of `h`) and `W/Z = N(h)\N(t)` (arc into / out of `h`); edges at the
/// merged vertex `w` are oriented `x -> w` for `x ∈ X ∪ Y ∪ W` and `w -> x`
/// for `x ∈ U ∪ Z`, and every other edge keeps its direction.
pub fn orient_contract_edge(d: &Orientation, e: (usize, usize)) -> Result<Orientation> {
    require_one_perfect(d)?;
    let g = d.base();
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let (t, h) = if d.is_arc(u, v) { (u, v) } else { (v, u) };

    let contracted = g.contract_edge(u, v)?;
    let (lo, hi) = (u.min(v), u.max(v));
    let relabel = |x: usize| if x < hi { x } else { x - 1 };
    let merged = lo;

    let mut arcs = Vec::with_capacity(contracted.edge_count());
    for (x, y) in g.edges() {
        if (x, y) == (lo, hi) {
            continue;
        }
        if x != lo && x != hi && y != lo && y != hi {
            let (tail, head) = if d.is_arc(x, y) { (x, y) } else { (y, x) };
            arcs.push((relabel(tail), relabel(head)));
        }
    }
    for x in contracted.neighbors(merged).collect::<Vec<_>>() {
        // Map back to an original vertex to classify.
        let orig = if x < hi { x } else { x + 1 };
        let toward_w = if g.has_edge(orig, h) {
            // Y or W when the arc enters h, U or Z when it leaves h.
            d.is_arc(orig, h)
        } else {
            // orig ∈ X: adjacent to t only.
            debug_assert!(g.has_edge(orig, t));
            true
        };
        if toward_w {
            arcs.push((x, merged));
        } else {
            arcs.push((merged, x));
        }
    }
    let out = Orientation::from_arcs(contracted, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// Joins two co-bipartite witnesses. Cross edges run from `A_1` to `A_2`,
/// `B_1` to `B_2`, `A_2` to `B_1` and `B_2` to `A_1` (part 2 labels are
/// shifted by `d1.base().n()`); either side of a bipartition may be empty.
pub fn orient_join(
    d1: &Orientation,
    d2: &Orientation,
    parts1: &CliqueBipartition,
    parts2: &CliqueBipartition,
) -> Result<Orientation> {
    require_one_perfect(d1)?;
    require_one_perfect(d2)?;
    parts1.validate(d1.base())?;
    parts2.validate(d2.base())?;
    let n1 = d1.base().n();
    let g = d1.base().join(d2.base());
    let mut arcs = d1.arcs();
    arcs.extend(d2.arcs().iter().map(|&(t, h)| (t + n1, h + n1)));
    for &x in &parts1.left {
        for &y in &parts2.left {
            arcs.push((x, y + n1));
        }
    }
    for &x in &parts1.right {
        for &y in &parts2.right {
            arcs.push((x, y + n1));
        }
    }
    for &x in &parts2.left {
        for &y in &parts1.right {
            arcs.push((x + n1, y));
        }
    }
    for &x in &parts2.right {
        for &y in &parts1.left {
            arcs.push((x + n1, y));
        }
    }
    let out = Orientation::from_arcs(g, &arcs)?;
    debug_assert!(out.is_one_perfect());
    Ok(out)
}

/// The join characterization: `join(g1, g2)` is 1-p.o. iff one operand is
/// complete and the other 1-p.o., or both are co-bipartite and 1-p.o.
pub fn join_is_one_po(g1: &Graph, g2: &Graph) -> bool {
    let po1 = recognize(g1).is_some();
    let po2 = recognize(g2).is_some();
    if (g1.is_complete() && po2) || (g2.is_complete() && po1) {
        return true;
    }
    po1 && po2 && find_clique_bipartition(g1).is_some() && find_clique_bipartition(g2).is_some()
}
