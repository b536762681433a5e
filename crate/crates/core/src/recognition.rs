//! Polynomial-time recognition via a reduction to 2-SAT.
//!
//! One boolean variable per edge (aligned with the canonical sorted edge
//! list; `true` orients `(u, v)` with `u < v` as `u -> v`). An orientation is
//! 1-perfect exactly when no vertex directs arcs at two non-adjacent
//! neighbors, so for every vertex `v` and every non-adjacent pair `u, w` of
//! its neighbors there is one binary clause forbidding `v->u ∧ v->w`. The
//! instance is satisfiable iff the graph is 1-perfectly orientable; the
//! exhaustive oracle agreement tests pin the encoding down empirically.

use crate::graph::Graph;
use crate::orientation::Orientation;

/// A literal: variable index plus polarity (`true` = positive).
pub type Lit = (usize, bool);

fn negate(l: Lit) -> Lit {
    (l.0, !l.1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSatInstance {
    pub var_count: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

impl TwoSatInstance {
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&((va, pa), (vb, pb))| assignment[va] == pa || assignment[vb] == pb)
    }
}

/// Builds the cherry-constraint 2-SAT instance for `g`. The clause count is
/// at most `sum_v C(d(v), 2)`.
pub fn build_two_sat(g: &Graph) -> TwoSatInstance {
    let edges = g.edges();
    let edge_var: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // The literal that is true when the edge at `v`,`x` is oriented v -> x.
    let arc_lit = |v: usize, x: usize| -> Lit {
        if v < x {
            (edge_var[&(v, x)], true)
        } else {
            (edge_var[&(x, v)], false)
        }
    };
    let mut clauses = Vec::new();
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(u, w) {
                    clauses.push((negate(arc_lit(v, u)), negate(arc_lit(v, w))));
                }
            }
        }
    }
    TwoSatInstance {
        var_count: edges.len(),
        clauses,
    }
}

/// Satisfiability via strongly connected components of the implication
/// graph: satisfiable iff no variable shares a component with its negation.
/// Components are numbered in reverse topological order (Tarjan), and a
/// variable is set true iff its positive node's component precedes its
/// negative node's, which makes the returned assignment deterministic.
pub fn solve_two_sat(inst: &TwoSatInstance) -> Option<Vec<bool>> {
    let n_nodes = 2 * inst.var_count;
    let node = |(v, positive): Lit| 2 * v + usize::from(!positive);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    for &(a, b) in &inst.clauses {
        adj[node(negate(a))].push(node(b));
        adj[node(negate(b))].push(node(a));
    }
    let comp = tarjan_components(&adj);
    let mut assignment = Vec::with_capacity(inst.var_count);
    for v in 0..inst.var_count {
        match comp[2 * v].cmp(&comp[2 * v + 1]) {
            std::cmp::Ordering::Equal => return None,
            std::cmp::Ordering::Less => assignment.push(true),
            std::cmp::Ordering::Greater => assignment.push(false),
        }
    }
    debug_assert!(inst.satisfied_by(&assignment));
    Some(assignment)
}

/// Iterative Tarjan; component ids increase in completion order, i.e. reverse
/// topological order of the condensation.
fn tarjan_components(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut timer = 0usize;
    let mut n_comp = 0usize;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&(v, ei)) = call.last() {
            if ei == 0 {
                index[v] = timer;
                low[v] = timer;
                timer += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if ei < adj[v].len() {
                call.last_mut().unwrap().1 += 1;
                let w = adj[v][ei];
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = n_comp;
                        if w == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    comp
}

/// Polynomial 1-p.o. recognition. Returns a witness orientation (which
/// always passes the 1-perfectness check) or `None` when the graph is not
/// 1-perfectly orientable.
pub fn recognize(g: &Graph) -> Option<Orientation> {
    let inst = build_two_sat(g);
    let forward = solve_two_sat(&inst)?;
    let d = Orientation::new(g.clone(), forward);
    debug_assert!(d.is_one_perfect(), "2-SAT witness must be 1-perfect");
    Some(d)
}

pub fn is_one_perfectly_orientable(g: &Graph) -> bool {
    recognize(g).is_some()
}
