//! Orientations: an assignment of exactly one direction to each edge of a
//! base graph, plus the 1-perfectness check (every out-neighborhood induces a
//! tournament, i.e. is a clique of the base graph).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An orientation of a [`Graph`]. Direction bits are aligned with the
/// canonical sorted edge list of the base: `forward[i] = true` orients edge
/// `(u, v)` (with `u < v`) as the arc `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    edges: Vec<(usize, usize)>,
    forward: Vec<bool>,
    out: Vec<BTreeSet<usize>>,
}

impl Orientation {
    pub fn new(base: Graph, forward: Vec<bool>) -> Self {
        let edges = base.edges();
        assert_eq!(edges.len(), forward.len(), "one direction bit per edge");
        let mut out = vec![BTreeSet::new(); base.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if forward[i] {
                out[u].insert(v);
            } else {
                out[v].insert(u);
            }
        }
        Orientation {
            base,
            edges,
            forward,
            out,
        }
    }

    /// Builds an orientation from explicit arcs; every edge of the base must
    /// appear exactly once, as either `(u,v)` or `(v,u)`.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let edges = base.edges();
        let mut forward = vec![None; edges.len()];
        let index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).ok();
        for &(t, h) in arcs {
            if !base.has_edge(t, h) {
                return Err(Error::NotAnEdge { u: t, v: h });
            }
            let i = index(t, h).unwrap();
            if forward[i].is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("edge {}-{} oriented twice", t.min(h), t.max(h)),
                });
            }
            forward[i] = Some(t < h);
        }
        if let Some(i) = forward.iter().position(|d| d.is_none()) {
            let (u, v) = edges[i];
            return Err(Error::Parse {
                line: 0,
                msg: format!("edge {u}-{v} has no direction"),
            });
        }
        Ok(Orientation::new(
            base,
            forward.into_iter().flatten().collect(),
        ))
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn forward_bits(&self) -> &[bool] {
        &self.forward
    }

    /// True iff the arc `t -> h` is present.
    pub fn is_arc(&self, t: usize, h: usize) -> bool {
        self.out[t].contains(&h)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied()
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.base
            .neighbors(v)
            .filter(move |&u| !self.out[v].contains(&u))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// All arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
            .collect()
    }

    /// The 1-perfectness check: every out-neighborhood is a clique of the
    /// base graph.
    pub fn is_one_perfect(&self) -> bool {
        (0..self.base.n()).all(|v| {
            let nbrs: Vec<usize> = self.out[v].iter().copied().collect();
            self.base.is_clique(&nbrs)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Orientation {
        let c = Graph::cycle(n);
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Orientation::from_arcs(c, &arcs).unwrap()
    }

    #[test]
    fn cyclic_c4_is_one_perfect() {
        let d = cyclic(4);
        assert!(d.is_one_perfect());
        assert!(d.is_arc(3, 0));
        assert!(!d.is_arc(0, 3));
        assert_eq!(d.out_degree(2), 1);
        assert_eq!(d.in_neighbors(0).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn source_on_c4_is_not_one_perfect() {
        // Orient 0 -> 1, 0 -> 3: the out-neighborhood {1, 3} is not a clique.
        let c4 = Graph::cycle(4);
        let d = Orientation::from_arcs(c4, &[(0, 1), (1, 2), (3, 2), (0, 3)]).unwrap();
        assert!(!d.is_one_perfect());
    }

    #[test]
    fn any_tournament_is_one_perfect() {
        let k3 = Graph::complete(3);
        for bits in 0..8u32 {
            let forward = (0..3).map(|i| bits >> i & 1 == 1).collect();
            assert!(Orientation::new(k3.clone(), forward).is_one_perfect());
        }
    }

    #[test]
    fn from_arcs_rejects_bad_input() {
        let c4 = Graph::cycle(4);
        assert!(Orientation::from_arcs(c4.clone(), &[(0, 2)]).is_err());
        assert!(
            Orientation::from_arcs(c4.clone(), &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]).is_err()
        );
        assert!(Orientation::from_arcs(c4, &[(0, 1), (1, 2), (2, 3)]).is_err());
    }
}
