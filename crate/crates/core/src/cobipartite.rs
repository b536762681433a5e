//! Co-bipartite graphs (complements of bipartite graphs), good colorings of
//! crossing edges, and the three-way equivalence: a co-bipartite graph is
//! 1-p.o. iff it has an orientation with every induced 4-cycle cyclic iff it
//! is a circular arc graph, the latter exercised through the good-coloring
//! characterization (never through arc models).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::orientation::Orientation;
use crate::recognition::recognize;

/// A partition of the vertex set into two cliques `U` (`left`) and `U'`
/// (`right`); either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueBipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl CliqueBipartition {
    /// Checks the partition: disjoint, covering, both sides cliques.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for &v in self.left.iter().chain(&self.right) {
            if v >= g.n() {
                return Err(Error::InvalidBipartition(format!(
                    "vertex {v} out of range"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidBipartition(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidBipartition(
                "partition must cover all vertices".into(),
            ));
        }
        if !g.is_clique(&self.left) {
            return Err(Error::InvalidBipartition(
                "left side is not a clique".into(),
            ));
        }
        if !g.is_clique(&self.right) {
            return Err(Error::InvalidBipartition(
                "right side is not a clique".into(),
            ));
        }
        Ok(())
    }

    pub fn side_of(&self, v: usize) -> Side {
        if self.left.contains(&v) {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Edges with one endpoint on each side, in canonical order.
    pub fn crossing_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .into_iter()
            .filter(|&(u, v)| self.side_of(u) != self.side_of(v))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// A red/blue coloring of the crossing edges such that the two crossing edges
/// of every induced 4-cycle receive opposite colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodColoring {
    pub colors: BTreeMap<(usize, usize), EdgeColor>,
}

impl GoodColoring {
    /// Re-checks the defining invariant against a graph and partition.
    pub fn is_valid(&self, g: &Graph, parts: &CliqueBipartition) -> bool {
        let crossing = parts.crossing_edges(g);
        if self.colors.len() != crossing.len()
            || !crossing.iter().all(|e| self.colors.contains_key(e))
        {
            return false;
        }
        crossing_pairs_of_induced_c4(g, parts)
            .iter()
            .all(|&(e1, e2)| self.colors[&e1] != self.colors[&e2])
    }
}

/// The two crossing edges of every induced 4-cycle. A 4-cycle of a graph with
/// a clique bipartition always has two vertices on each side, so exactly two
/// of its edges cross.
fn crossing_pairs_of_induced_c4(
    g: &Graph,
    parts: &CliqueBipartition,
) -> Vec<((usize, usize), (usize, usize))> {
    let mut pairs = Vec::new();
    for cycle in g.chordless_cycles(4) {
        if cycle.len() != 4 {
            continue;
        }
        let mut crossing = Vec::new();
        for i in 0..4 {
            let (x, y) = (cycle[i], cycle[(i + 1) % 4]);
            if parts.side_of(x) != parts.side_of(y) {
                crossing.push((x.min(y), x.max(y)));
            }
        }
        debug_assert_eq!(crossing.len(), 2);
        pairs.push((crossing[0], crossing[1]));
    }
    pairs
}

/// Present iff the complement is bipartite. Canonical choice: within each
/// complement component, the color class of its smallest vertex goes left.
pub fn find_clique_bipartition(g: &Graph) -> Option<CliqueBipartition> {
    let coloring = g.complement().two_coloring()?;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (v, &c) in coloring.iter().enumerate() {
        if c {
            right.push(v);
        } else {
            left.push(v);
        }
    }
    let parts = CliqueBipartition { left, right };
    debug_assert!(parts.validate(g).is_ok());
    Some(parts)
}

/// Decides good-colorability with respect to `parts` by 2-coloring the
/// conflict graph whose vertices are the crossing edges and whose
/// constraints are the must-differ pairs coming from induced 4-cycles.
/// Returns the coloring with the smallest-indexed crossing edge of every
/// conflict component red.
pub fn good_coloring_exists(g: &Graph, parts: &CliqueBipartition) -> Result<Option<GoodColoring>> {
    parts.validate(g)?;
    let crossing = parts.crossing_edges(g);
    let index: BTreeMap<(usize, usize), usize> =
        crossing.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut conflict = Graph::empty(crossing.len());
    for (e1, e2) in crossing_pairs_of_induced_c4(g, parts) {
        if index[&e1] != index[&e2] {
            conflict.add_edge(index[&e1], index[&e2]);
        }
    }
    let Some(two_coloring) = conflict.two_coloring() else {
        return Ok(None);
    };
    let colors = crossing
        .iter()
        .zip(&two_coloring)
        .map(|(&e, &c)| (e, if c { EdgeColor::Blue } else { EdgeColor::Red }))
        .collect();
    let coloring = GoodColoring { colors };
    debug_assert!(coloring.is_valid(g, parts));
    Ok(Some(coloring))
}

/// Reads a good coloring off an orientation in which every induced 4-cycle
/// is cyclic: a crossing edge is red when its arc runs left-to-right and blue
/// otherwise. Errs when some induced 4-cycle is not cyclic.
pub fn good_coloring_from_orientation(
    d: &Orientation,
    parts: &CliqueBipartition,
) -> Result<GoodColoring> {
    parts.validate(d.base())?;
    if !oracle::all_induced_c4_cyclic(d) {
        return Err(Error::C4NotCyclic);
    }
    let colors = parts
        .crossing_edges(d.base())
        .into_iter()
        .map(|(u, v)| {
            let (t, h) = if d.is_arc(u, v) { (u, v) } else { (v, u) };
            let color = if parts.side_of(t) == Side::Left && parts.side_of(h) == Side::Right {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            };
            ((u, v), color)
        })
        .collect();
    let coloring = GoodColoring { colors };
    if !coloring.is_valid(d.base(), parts) {
        return Err(Error::C4NotCyclic);
    }
    Ok(coloring)
}

/// The three equivalent verdicts for a co-bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CobipartiteReport {
    pub is_one_po: bool,
    pub has_c4_cyclic_orientation: bool,
    pub has_good_coloring: bool,
}

impl CobipartiteReport {
    pub fn agree(&self) -> bool {
        self.is_one_po == self.has_c4_cyclic_orientation && self.is_one_po == self.has_good_coloring
    }
}

/// Evaluates all three properties of the equivalence on a co-bipartite graph
/// (the middle one through the guarded oracle) and asserts they agree.
pub fn cobipartite_equivalence(g: &Graph, guard: usize) -> Result<CobipartiteReport> {
    let parts = find_clique_bipartition(g).ok_or(Error::NotCobipartite)?;
    let report = CobipartiteReport {
        is_one_po: recognize(g).is_some(),
        has_c4_cyclic_orientation: oracle::exists_orientation_all_c4_cyclic(g, guard)?.is_some(),
        has_good_coloring: good_coloring_exists(g, &parts)?.is_some(),
    };
    assert!(
        report.agree(),
        "equivalence violated on a co-bipartite graph: {report:?}"
    );
    Ok(report)
}

#[cfg(test)]
#[allow(non_snake_case)]
mod tests {
    use super::*;

    #[test]
    fn bipartition_of_C_4() {
        let parts = find_clique_bipartition(&Graph::cycle(4)).unwrap();
        assert_eq!(parts.left, vec![0, 1]);
        assert_eq!(parts.right, vec![2, 3]);
        assert_eq!(parts.crossing_edges(&Graph::cycle(4)), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn C_5_is_not_cobipartite() {
        assert!(find_clique_bipartition(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn complement_of_C_6_is_cobipartite_but_not_good_colorable() {
        let g = Graph::cycle(6).complement();
        let parts = find_clique_bipartition(&g).expect("co-bipartite");
        assert!(good_coloring_exists(&g, &parts).unwrap().is_none());
    }

    #[test]
    fn good_coloring_small_cases() {
        let c4 = Graph::cycle(4);
        let parts = find_clique_bipartition(&c4).unwrap();
        let coloring = good_coloring_exists(&c4, &parts).unwrap().unwrap();
        assert_ne!(coloring.colors[&(0, 3)], coloring.colors[&(1, 2)]);

        // No induced C_4: any coloring of the crossing edges works.
        let k4 = Graph::complete(4);
        let parts = find_clique_bipartition(&k4).unwrap();
        assert!(good_coloring_exists(&k4, &parts).unwrap().is_some());
    }

    #[test]
    fn coloring_from_cyclic_orientation() {
        let c4 = Graph::cycle(4);
        let parts = find_clique_bipartition(&c4).unwrap();
        let cyclic = Orientation::from_arcs(c4.clone(), &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let coloring = good_coloring_from_orientation(&cyclic, &parts).unwrap();
        assert!(coloring.is_valid(&c4, &parts));
        assert_ne!(coloring.colors[&(0, 3)], coloring.colors[&(1, 2)]);

        // A source makes some induced C_4 non-cyclic.
        let source = Orientation::from_arcs(c4.clone(), &[(0, 1), (1, 2), (3, 2), (0, 3)]).unwrap();
        assert_eq!(
            good_coloring_from_orientation(&source, &parts),
            Err(Error::C4NotCyclic)
        );
    }

    #[test]
    fn coloring_from_orientation_on_join() {
        let c4 = Graph::cycle(4);
        let g = c4.join(&c4);
        let d = recognize(&g).expect("join of co-bipartite 1-p.o. graphs");
        let parts = find_clique_bipartition(&g).unwrap();
        // Any 1-perfect orientation orients induced 4-cycles cyclically.
        let coloring = good_coloring_from_orientation(&d, &parts).unwrap();
        assert!(coloring.is_valid(&g, &parts));
    }

    #[test]
    fn equivalence_reports() {
        let report = cobipartite_equivalence(&Graph::cycle(4), 24).unwrap();
        assert!(report.is_one_po && report.agree());

        let report = cobipartite_equivalence(&Graph::cycle(6).complement(), 24).unwrap();
        assert!(!report.is_one_po && report.agree());

        let report = cobipartite_equivalence(&Graph::cycle(8).complement(), 28).unwrap();
        assert!(!report.is_one_po && report.agree());

        assert_eq!(
            cobipartite_equivalence(&Graph::cycle(5), 24),
            Err(Error::NotCobipartite)
        );
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let c4 = Graph::cycle(4);
        let bad = CliqueBipartition {
            left: vec![0, 2],
            right: vec![1, 3],
        };
        assert!(bad.validate(&c4).is_err());
        assert!(good_coloring_exists(&c4, &bad).is_err());
        let incomplete = CliqueBipartition {
            left: vec![0, 1],
            right: vec![2],
        };
        assert!(incomplete.validate(&c4).is_err());
    }
}
