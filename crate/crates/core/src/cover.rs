//! Certificates: vertex-indexed edge clique covers and their complement
//! (independent-set) form.
//!
//! A graph on vertices `v_0..v_{n-1}` is 1-perfectly orientable iff it has an
//! edge clique cover `{C_0..C_{n-1}}` with `v_i ∈ C_i` such that for every
//! edge `v_i v_j` either `v_i ∈ C_j` or `v_j ∈ C_i` — exclusively ("but not
//! both") or inclusively; the two variants are equivalent and both convert
//! constructively to and from 1-perfect orientations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;
use crate::recognition::recognize;

/// A family `{C_0..C_{n-1}}` of vertex sets indexed by the host's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCliqueCover {
    pub sets: Vec<BTreeSet<usize>>,
}

/// A family `{I_0..I_{n-1}}` of independent sets indexed by the host's
/// vertices, certifying that the complement is 1-p.o.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSystem {
    pub sets: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// Condition 2(b): `v_i ∈ C_j` or `v_j ∈ C_i`, but not both.
    Exclusive,
    /// Condition 3(b): `v_i ∈ C_j` or `v_j ∈ C_i`.
    Inclusive,
}

/// The cover `C_i = {v_i} ∪ N⁺(v_i)` read off a 1-perfect orientation. The
/// result has exactly `n` sets and validates in exclusive mode.
pub fn cover_from_orientation(d: &Orientation) -> Result<EdgeCliqueCover> {
    if !d.is_one_perfect() {
        return Err(Error::NotOnePerfect);
    }
    let sets = (0..d.base().n())
        .map(|v| {
            let mut set: BTreeSet<usize> = d.out_neighbors(v).collect();
            set.insert(v);
            set
        })
        .collect();
    let cover = EdgeCliqueCover { sets };
    debug_assert_eq!(
        validate_cover(d.base(), &cover, CoverMode::Exclusive),
        Ok(true)
    );
    Ok(cover)
}

/// Checks the cover conditions: every `C_i` is a clique containing `v_i`,
/// every edge lies inside some set, and the per-edge containment condition
/// holds in the requested mode. Errs only when the set count is not `n`.
pub fn validate_cover(g: &Graph, cover: &EdgeCliqueCover, mode: CoverMode) -> Result<bool> {
    let n = g.n();
    if cover.sets.len() != n {
        return Err(Error::InvalidCover(format!(
            "{} sets for a graph on {n} vertices",
            cover.sets.len()
        )));
    }
    for (i, set) in cover.sets.iter().enumerate() {
        if !set.contains(&i) {
            return Ok(false);
        }
        if set.iter().any(|&v| v >= n) {
            return Ok(false);
        }
        let verts: Vec<usize> = set.iter().copied().collect();
        if !g.is_clique(&verts) {
            return Ok(false);
        }
    }
    for (i, j) in g.edges() {
        let i_in_j = cover.sets[j].contains(&i);
        let j_in_i = cover.sets[i].contains(&j);
        let ok = match mode {
            CoverMode::Exclusive => i_in_j != j_in_i,
            CoverMode::Inclusive => i_in_j || j_in_i,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The constructive direction 3 ⇒ 1: orient each edge `v_i v_j` (`i < j`) as
/// `v_i -> v_j` when `v_j ∈ C_i` and as `v_j -> v_i` otherwise. Requires an
/// inclusively valid cover; the result is 1-perfect.
pub fn orientation_from_cover(g: &Graph, cover: &EdgeCliqueCover) -> Result<Orientation> {
    if !validate_cover(g, cover, CoverMode::Inclusive)? {
        return Err(Error::InvalidCover(
            "cover fails the inclusive validity conditions".into(),
        ));
    }
    let forward = g
        .edges()
        .iter()
        .map(|&(i, j)| cover.sets[i].contains(&j))
        .collect();
    let d = Orientation::new(g.clone(), forward);
    debug_assert!(d.is_one_perfect());
    Ok(d)
}

/// Checks that `sys` certifies `complement(g)` 1-p.o. on `g`: every `I_i` is
/// independent in `g` with `v_i ∈ I_i`, and every non-adjacent pair
/// `v_i, v_j` has `v_i ∈ I_j` or `v_j ∈ I_i`.
pub fn validate_independent_system(g: &Graph, sys: &IndependentSystem) -> bool {
    let n = g.n();
    if sys.sets.len() != n {
        return false;
    }
    for (i, set) in sys.sets.iter().enumerate() {
        if !set.contains(&i) || set.iter().any(|&v| v >= n) {
            return false;
        }
        let verts: Vec<usize> = set.iter().copied().collect();
        if !g.is_independent_set(&verts) {
            return false;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) && !sys.sets[j].contains(&i) && !sys.sets[i].contains(&j) {
                return false;
            }
        }
    }
    true
}

/// The complement form: present iff `complement(g)` is 1-p.o., in which case
/// the returned independent sets satisfy the conditions above on `g`.
pub fn independent_system_for_complement(g: &Graph) -> Option<IndependentSystem> {
    let d = recognize(&g.complement())?;
    let sets = (0..g.n())
        .map(|v| {
            let mut set: BTreeSet<usize> = d.out_neighbors(v).collect();
            set.insert(v);
            set
        })
        .collect();
    let sys = IndependentSystem { sets };
    debug_assert!(validate_independent_system(g, &sys));
    Some(sys)
}

/// Witnesses the `n`-clique edge cover bound for a 1-p.o. graph; errs when
/// the graph is not 1-p.o.
pub fn cover_count_bound_check(g: &Graph) -> Result<bool> {
    let d = recognize(g).ok_or(Error::NotOnePerfectlyOrientable)?;
    let cover = cover_from_orientation(&d)?;
    Ok(cover.sets.len() == g.n() && validate_cover(g, &cover, CoverMode::Exclusive)?)
}
