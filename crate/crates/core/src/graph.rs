//! Finite simple undirected graphs on labeled vertices `0..n`, together with
//! the construction operators used throughout the library: complement,
//! deletion, contraction, co-contraction, disjoint union, join, twin /
//! simplicial / universal vertex additions, 2-branch duplication and
//! chordless cycle enumeration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph with vertices `0..n`.
///
/// Adjacency is stored symmetrically; self-loops and parallel edges cannot be
/// represented. Values are immutable once built (all operators return new
/// graphs), so sharing them across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::Parse {
                line: 0,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if self.adj[u].contains(&v) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("duplicate edge {u}-{v}"),
            });
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Inserts an edge, ignoring the request if it is already present.
    /// Panics on out-of-range endpoints or self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v}");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent_set(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if the graph is
    /// bipartite, with the smallest vertex of every component colored `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.adj[u].intersection(&self.adj[v]).next().is_some())
    }

    /// Induced subgraph on `keep` (which must be sorted and duplicate-free);
    /// vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let index = |x: usize| keep.binary_search(&x).ok();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for &w in self.adj[u].range(u + 1..) {
                if let Some(j) = index(w) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    // ----- construction operators -----

    /// The complement graph: distinct vertices adjacent iff not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(&v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Deletes vertex `v`; remaining labels compact to `0..n-1` preserving
    /// relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        Ok(self.induced(&keep))
    }

    /// Contracts the edge `uv`. The merged vertex is adjacent to every former
    /// neighbor of `u` or `v`, takes the smaller of the two freed labels, and
    /// the remaining labels compact preserving relative order.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let relabel = |x: usize| if x < hi { x } else { x - 1 };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if (a == lo && b == hi) || (a == hi && b == lo) {
                continue;
            }
            let a2 = if a == hi { lo } else { a };
            let b2 = if b == hi { lo } else { b };
            let (a2, b2) = (relabel(a2), relabel(b2));
            if a2 != b2 {
                g.add_edge(a2, b2);
            }
        }
        Ok(g)
    }

    /// Identifies the non-adjacent vertices `u` and `v`; the merged vertex is
    /// adjacent exactly to their common neighbors. Complement-dual of edge
    /// contraction: `g.co_contract(u,v)` equals
    /// `g.complement().contract_edge(u,v).complement()`.
    pub fn co_contract(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v || self.has_edge(u, v) {
            return Err(Error::NotANonEdge { u, v });
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let relabel = |x: usize| if x < hi { x } else { x - 1 };
        let common: BTreeSet<usize> = self.adj[lo].intersection(&self.adj[hi]).copied().collect();
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a == lo || a == hi || b == lo || b == hi {
                continue;
            }
            g.add_edge(relabel(a), relabel(b));
        }
        for &x in &common {
            g.add_edge(relabel(x), lo);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Adds a true twin of `w`: the new vertex `n` satisfies
    /// `N[new] = N[w] ∪ {new}`.
    pub fn add_true_twin(&self, w: usize) -> Result<Graph> {
        if w >= self.n {
            return Err(Error::VertexOutOfRange { v: w, n: self.n });
        }
        let mut g = self.clone();
        g.n += 1;
        g.adj.push(BTreeSet::new());
        let nbrs: Vec<usize> = self.adj[w].iter().copied().collect();
        for x in nbrs {
            g.add_edge(self.n, x);
        }
        g.add_edge(self.n, w);
        Ok(g)
    }

    /// Adds a simplicial vertex adjacent exactly to the clique `s`.
    pub fn add_simplicial(&self, s: &[usize]) -> Result<Graph> {
        for &v in s {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        if !self.is_clique(s) {
            return Err(Error::NotAClique(s.to_vec()));
        }
        let mut g = self.clone();
        g.n += 1;
        g.adj.push(BTreeSet::new());
        for &x in s {
            g.add_edge(self.n, x);
        }
        Ok(g)
    }

    /// Adds a universal vertex adjacent to all existing vertices.
    pub fn add_universal(&self) -> Graph {
        let mut g = self.clone();
        g.n += 1;
        g.adj.push(BTreeSet::new());
        for x in 0..self.n {
            g.add_edge(self.n, x);
        }
        g
    }

    /// Checks that `(a,b,c)` is a 2-branch: a path with `d(b) = 2`, `d(c) = 1`
    /// and `ac` a non-edge.
    pub fn validate_two_branch(&self, br: TwoBranch) -> Result<()> {
        let TwoBranch { a, b, c } = br;
        for &v in &[a, b, c] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let ok = a != b
            && b != c
            && a != c
            && self.has_edge(a, b)
            && self.has_edge(b, c)
            && !self.has_edge(a, c)
            && self.degree(b) == 2
            && self.degree(c) == 1;
        if ok {
            Ok(())
        } else {
            Err(Error::NotATwoBranch { a, b, c })
        }
    }

    /// Duplicates the 2-branch `(a,b,c)`: adds `b' = n` and `c' = n+1` so that
    /// `(a,b',c')` is a 2-branch of the result and removing `{b',c'}` gives
    /// back this graph.
    pub fn duplicate_two_branch(&self, br: TwoBranch) -> Result<Graph> {
        self.validate_two_branch(br)?;
        let mut g = self.clone();
        g.n += 2;
        g.adj.push(BTreeSet::new());
        g.adj.push(BTreeSet::new());
        g.add_edge(br.a, self.n);
        g.add_edge(self.n, self.n + 1);
        Ok(g)
    }

    /// All 2-branches of the graph, lexicographically by `(a, b, c)`.
    pub fn two_branches(&self) -> Vec<TwoBranch> {
        let mut out = Vec::new();
        for b in 0..self.n {
            if self.degree(b) != 2 {
                continue;
            }
            let nb: Vec<usize> = self.neighbors(b).collect();
            for (x, y) in [(nb[0], nb[1]), (nb[1], nb[0])] {
                // x plays a, y plays c
                if self.degree(y) == 1 && !self.has_edge(x, y) {
                    out.push(TwoBranch { a: x, b, c: y });
                }
            }
        }
        out.sort_unstable_by_key(|br| (br.a, br.b, br.c));
        out
    }

    /// Enumerates the chordless (induced) cycles of length at least
    /// `min_len >= 3`. Every such cycle is reported exactly once, as the
    /// vertex sequence starting at its smallest vertex and continuing toward
    /// the smaller of that vertex's two cycle neighbors.
    pub fn chordless_cycles(&self, min_len: usize) -> Vec<Vec<usize>> {
        assert!(min_len >= 3, "cycles have at least 3 vertices");
        let mut found = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            self.chordless_dfs(s, min_len, &mut path, &mut on_path, &mut found);
            on_path[s] = false;
        }
        found
    }

    fn chordless_dfs(
        &self,
        s: usize,
        min_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w <= s || on_path[w] {
                continue;
            }
            // Induced path invariant: w may touch the path only at `last`
            // (and possibly close the cycle at `s`).
            let chord =
                path.len() >= 2 && path[1..path.len() - 1].iter().any(|&p| self.has_edge(w, p));
            if chord {
                continue;
            }
            if self.has_edge(w, s) {
                // Closing the cycle; report each cycle once per direction.
                if path.len() + 1 >= min_len && path.len() >= 2 && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    found.push(cycle);
                }
                if path.len() == 1 {
                    // A path of two vertices: continue so triangles and longer
                    // cycles through s-w are explored from the other side.
                    path.push(w);
                    on_path[w] = true;
                    self.chordless_dfs(s, min_len, path, on_path, found);
                    on_path[w] = false;
                    path.pop();
                }
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.chordless_dfs(s, min_len, path, on_path, found);
            on_path[w] = false;
            path.pop();
        }
    }

    // ----- named families -----

    pub fn path_graph(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles have at least 3 vertices");
        let mut g = Graph::path_graph(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b))
    }

    /// `m` disjoint edges (a perfect matching on `2m` vertices, pairing
    /// `2i` with `2i+1`).
    pub fn matching(m: usize) -> Graph {
        let mut g = Graph::empty(2 * m);
        for i in 0..m {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }
}

/// A path `(a, b, c)` with `d(b) = 2` and `d(c) = 1`, rooted at `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoBranch {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}
