//! The known minimal forbidden induced minors for the class of 1-p.o.
//! graphs: two parametric families (complements of even cycles of length at
//! least 6, and complements of `K_2 + C_{2k+1}`), plus bundled adjacency data
//! for the ten sporadic members transcribed from figure data and protected by
//! validation predicates. Also desk-scale induced-minor containment and the
//! unicyclic test-corpus generator.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::recognize;

const CATALOG_DATA: &str = include_str!("../data/forbidden_catalog.dat");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Generated,
    BundledFigureData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub provenance: Provenance,
}

/// `F3(k)`: the complement of the even cycle `C_{2k}`, `k >= 3`. Co-bipartite
/// and not 1-p.o.
pub fn gen_f3(k: usize) -> Result<Graph> {
    if k < 3 {
        // complement(C_4) = 2K_2 is 1-p.o., below the family range.
        return Err(Error::FamilyIndexOutOfRange {
            family: "F3",
            k,
            min: 3,
        });
    }
    Ok(Graph::cycle(2 * k).complement())
}

/// `F4(k)`: the complement of `K_2 + C_{2k+1}`, `k >= 1`. `F4(1)` equals
/// `join(2K_1, 3K_1) = K_{2,3}` as a labeled graph.
pub fn gen_f4(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::FamilyIndexOutOfRange {
            family: "F4",
            k,
            min: 1,
        });
    }
    Ok(Graph::complete(2)
        .disjoint_union(&Graph::cycle(2 * k + 1))
        .complement())
}

/// Names of the bundled (figure-data) entries, in catalog order.
pub fn bundled_names() -> &'static [&'static str] {
    &[
        "F1", "F2", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12",
    ]
}

fn bundled_order(name: &str) -> Option<usize> {
    match name {
        "F9" => Some(9),
        "F5" | "F6" | "F7" | "F8" | "F10" => Some(10),
        "F11" | "F12" => Some(12),
        _ => None,
    }
}

fn parse_catalog_blocks() -> Result<Vec<(String, Graph)>> {
    let mut blocks = Vec::new();
    let mut name: Option<String> = None;
    let mut body = String::new();
    let flush = |name: &mut Option<String>,
                 body: &mut String,
                 out: &mut Vec<(String, Graph)>|
     -> Result<()> {
        if let Some(n) = name.take() {
            let g = crate::format::parse_edge_list(body).map_err(|e| Error::CatalogValidation {
                name: n.clone(),
                msg: e.to_string(),
            })?;
            out.push((n, g));
        }
        body.clear();
        Ok(())
    };
    for line in CATALOG_DATA.lines() {
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if let Some(block) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            flush(&mut name, &mut body, &mut blocks)?;
            name = Some(block.to_string());
        } else if name.is_some() {
            body.push_str(line);
            body.push('\n');
        }
    }
    flush(&mut name, &mut body, &mut blocks)?;
    Ok(blocks)
}

/// Loads one bundled entry and runs its validation predicate: `F1`, `F2` are
/// triangle-free with more edges than vertices; `F5`..`F12` are co-bipartite
/// with recorded orders (10,10,10,10,9,10,12,12); every entry must fail
/// recognition. A failure signals a transcription error in the data file.
pub fn load_bundled(name: &str) -> Result<CatalogEntry> {
    if !bundled_names().contains(&name) {
        return Err(Error::UnknownCatalogEntry(name.to_string()));
    }
    let blocks = parse_catalog_blocks()?;
    let (_, graph) =
        blocks
            .into_iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| Error::CatalogValidation {
                name: name.to_string(),
                msg: "entry missing from data file".into(),
            })?;
    let fail = |msg: &str| -> Error {
        Error::CatalogValidation {
            name: name.to_string(),
            msg: msg.to_string(),
        }
    };
    match name {
        "F1" | "F2" => {
            if graph.has_triangle() {
                return Err(fail("expected triangle-free"));
            }
            if graph.edge_count() <= graph.n() {
                return Err(fail("expected more edges than vertices"));
            }
        }
        _ => {
            let expected = bundled_order(name).unwrap();
            if graph.n() != expected {
                return Err(fail(&format!(
                    "expected {expected} vertices, found {}",
                    graph.n()
                )));
            }
            if crate::cobipartite::find_clique_bipartition(&graph).is_none() {
                return Err(fail("expected a co-bipartite graph"));
            }
        }
    }
    if recognize(&graph).is_some() {
        return Err(fail("expected a non-1-p.o. graph"));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        graph,
        provenance: Provenance::BundledFigureData,
    })
}

pub fn load_all_bundled() -> Result<Vec<CatalogEntry>> {
    bundled_names().iter().map(|n| load_bundled(n)).collect()
}

/// Resolves a catalog name (generated families take the parameter `k`).
pub fn emit(name: &str, k: Option<usize>) -> Result<CatalogEntry> {
    match name {
        "F3" => {
            let k = k.ok_or_else(|| Error::UnknownCatalogEntry("F3 requires --k".into()))?;
            Ok(CatalogEntry {
                name: format!("F3({k})"),
                graph: gen_f3(k)?,
                provenance: Provenance::Generated,
            })
        }
        "F4" => {
            let k = k.ok_or_else(|| Error::UnknownCatalogEntry("F4 requires --k".into()))?;
            Ok(CatalogEntry {
                name: format!("F4({k})"),
                graph: gen_f4(k)?,
                provenance: Provenance::Generated,
            })
        }
        other => load_bundled(other),
    }
}

/// Verdict of the one-step minimality check: the graph itself must fail
/// recognition while every single vertex deletion and every single edge
/// contraction is 1-p.o. Since the class is closed under induced minors,
/// this certifies minimality among forbidden induced minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub parent_one_po: bool,
    pub deletions: Vec<(usize, bool)>,
    pub contractions: Vec<((usize, usize), bool)>,
}

impl MinimalityReport {
    pub fn is_minimal_forbidden(&self) -> bool {
        !self.parent_one_po
            && self.deletions.iter().all(|&(_, po)| po)
            && self.contractions.iter().all(|&(_, po)| po)
    }
}

pub fn verify_minimal_forbidden(g: &Graph) -> MinimalityReport {
    let parent_one_po = recognize(g).is_some();
    let deletions = (0..g.n())
        .map(|v| (v, recognize(&g.delete_vertex(v).unwrap()).is_some()))
        .collect();
    let contractions = g
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), recognize(&g.contract_edge(u, v).unwrap()).is_some()))
        .collect();
    MinimalityReport {
        parent_one_po,
        deletions,
        contractions,
    }
}

/// Guards for the induced-minor embedding search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorGuard {
    pub max_pattern: usize,
    pub max_host: usize,
}

impl Default for MinorGuard {
    fn default() -> Self {
        MinorGuard {
            max_pattern: 6,
            max_host: 12,
        }
    }
}

/// An induced-minor model: `parts[i]` is the connected branch set realizing
/// pattern vertex `i`.
pub type MinorWitness = Vec<Vec<usize>>;

/// Searches for `h` as an induced minor of `g`: disjoint connected branch
/// sets, one per pattern vertex, adjacent (some cross edge) exactly when the
/// pattern vertices are adjacent. Vertex deletions are the unused vertices;
/// contractions collapse each branch set.
pub fn contains_induced_minor(
    g: &Graph,
    h: &Graph,
    guard: MinorGuard,
) -> Result<Option<MinorWitness>> {
    if h.n() > guard.max_pattern || g.n() > guard.max_host || g.n() > 64 {
        return Err(Error::MinorGuardExceeded {
            h: h.n(),
            max_h: guard.max_pattern,
            g: g.n(),
            max_g: guard.max_host.min(64),
        });
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    if h.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let adj: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut parts: Vec<u64> = Vec::with_capacity(h.n());
    let avail = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    if place_branch_sets(&adj, h, avail, &mut parts) {
        let witness = parts
            .iter()
            .map(|&mask| (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect())
            .collect();
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let seed = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << seed;
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v] & mask;
        }
        if grown == seen {
            break;
        }
        seen = grown;
    }
    seen == mask
}

fn parts_touch(adj: &[u64], a: u64, b: u64) -> bool {
    let mut rest = a;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & b != 0 {
            return true;
        }
    }
    false
}

fn place_branch_sets(adj: &[u64], h: &Graph, avail: u64, parts: &mut Vec<u64>) -> bool {
    let i = parts.len();
    if i == h.n() {
        return true;
    }
    if (avail.count_ones() as usize) < h.n() - i {
        return false;
    }
    // Standard submask walk over the available vertices.
    let mut sub = avail;
    while sub != 0 {
        let candidate = sub;
        sub = (sub - 1) & avail;
        if !mask_connected(adj, candidate) {
            continue;
        }
        let consistent = (0..i).all(|j| parts_touch(adj, parts[j], candidate) == h.has_edge(j, i));
        if !consistent {
            continue;
        }
        parts.push(candidate);
        if place_branch_sets(adj, h, avail & !candidate, parts) {
            return true;
        }
        parts.pop();
    }
    false
}

/// Random tree on `n` vertices by uniform attachment.
pub fn gen_random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v);
    }
    g
}

/// Random unicyclic graph: a random tree plus one random non-edge
/// (`n >= 3`). Unicyclic graphs are all 1-p.o., which makes this a test
/// corpus source for known positives.
pub fn gen_unicyclic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3, "unicyclic graphs need at least 3 vertices");
    let mut g = gen_random_tree(n, rng);
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u.min(v), u.max(v));
            return g;
        }
    }
}
