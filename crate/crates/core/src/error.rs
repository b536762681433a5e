use thiserror::Error;

/// Errors produced by graph construction, parsing and the certification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("{u}-{v} is an edge, expected a non-edge")]
    NotANonEdge { u: usize, v: usize },

    #[error("vertex set {0:?} is not a clique")]
    NotAClique(Vec<usize>),

    #[error("({a},{b},{c}) is not a 2-branch")]
    NotATwoBranch { a: usize, b: usize, c: usize },

    #[error("edge count {edges} exceeds the search guard {guard}")]
    GuardExceeded { edges: usize, guard: usize },

    #[error("orientation is not 1-perfect")]
    NotOnePerfect,

    #[error("graph is not 1-perfectly orientable")]
    NotOnePerfectlyOrientable,

    #[error("invalid edge clique cover: {0}")]
    InvalidCover(String),

    #[error("invalid clique bipartition: {0}")]
    InvalidBipartition(String),

    #[error("graph is not co-bipartite")]
    NotCobipartite,

    #[error("graph is not a cograph")]
    NotACograph,

    #[error("some induced 4-cycle is not oriented cyclically")]
    C4NotCyclic,

    #[error("family {family} requires k >= {min}, got {k}")]
    FamilyIndexOutOfRange {
        family: &'static str,
        k: usize,
        min: usize,
    },

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error("catalog entry {name} failed validation: {msg}")]
    CatalogValidation { name: String, msg: String },

    #[error("induced-minor search guard exceeded: pattern {h} > {max_h} or host {g} > {max_g}")]
    MinorGuardExceeded {
        h: usize,
        max_h: usize,
        g: usize,
        max_g: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
