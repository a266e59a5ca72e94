use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degenerate parameters for {family}: {params}")]
    DegenerateParams { family: String, params: String },

    #[error("operation needs a non-trivial lattice")]
    TrivialLattice,

    #[error("vector {0} is not commensurable with the lattice")]
    IncommensurableVector(String),

    #[error("coset enumeration still growing at word bound {bound} ({cosets} cosets)")]
    NoClosure { bound: usize, cosets: usize },

    #[error("refuted: {reason} (witness: {witness})")]
    Refuted { reason: String, witness: String },

    #[error("{0} is not a vertex of the polyhedron")]
    NotAVertex(String),

    #[error("the star of vertex {0} is ambiguous: several combinatorial vertices share that position")]
    AmbiguousVertex(String),

    #[error("operation {op} does not apply to family {family}")]
    UnsupportedSource { op: String, family: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
