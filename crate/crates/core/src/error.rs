use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("representation does not satisfy the axioms: {0}")]
    InvalidRepresentation(String),

    #[error("structure is not a compatible pre-Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("cochain pair is not closed: {0}")]
    NotCocycle(String),

    #[error("operator is not Nijenhuis: {0}")]
    NotNijenhuis(String),

    #[error("map is not a section of the extension: {0}")]
    NotSection(String),

    #[error("formal deformation fails its order-{0} equations")]
    FormalCheckFailed(usize),

    #[error("comparison map is not a witness: {0}")]
    NotWitness(String),

    #[error("malformed block signature: {0}")]
    BlockSignature(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
