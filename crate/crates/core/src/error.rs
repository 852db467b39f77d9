use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid basis index: {0}")]
    InvalidBasisIndex(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("complex has nonzero curvature: {0}")]
    NonzeroCurvature(String),

    #[error("braid parse error at position {pos}: {msg}")]
    BraidParse { pos: usize, msg: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("window error: {0}")]
    Window(String),

    #[error("recursion bound exceeded in skein evaluation")]
    SkeinRecursionBound,
}
