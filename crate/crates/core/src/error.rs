use thiserror::Error;

/// Errors surfaced by construction and claim evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mass must be strictly positive, got {0}")]
    InvalidMass(f64),
    #[error("gamma index out of range: {0}")]
    BadIndex(usize),
    #[error("sigma({0},{0}) is the zero generator")]
    ZeroGenerator(usize),
    #[error("helicity operator needs nonzero spatial momentum")]
    ZeroMomentum,
    #[error("helicity check requires momentum along the z axis")]
    NotAlongZ,
    #[error("field terms carry mixed momenta")]
    MixedMomenta,
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("no claim matches filter `{0}`")]
    NoClaimsMatched(String),
    #[error("bracket table is incomplete: [{0}, {1}] undefined")]
    IncompleteTable(String, String),
    #[error("bracket table parse error at line {line}: {msg}")]
    TableParse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("report serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
