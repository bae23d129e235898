use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("bound exceeded: {0}")]
    Bound(String),

    #[error("unknown audit suite `{0}` (expected roundtrip-spaces, roundtrip-lattices, adjunction, theta, ideal-embedding, symbolic-oracle or diagram)")]
    UnknownSuite(String),

    #[error("randomized suite `{0}` needs --seed")]
    MissingSeed(&'static str),

    #[error("unknown corpus kind `{0}` (expected topologies, posets, lattices or distributive-lattices)")]
    UnknownKind(String),

    #[error("{0}: {1}")]
    Io(String, std::io::Error),
}
