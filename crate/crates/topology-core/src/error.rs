use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("open family does not contain the empty set")]
    MissingEmpty,

    #[error("open family does not contain the full point set")]
    MissingFull,

    #[error("open family is not closed under union: {0} ∪ {1} is missing")]
    NotClosedUnderUnion(String, String),

    #[error("open family is not closed under intersection: {0} ∩ {1} is missing")]
    NotClosedUnderIntersection(String, String),

    #[error("too many points: {0} (limit {1})")]
    TooManyPoints(usize, usize),

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown point label `{0}`")]
    UnknownLabel(String),

    #[error("map table has {got} entries for a source of {want} points")]
    MapArityMismatch { got: usize, want: usize },

    #[error("map value {0} is out of range for the target")]
    MapValueOutOfRange(usize),

    #[error("map endpoints do not match: {0}")]
    ObjectMismatch(&'static str),

    #[error("bound exceeded: {what} = {n} is over the limit {limit}")]
    BoundExceeded { what: &'static str, n: usize, limit: usize },
}
