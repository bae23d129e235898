use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring axiom `{law}` fails at {witness}")]
    AxiomViolation { law: &'static str, witness: String },

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("too many elements: {0} (limit {1})")]
    TooManyElements(usize, usize),

    #[error("operation table has {got} rows for {want} elements")]
    TableArityMismatch { got: usize, want: usize },

    #[error("{0} is not an ideal: {1}")]
    NotAnIdeal(String, &'static str),

    #[error("bound exceeded: {what} = {n} is over the limit {limit}")]
    BoundExceeded { what: &'static str, n: usize, limit: usize },
}
