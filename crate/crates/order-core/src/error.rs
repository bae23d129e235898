use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("too many elements: {0} (limit {1})")]
    TooManyElements(usize, usize),

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),

    #[error("relation is not transitive: `{0}` ≤ `{1}` ≤ `{2}` but not `{0}` ≤ `{2}`")]
    NotTransitive(String, String, String),

    #[error("relation is not antisymmetric: `{0}` and `{1}` are distinct but equivalent")]
    NotAntisymmetric(String, String),

    #[error("not a lattice: `{a}` and `{b}` have no {kind}")]
    NotALattice { a: String, b: String, kind: &'static str },

    #[error("not a lattice homomorphism: fails to preserve {kind} of `{a}` and `{b}`")]
    NotAHomomorphism { a: String, b: String, kind: &'static str },

    #[error("map table has {got} entries for a source of {want} elements")]
    MapArityMismatch { got: usize, want: usize },

    #[error("map value {0} is out of range for the target")]
    MapValueOutOfRange(usize),

    #[error("subset {0:#b} is not an ideal: {1}")]
    NotAnIdeal(u64, &'static str),

    #[error("bound exceeded: {what} = {n} is over the limit {limit}")]
    BoundExceeded { what: &'static str, n: usize, limit: usize },

    #[error("homomorphism endpoints do not match: {0}")]
    ObjectMismatch(&'static str),
}
