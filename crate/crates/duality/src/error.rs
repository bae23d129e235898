use order_core::OrderError;
use thiserror::Error;
use topology_core::TopologyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("homomorphism is not proper: the preimage of prime ideal {0} is not prime")]
    NotProper(String),

    #[error("map is not strongly continuous")]
    NotStronglyContinuous,

    #[error("objects do not line up: {0}")]
    ObjectMismatch(&'static str),

    #[error("bound exceeded: {what} = {n} is over the limit {limit}")]
    BoundExceeded { what: &'static str, n: usize, limit: usize },

    #[error(transparent)]
    Order(#[from] OrderError),

    #[error(transparent)]
    Topology(#[from] TopologyError),
}
