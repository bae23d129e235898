//! Exhaustive corpus of labelled topologies (via the preorder bijection).

use crate::error::TopologyError;
use crate::space::{alexandroff, FiniteSpace};
use order_core::enumerate::labeled_preorders;

/// All topologies on `n` labelled points. Finite topologies correspond
/// bijectively to preorders, so this maps the preorder corpus through the
/// Alexandroff construction. Guarded at 5 points.
pub fn labeled_topologies(n: usize) -> Result<Vec<FiniteSpace>, TopologyError> {
    let preorders = labeled_preorders(n).map_err(|_| TopologyError::BoundExceeded {
        what: "labelled points",
        n,
        limit: order_core::enumerate::LABELED_SCAN_LIMIT,
    })?;
    Ok(preorders.iter().map(alexandroff).collect())
}
