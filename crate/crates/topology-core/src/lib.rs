//! Finite topological spaces as explicit open families: the
//! specialization/Alexandroff correspondence, irreducible closed sets, the
//! classification predicates, fundamental-set lattices and strongly
//! continuous maps.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod fundamental;
pub mod map;
pub mod space;

pub use classify::{classify, classify_report, irreducible_closed_sets, PredicateProfile};
pub use error::TopologyError;
pub use fundamental::{fundamental_lattice, FundamentalLattice};
pub use map::{are_homeomorphic, SpaceMap};
pub use space::{alexandroff, FiniteSpace};
