//! Finite posets, lattices, ideals, prime ideals and lattice homomorphisms.
//!
//! Everything here is exact and deterministic: relations are stored as
//! bitmask rows, ideal enumeration is a filtered scan over all subsets,
//! and every returned list is in canonical (ascending bitmask) order so
//! repeated runs produce identical output.

pub mod enumerate;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod iso;
pub mod lattice;
pub mod mask;
pub mod preorder;

pub use error::OrderError;
pub use hom::LatticeHom;
pub use ideal::IdealSet;
pub use lattice::FiniteLattice;
pub use preorder::{FinitePoset, Preorder};
