//! The contravariant functors `spec` and `F` on objects and morphisms,
//! the comparison maps `h` and `d`, the adjunction bijection `λ` with its
//! naturality squares, and round-trip audits for both composites.

pub mod adjunction;
pub mod audits;
pub mod error;
pub mod functors;
pub mod maps;
pub mod spectrum;

pub use adjunction::{adjunction_audit, adjunction_audit_with_endos, lambda, lambda_inverse, AdjunctionReport};
pub use audits::{open_embedding_audit, roundtrip_lattice_audit, roundtrip_space_audit};
pub use error::DualityError;
pub use functors::{f_of_map, spec_hom};
pub use maps::{d_map, h_map, DMap, HMap};
pub use spectrum::{spec_lattice, SpectrumSpace};
