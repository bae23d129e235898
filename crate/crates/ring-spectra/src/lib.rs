//! Finite commutative rings (with or without identity), their ideals and
//! prime ideals, Zariski spectra, quotients with the `θ` homeomorphism,
//! and Dorroh-style unitalization with the open-embedding audit.

pub mod dorroh;
pub mod error;
pub mod ideal;
pub mod quotient;
pub mod ring;
pub mod spectrum;

pub use dorroh::{dorroh, ideal_embedding_audit, EmbeddingReport};
pub use error::RingError;
pub use ideal::{enumerate_ideals, enumerate_prime_ideals, RingIdeal};
pub use quotient::{quotient, theta_audit, QuotientRing, ThetaReport};
pub use ring::FiniteCommRing;
pub use spectrum::{basic_open_identities, spec_ring, RingSpectrum};
