//! Round-trip audits for the two functor composites and the open-embedding
//! picture behind `add_top`.

use crate::maps::{d_map, h_map};
use crate::spectrum::spec_lattice;
use order_core::lattice::{lattices_isomorphic, FiniteLattice};
use order_core::mask::{self, Mask};
use topology_core::classify::classify;
use topology_core::map::SpaceMap;
use topology_core::space::FiniteSpace;
use topology_core::PredicateProfile;

/// Outcome of auditing `spec(F(X))` against `X` with `h` as the witness.
#[derive(Debug, Clone)]
pub struct SpaceRoundtrip {
    pub profile: PredicateProfile,
    /// `t0 ∧ almost_sober`: exactly when `h` must be a homeomorphism.
    pub expected_homeomorphism: bool,
    pub h_injective: bool,
    pub h_surjective: bool,
    pub h_homeomorphism: bool,
}

impl SpaceRoundtrip {
    pub fn ok(&self) -> bool {
        self.h_homeomorphism == self.expected_homeomorphism
            && self.h_injective == self.profile.t0
            && self.h_surjective == self.profile.almost_sober
    }
}

pub fn roundtrip_space_audit(x: &FiniteSpace) -> SpaceRoundtrip {
    let profile = classify(x);
    let h = h_map(x);
    SpaceRoundtrip {
        profile,
        expected_homeomorphism: profile.t0 && profile.almost_sober,
        h_injective: h.map.is_injective(),
        h_surjective: h.map.is_surjective(),
        h_homeomorphism: h.map.is_homeomorphism(),
    }
}

/// Outcome of auditing `F(spec(L))` against `L` with `d` as the witness.
#[derive(Debug, Clone)]
pub struct LatticeRoundtrip {
    pub distributive: bool,
    pub d_injective: bool,
    pub d_isomorphism: bool,
    pub iso_witness_found: bool,
}

impl LatticeRoundtrip {
    pub fn ok(&self) -> bool {
        self.d_injective == self.distributive
            && self.d_isomorphism == self.distributive
            && (!self.distributive || self.iso_witness_found)
    }
}

pub fn roundtrip_lattice_audit(l: &FiniteLattice) -> LatticeRoundtrip {
    let d = d_map(l);
    LatticeRoundtrip {
        distributive: l.is_distributive(),
        d_injective: d.is_injective(),
        d_isomorphism: d.is_isomorphism(),
        iso_witness_found: lattices_isomorphic(&d.fundamental.lattice, l).is_some(),
    }
}

/// Outcome of embedding `spec(L)` as an open subspace of `spec(L ⤮ Θ)`.
#[derive(Debug, Clone)]
pub struct OpenEmbedding {
    /// Image of the embedding, as a point mask inside `spec(add_top(L))`.
    pub witness_open: Mask,
    pub image_is_open: bool,
    pub homeomorphic_onto_image: bool,
}

impl OpenEmbedding {
    pub fn ok(&self) -> bool {
        self.image_is_open && self.homeomorphic_onto_image
    }
}

/// A prime ideal of `L` is still prime in `add_top(L)` (the added top never
/// sits in a proper ideal), which embeds `spec(L)` into `spec(add_top(L))`;
/// the audit verifies the image is open and the embedding is a
/// homeomorphism onto the subspace.
pub fn open_embedding_audit(l: &FiniteLattice) -> OpenEmbedding {
    let spec_l = spec_lattice(l);
    let lhat = l.add_top();
    let spec_lhat = spec_lattice(&lhat);

    // l's elements keep their indices inside add_top(l)
    let positions: Vec<usize> = spec_l
        .primes
        .iter()
        .map(|p| spec_lhat.point_of_prime(p.mask).expect("primes of L persist in L̂"))
        .collect();
    let witness_open: Mask = positions.iter().fold(0, |acc, &i| acc | mask::bit(i));
    let image_is_open = spec_lhat.space.is_open(witness_open);

    let subspace = spec_lhat.space.subspace(witness_open);
    let kept: Vec<usize> = mask::iter(witness_open).collect();
    let table: Vec<usize> = positions
        .iter()
        .map(|&p| kept.iter().position(|&o| o == p).expect("position inside the subspace"))
        .collect();
    let homeomorphic_onto_image = SpaceMap::new(spec_l.space.clone(), subspace, table)
        .map(|f| f.is_homeomorphism())
        .unwrap_or(false);

    OpenEmbedding { witness_open, image_is_open, homeomorphic_onto_image }
}
