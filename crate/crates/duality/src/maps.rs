//! The comparison maps `h_X : X → spec(F(X))` and `d : L → F(spec(L))`.

use crate::spectrum::{spec_lattice, SpectrumSpace};
use order_core::hom::LatticeHom;
use order_core::lattice::FiniteLattice;
use order_core::mask::{self, Mask};
use topology_core::fundamental::{fundamental_lattice, FundamentalLattice};
use topology_core::map::SpaceMap;
use topology_core::space::FiniteSpace;

/// `h_X` together with the structures it connects.
#[derive(Debug, Clone)]
pub struct HMap {
    pub fundamental: FundamentalLattice,
    pub spectrum: SpectrumSpace,
    pub map: SpaceMap,
}

/// Sends `x` to `{F ∈ F(X) : x ∉ F}`.
///
/// Construction re-verifies the facts the rest of the crate relies on:
/// every image is a prime ideal of `F(X)`, the preimage of the basic open
/// `d(F)` is `F` itself for every non-empty fundamental `F`, and the map
/// is strongly continuous.
pub fn h_map(x: &FiniteSpace) -> HMap {
    let fundamental = fundamental_lattice(x);
    let spectrum = spec_lattice(&fundamental.lattice);
    let table: Vec<usize> = (0..x.n_points())
        .map(|p| {
            let mut ideal: Mask = 0;
            for (i, &open) in fundamental.open_masks.iter().enumerate() {
                if !mask::has(open, p) {
                    ideal |= mask::bit(i);
                }
            }
            spectrum
                .point_of_prime(ideal)
                .expect("the fundamental sets missing a point form a prime ideal")
        })
        .collect();
    let map = SpaceMap::new(x.clone(), spectrum.space.clone(), table).expect("total by construction");

    for (i, &open) in fundamental.open_masks.iter().enumerate() {
        if open != 0 {
            assert_eq!(
                map.preimage(spectrum.basis_map[i]),
                open,
                "h pulls d(F) back to F"
            );
        }
    }
    assert!(map.is_strongly_continuous(), "h is strongly continuous");

    HMap { fundamental, spectrum, map }
}

/// `d` together with the structures it connects.
#[derive(Debug, Clone)]
pub struct DMap {
    pub spectrum: SpectrumSpace,
    pub fundamental: FundamentalLattice,
    pub hom: LatticeHom,
}

/// Sends `a` to the basic open `d(a)`, viewed as an element of
/// `F(spec(L))`. Injective exactly when `L` is distributive; an
/// isomorphism in that case.
pub fn d_map(l: &FiniteLattice) -> DMap {
    let spectrum = spec_lattice(l);
    let fundamental = fundamental_lattice(&spectrum.space);
    let table: Vec<usize> = (0..l.n())
        .map(|a| {
            fundamental
                .element_of_open(spectrum.basis_map[a])
                .expect("every d(a) is an open of the spectrum")
        })
        .collect();
    let hom = LatticeHom::new(l.clone(), fundamental.lattice.clone(), table)
        .expect("d preserves meets and joins");
    DMap { spectrum, fundamental, hom }
}

impl DMap {
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.hom.map.iter().all(|&v| seen.insert(v))
    }

    pub fn is_surjective(&self) -> bool {
        let targets: std::collections::BTreeSet<usize> = self.hom.map.iter().copied().collect();
        targets.len() == self.fundamental.lattice.n()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}
