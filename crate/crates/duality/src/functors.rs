//! `spec` and `F` on morphisms: contravariant functor actions.

use crate::error::DualityError;
use crate::spectrum::{spec_lattice, SpectrumSpace};
use order_core::hom::LatticeHom;
use order_core::mask;
use topology_core::fundamental::fundamental_lattice;
use topology_core::map::SpaceMap;

/// `spec(α) : spec(M) → spec(L)` for `α : L → M`, sending a prime ideal to
/// its preimage. Fails with [`DualityError::NotProper`] when some preimage
/// is not prime.
pub fn spec_hom(alpha: &LatticeHom) -> Result<SpaceMap, DualityError> {
    let spec_source = spec_lattice(&alpha.source);
    let spec_target = spec_lattice(&alpha.target);
    spec_hom_between(alpha, &spec_target, &spec_source)
}

/// Same as [`spec_hom`] with precomputed spectra (`spec_target` is the
/// spectrum of `alpha.target`, the domain of the resulting map).
pub fn spec_hom_between(
    alpha: &LatticeHom,
    spec_target: &SpectrumSpace,
    spec_source: &SpectrumSpace,
) -> Result<SpaceMap, DualityError> {
    let mut table = Vec::with_capacity(spec_target.n_points());
    for p in &spec_target.primes {
        let pre = alpha.preimage(p.mask);
        let idx = spec_source
            .point_of_prime(pre)
            .ok_or_else(|| DualityError::NotProper(mask::render(p.mask, alpha.target.labels())))?;
        table.push(idx);
    }
    let map = SpaceMap::new(spec_target.space.clone(), spec_source.space.clone(), table)
        .expect("total by construction");
    debug_assert!(map.is_strongly_continuous(), "spec of a proper hom is strongly continuous");
    Ok(map)
}

/// `F(f) : F(Y) → F(X)` for `f : X → Y`, sending a fundamental set to its
/// preimage. Fails when `f` is not strongly continuous.
pub fn f_of_map(f: &SpaceMap) -> Result<LatticeHom, DualityError> {
    if !f.is_strongly_continuous() {
        return Err(DualityError::NotStronglyContinuous);
    }
    let fy = fundamental_lattice(&f.target);
    let fx = fundamental_lattice(&f.source);
    let table: Vec<usize> = fy
        .open_masks
        .iter()
        .map(|&v| fx.element_of_open(f.preimage(v)).expect("preimages of opens are open"))
        .collect();
    let hom = LatticeHom::new(fy.lattice, fx.lattice, table)
        .expect("preimage preserves unions and intersections");
    debug_assert!(hom.is_proper(), "F of a strongly continuous map is proper");
    Ok(hom)
}
