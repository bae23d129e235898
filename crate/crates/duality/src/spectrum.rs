//! Prime spectra of finite lattices with their basic-open map `d`.

use order_core::ideal::{enumerate_prime_ideals, IdealSet};
use order_core::lattice::FiniteLattice;
use order_core::mask::{self, Mask};
use topology_core::space::FiniteSpace;

/// The spectrum of a lattice: a finite space whose points are the prime
/// ideals (labelled by their carriers, in ascending bitmask order), plus
/// the basic open `d(a)` for every lattice element `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpace {
    pub space: FiniteSpace,
    pub primes: Vec<IdealSet>,
    /// `basis_map[a] = { i : a ∉ primes[i] }`, a mask over spectrum points.
    pub basis_map: Vec<Mask>,
}

impl SpectrumSpace {
    pub fn n_points(&self) -> usize {
        self.primes.len()
    }

    /// Index of a prime ideal given by its carrier mask.
    pub fn point_of_prime(&self, prime_mask: Mask) -> Option<usize> {
        self.primes.binary_search_by_key(&prime_mask, |p| p.mask).ok()
    }
}

/// Computes `spec(L)`: points are the prime ideals, opens are the unions
/// of the `d(a)`.
///
/// `d` is a lattice homomorphism into the powerset of the spectrum
/// (`d(a∧b) = d(a)∩d(b)`, `d(a∨b) = d(a)∪d(b)`), with `d(0) = ∅` and
/// `d(1)` the whole spectrum; these identities are re-checked here.
pub fn spec_lattice(l: &FiniteLattice) -> SpectrumSpace {
    let primes = enumerate_prime_ideals(l);
    let k = primes.len();
    let basis_map: Vec<Mask> = (0..l.n())
        .map(|a| {
            let mut m = 0;
            for (i, p) in primes.iter().enumerate() {
                if !mask::has(p.mask, a) {
                    m |= mask::bit(i);
                }
            }
            m
        })
        .collect();

    for a in 0..l.n() {
        for b in 0..l.n() {
            debug_assert_eq!(basis_map[l.meet(a, b)], basis_map[a] & basis_map[b]);
            debug_assert_eq!(basis_map[l.join(a, b)], basis_map[a] | basis_map[b]);
        }
    }
    debug_assert_eq!(basis_map[l.min()], 0);
    debug_assert_eq!(basis_map[l.max()], mask::full(k));

    // opens of the generated topology: the S where every point has a basic
    // neighbourhood inside S
    let opens: Vec<Mask> = (0..(1u64 << k))
        .filter(|&s| {
            mask::iter(s).all(|p| basis_map.iter().any(|&d| mask::has(d, p) && d & !s == 0))
        })
        .collect();

    let labels: Vec<String> = primes.iter().map(|p| p.render(l)).collect();
    let space = FiniteSpace::new(labels, opens).expect("basis unions satisfy the axioms");
    SpectrumSpace { space, primes, basis_map }
}
