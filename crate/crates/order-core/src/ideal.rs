//! Ideals and prime ideals of a finite lattice.
//!
//! Ideals are bitmasks over element positions. Enumeration is a filtered
//! scan of all `2^n` subsets; the scan is guarded at `n ≤ 20`.

use crate::error::OrderError;
use crate::lattice::FiniteLattice;
use crate::mask::{self, Mask};

/// Element count above which the subset scan refuses to run.
pub const SUBSET_SCAN_LIMIT: usize = 20;

/// A validated ideal of some lattice, tagged with its primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealSet {
    pub mask: Mask,
    pub prime: bool,
}

impl IdealSet {
    /// Validates the ideal axioms for `mask` in `lattice` and computes the
    /// prime flag.
    pub fn from_mask(lattice: &FiniteLattice, m: Mask) -> Result<IdealSet, OrderError> {
        if m == 0 {
            return Err(OrderError::NotAnIdeal(m, "empty"));
        }
        if !is_down_closed(lattice, m) {
            return Err(OrderError::NotAnIdeal(m, "not downward closed"));
        }
        if !is_join_closed(lattice, m) {
            return Err(OrderError::NotAnIdeal(m, "not closed under joins"));
        }
        Ok(IdealSet { mask: m, prime: is_prime_ideal_mask(lattice, m) })
    }

    pub fn render(&self, lattice: &FiniteLattice) -> String {
        mask::render(self.mask, lattice.labels())
    }
}

fn is_down_closed(l: &FiniteLattice, m: Mask) -> bool {
    mask::iter(m).all(|i| l.poset().down_mask(i) & !m == 0)
}

fn is_join_closed(l: &FiniteLattice, m: Mask) -> bool {
    for i in mask::iter(m) {
        for j in mask::iter(m) {
            if j > i {
                break;
            }
            if !mask::has(m, l.join(i, j)) {
                return false;
            }
        }
    }
    true
}

pub fn is_ideal_mask(l: &FiniteLattice, m: Mask) -> bool {
    m != 0 && is_down_closed(l, m) && is_join_closed(l, m)
}

/// Proper ideal with `a ∧ b ∈ I ⇒ a ∈ I or b ∈ I`.
///
/// The membership condition is checked in contrapositive form over the
/// complement, which exits early on the common case.
pub fn is_prime_ideal_mask(l: &FiniteLattice, m: Mask) -> bool {
    if !is_ideal_mask(l, m) || m == mask::full(l.n()) {
        return false;
    }
    let outside = mask::full(l.n()) & !m;
    for a in mask::iter(outside) {
        for b in mask::iter(outside) {
            if b > a {
                break;
            }
            if mask::has(m, l.meet(a, b)) {
                return false;
            }
        }
    }
    true
}

/// The principal ideal `↓a`.
pub fn principal_ideal(l: &FiniteLattice, a: usize) -> Mask {
    l.poset().down_mask(a)
}

/// All prime ideals of `lattice`, sorted by ascending bitmask value.
///
/// Panics if the lattice has more than [`SUBSET_SCAN_LIMIT`] elements.
pub fn enumerate_prime_ideals(lattice: &FiniteLattice) -> Vec<IdealSet> {
    let n = lattice.n();
    assert!(
        n <= SUBSET_SCAN_LIMIT,
        "prime ideal scan over 2^{n} subsets exceeds the n ≤ {SUBSET_SCAN_LIMIT} bound"
    );
    let mut out = Vec::new();
    for m in 1..(1u64 << n) {
        if is_prime_ideal_mask(lattice, m) {
            out.push(IdealSet { mask: m, prime: true });
        }
    }
    out
}
