//! Zariski spectra of finite commutative rings.

use crate::ideal::{enumerate_prime_ideals, RingIdeal};
use crate::ring::FiniteCommRing;
use order_core::mask::{self, Mask};
use topology_core::space::FiniteSpace;

/// `Spec(A)` with the points labelled by their prime-ideal carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpectrum {
    pub space: FiniteSpace,
    pub primes: Vec<RingIdeal>,
    /// `basic_opens[a] = D(a) = { i : a ∉ primes[i] }`.
    pub basic_opens: Vec<Mask>,
}

impl RingSpectrum {
    pub fn n_points(&self) -> usize {
        self.primes.len()
    }

    pub fn point_of_prime(&self, prime_mask: Mask) -> Option<usize> {
        self.primes.binary_search_by_key(&prime_mask, |p| p.mask).ok()
    }

    /// `V(I) = { P : P ⊇ I }` as a point mask.
    pub fn vanishing(&self, ideal_mask: Mask) -> Mask {
        let mut m = 0;
        for (i, p) in self.primes.iter().enumerate() {
            if ideal_mask & !p.mask == 0 {
                m |= mask::bit(i);
            }
        }
        m
    }
}

/// Computes `Spec(A)`: points are the prime ideals and opens are unions of
/// the basic sets `D(a)`.
pub fn spec_ring(a: &FiniteCommRing) -> RingSpectrum {
    let primes = enumerate_prime_ideals(a);
    let k = primes.len();
    let basic_opens: Vec<Mask> = (0..a.n())
        .map(|x| {
            let mut m = 0;
            for (i, p) in primes.iter().enumerate() {
                if !mask::has(p.mask, x) {
                    m |= mask::bit(i);
                }
            }
            m
        })
        .collect();
    let opens: Vec<Mask> = (0..(1u64 << k))
        .filter(|&s| {
            mask::iter(s).all(|p| basic_opens.iter().any(|&d| mask::has(d, p) && d & !s == 0))
        })
        .collect();
    let labels: Vec<String> = primes.iter().map(|p| p.render(a)).collect();
    let space = FiniteSpace::new(labels, opens).expect("basis unions satisfy the axioms");
    RingSpectrum { space, primes, basic_opens }
}

/// Checks `D(ab) = D(a) ∩ D(b)` and `D(a+b) ⊆ D(a) ∪ D(b)` over all pairs.
#[derive(Debug, Clone)]
pub struct BasicOpenIdentities {
    pub pairs_checked: usize,
    pub ok: bool,
    pub failure: Option<String>,
}

pub fn basic_open_identities(a: &FiniteCommRing) -> BasicOpenIdentities {
    let s = spec_ring(a);
    let mut pairs_checked = 0;
    for x in 0..a.n() {
        for y in 0..a.n() {
            pairs_checked += 1;
            let dx = s.basic_opens[x];
            let dy = s.basic_opens[y];
            if s.basic_opens[a.mul(x, y)] != dx & dy {
                return BasicOpenIdentities {
                    pairs_checked,
                    ok: false,
                    failure: Some(format!(
                        "D({}·{}) ≠ D({}) ∩ D({})",
                        a.label(x),
                        a.label(y),
                        a.label(x),
                        a.label(y)
                    )),
                };
            }
            if s.basic_opens[a.add(x, y)] & !(dx | dy) != 0 {
                return BasicOpenIdentities {
                    pairs_checked,
                    ok: false,
                    failure: Some(format!(
                        "D({}+{}) ⊄ D({}) ∪ D({})",
                        a.label(x),
                        a.label(y),
                        a.label(x),
                        a.label(y)
                    )),
                };
            }
        }
    }
    BasicOpenIdentities { pairs_checked, ok: true, failure: None }
}
