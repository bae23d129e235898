//! Ring ideals and prime ideals.
//!
//! The general enumerator grows ideals by closure (start from `{0}`, throw
//! in one new element at a time and close up), which stays exact well past
//! the sizes where a raw subset scan stops being feasible. The subset scan
//! survives as a test oracle, and cyclic rings take the divisor fast path.

use crate::ring::FiniteCommRing;
use order_core::mask::{self, Mask};
use std::collections::BTreeSet;

/// Largest carrier for the brute-force subset scan (2^n subsets).
pub const SUBSET_SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RingIdeal {
    pub mask: Mask,
    pub prime: bool,
}

impl RingIdeal {
    pub fn render(&self, ring: &FiniteCommRing) -> String {
        mask::render(self.mask, ring.labels())
    }
}

/// Additive subgroup (0 ∈, closed under +) absorbing multiplication.
/// Finite additive closure implies inverses, but they are cheap to check
/// and keep the definition literal.
pub fn is_ideal(ring: &FiniteCommRing, m: Mask) -> bool {
    if !mask::has(m, ring.zero()) {
        return false;
    }
    for i in mask::iter(m) {
        if !mask::has(m, ring.neg(i)) {
            return false;
        }
        for j in mask::iter(m) {
            if !mask::has(m, ring.add(i, j)) {
                return false;
            }
        }
        for r in 0..ring.n() {
            if !mask::has(m, ring.mul(r, i)) {
                return false;
            }
        }
    }
    true
}

/// Smallest ideal containing `seed`.
pub fn ideal_closure(ring: &FiniteCommRing, seed: Mask) -> Mask {
    let mut m = seed | mask::bit(ring.zero());
    loop {
        let mut grown = m;
        for i in mask::iter(m) {
            grown |= mask::bit(ring.neg(i));
            for j in mask::iter(m) {
                grown |= mask::bit(ring.add(i, j));
            }
            for r in 0..ring.n() {
                grown |= mask::bit(ring.mul(r, i));
            }
        }
        if grown == m {
            return m;
        }
        m = grown;
    }
}

/// All ideals, by closure growth from `{0}`; ascending mask order.
pub fn enumerate_ideals(ring: &FiniteCommRing) -> Vec<Mask> {
    let mut seen: BTreeSet<Mask> = BTreeSet::new();
    let mut queue: Vec<Mask> = vec![ideal_closure(ring, 0)];
    seen.insert(queue[0]);
    while let Some(i) = queue.pop() {
        for a in 0..ring.n() {
            if !mask::has(i, a) {
                let j = ideal_closure(ring, i | mask::bit(a));
                if seen.insert(j) {
                    queue.push(j);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Proper ideal with `ab ∈ P ⇒ a ∈ P or b ∈ P` (elementwise definition;
/// for commutative rings this agrees with the idealwise one, which the
/// test suite cross-checks on small rings).
pub fn is_prime_ideal(ring: &FiniteCommRing, m: Mask) -> bool {
    if m == mask::full(ring.n()) || !is_ideal(ring, m) {
        return false;
    }
    let outside = mask::full(ring.n()) & !m;
    for a in mask::iter(outside) {
        for b in mask::iter(outside) {
            if b > a {
                break;
            }
            if mask::has(m, ring.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// All prime ideals, ascending mask order. Cyclic rings short-circuit to
/// the prime divisors of the modulus; the result is verified against the
/// closure enumerator in the tests.
pub fn enumerate_prime_ideals(ring: &FiniteCommRing) -> Vec<RingIdeal> {
    if let Some(n) = ring.cyclic_modulus() {
        let mut out: Vec<Mask> = prime_divisors(n)
            .into_iter()
            .map(|p| {
                let mut m = 0;
                for k in (0..n).step_by(p) {
                    m |= mask::bit(k);
                }
                m
            })
            .collect();
        out.sort_unstable();
        debug_assert!(out.iter().all(|&m| is_prime_ideal(ring, m)));
        return out.into_iter().map(|mask| RingIdeal { mask, prime: true }).collect();
    }
    enumerate_ideals(ring)
        .into_iter()
        .filter(|&m| is_prime_ideal(ring, m))
        .map(|mask| RingIdeal { mask, prime: true })
        .collect()
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Test oracle: every subset, checked against the ideal axioms directly.
pub fn enumerate_ideals_by_scan(ring: &FiniteCommRing) -> Vec<Mask> {
    let n = ring.n();
    assert!(n <= SUBSET_SCAN_LIMIT, "subset scan limited to {SUBSET_SCAN_LIMIT} elements");
    (0..(1u64 << n)).filter(|&m| is_ideal(ring, m)).collect()
}

/// Test oracle for primality via products of ideals: `P` is prime iff it is
/// proper and `I·J ⊆ P` forces `I ⊆ P` or `J ⊆ P`.
pub fn is_prime_idealwise(ring: &FiniteCommRing, p: Mask, ideals: &[Mask]) -> bool {
    if p == mask::full(ring.n()) || !is_ideal(ring, p) {
        return false;
    }
    for &i in ideals {
        for &j in ideals {
            let mut products = 0;
            for a in mask::iter(i) {
                for b in mask::iter(j) {
                    products |= mask::bit(ring.mul(a, b));
                }
            }
            let ij = ideal_closure(ring, products);
            if ij & !p == 0 && i & !p != 0 && j & !p != 0 {
                return false;
            }
        }
    }
    true
}
