//! Lattice homomorphisms, properness, and exhaustive hom-set enumeration.

use crate::error::OrderError;
use crate::ideal::{enumerate_prime_ideals, is_prime_ideal_mask};
use crate::lattice::FiniteLattice;
use crate::mask::{self, Mask};

/// A meet/join preserving map between two lattices. Validated on
/// construction; bounds need not be preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    pub source: FiniteLattice,
    pub target: FiniteLattice,
    pub map: Vec<usize>,
}

impl LatticeHom {
    pub fn new(
        source: FiniteLattice,
        target: FiniteLattice,
        map: Vec<usize>,
    ) -> Result<LatticeHom, OrderError> {
        if map.len() != source.n() {
            return Err(OrderError::MapArityMismatch { got: map.len(), want: source.n() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.n()) {
            return Err(OrderError::MapValueOutOfRange(v));
        }
        for a in 0..source.n() {
            for b in 0..=a {
                if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                    return Err(OrderError::NotAHomomorphism {
                        a: source.label(a).to_string(),
                        b: source.label(b).to_string(),
                        kind: "meet",
                    });
                }
                if map[source.join(a, b)] != target.join(map[a], map[b]) {
                    return Err(OrderError::NotAHomomorphism {
                        a: source.label(a).to_string(),
                        b: source.label(b).to_string(),
                        kind: "join",
                    });
                }
            }
        }
        Ok(LatticeHom { source, target, map })
    }

    pub fn identity(l: &FiniteLattice) -> LatticeHom {
        LatticeHom { source: l.clone(), target: l.clone(), map: (0..l.n()).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Preimage of a subset of the target.
    pub fn preimage(&self, m: Mask) -> Mask {
        let mut out = 0;
        for (i, &v) in self.map.iter().enumerate() {
            if mask::has(m, v) {
                out |= mask::bit(i);
            }
        }
        out
    }

    /// Proper: the preimage of every prime ideal of the target is a prime
    /// ideal of the source.
    pub fn is_proper(&self) -> bool {
        enumerate_prime_ideals(&self.target)
            .iter()
            .all(|p| is_prime_ideal_mask(&self.source, self.preimage(p.mask)))
    }

    /// `then ∘ self` (first `self`, then `then`).
    pub fn and_then(&self, then: &LatticeHom) -> Result<LatticeHom, OrderError> {
        if self.target != then.source {
            return Err(OrderError::ObjectMismatch("composition endpoints differ"));
        }
        let map = self.map.iter().map(|&v| then.map[v]).collect();
        Ok(LatticeHom { source: self.source.clone(), target: then.target.clone(), map })
    }
}

/// Precondition check plus properness, as a standalone operation: errors if
/// `map` is not a homomorphism, otherwise reports properness.
pub fn is_proper_hom(
    source: &FiniteLattice,
    target: &FiniteLattice,
    map: Vec<usize>,
) -> Result<bool, OrderError> {
    let hom = LatticeHom::new(source.clone(), target.clone(), map)?;
    Ok(hom.is_proper())
}

/// All homomorphisms `source → target`, in lexicographic order of the map
/// table. Backtracking with partial meet/join consistency pruning.
pub fn enumerate_homs(source: &FiniteLattice, target: &FiniteLattice) -> Vec<LatticeHom> {
    let n = source.n();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    search(source, target, &mut map, 0, &mut out);
    out
}

fn search(
    source: &FiniteLattice,
    target: &FiniteLattice,
    map: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<LatticeHom>,
) {
    let n = source.n();
    if k == n {
        out.push(LatticeHom { source: source.clone(), target: target.clone(), map: map.clone() });
        return;
    }
    'cand: for v in 0..target.n() {
        map[k] = v;
        for i in 0..=k {
            let m = source.meet(i, k);
            if m <= k && map[m] != target.meet(map[i], v) {
                continue 'cand;
            }
            let j = source.join(i, k);
            if j <= k && map[j] != target.join(map[i], v) {
                continue 'cand;
            }
        }
        search(source, target, map, k + 1, out);
    }
}

/// The proper homomorphisms `source → target`, same order as
/// [`enumerate_homs`]. The target's prime ideals are enumerated once and
/// shared across the properness checks.
pub fn enumerate_proper_homs(source: &FiniteLattice, target: &FiniteLattice) -> Vec<LatticeHom> {
    let primes = enumerate_prime_ideals(target);
    enumerate_homs(source, target)
        .into_iter()
        .filter(|h| primes.iter().all(|p| is_prime_ideal_mask(&h.source, h.preimage(p.mask))))
        .collect()
}
