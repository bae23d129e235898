//! Maps between finite spaces: continuity, strong continuity,
//! homeomorphisms, and exhaustive map enumeration.

use crate::classify::fundamental_sets;
use crate::error::TopologyError;
use crate::space::FiniteSpace;
use order_core::iso::preorder_isomorphism;
use order_core::mask::{self, Mask};

/// A total function between the point sets of two finite spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub map: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        source: FiniteSpace,
        target: FiniteSpace,
        map: Vec<usize>,
    ) -> Result<SpaceMap, TopologyError> {
        if map.len() != source.n_points() {
            return Err(TopologyError::MapArityMismatch {
                got: map.len(),
                want: source.n_points(),
            });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.n_points()) {
            return Err(TopologyError::MapValueOutOfRange(v));
        }
        Ok(SpaceMap { source, target, map })
    }

    pub fn identity(x: &FiniteSpace) -> SpaceMap {
        SpaceMap { source: x.clone(), target: x.clone(), map: (0..x.n_points()).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn preimage(&self, m: Mask) -> Mask {
        let mut out = 0;
        for (i, &v) in self.map.iter().enumerate() {
            if mask::has(m, v) {
                out |= mask::bit(i);
            }
        }
        out
    }

    pub fn image(&self, m: Mask) -> Mask {
        let mut out = 0;
        for i in mask::iter(m) {
            out |= mask::bit(self.map[i]);
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        for &v in &self.map {
            if mask::has(seen, v) {
                return false;
            }
            seen |= mask::bit(v);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full_mask()) == self.target.full_mask()
    }

    pub fn is_continuous(&self) -> bool {
        self.target.opens().iter().all(|&v| self.source.is_open(self.preimage(v)))
    }

    /// Continuity plus: the preimage of every fundamental subset of the
    /// target is fundamental in the source. On finite spaces the second
    /// condition follows from the first (every open is fundamental), but it
    /// is checked literally.
    pub fn is_strongly_continuous(&self) -> bool {
        if !self.is_continuous() {
            return false;
        }
        let source_fundamental = fundamental_sets(&self.source);
        fundamental_sets(&self.target)
            .iter()
            .all(|&f| source_fundamental.binary_search(&self.preimage(f)).is_ok())
    }

    /// Bijective, continuous, and open.
    pub fn is_homeomorphism(&self) -> bool {
        self.is_injective()
            && self.is_surjective()
            && self.is_continuous()
            && self.source.opens().iter().all(|&u| self.target.is_open(self.image(u)))
    }

    /// `then ∘ self`.
    pub fn and_then(&self, then: &SpaceMap) -> Result<SpaceMap, TopologyError> {
        if self.target != then.source {
            return Err(TopologyError::ObjectMismatch("composition endpoints differ"));
        }
        let map = self.map.iter().map(|&v| then.map[v]).collect();
        Ok(SpaceMap { source: self.source.clone(), target: then.target.clone(), map })
    }
}

/// Homeomorphism test through specialization preorders (finite spaces are
/// Alexandroff, so this is exact); returns the point bijection.
pub fn are_homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    let witness = preorder_isomorphism(&x.specialization(), &y.specialization())?;
    let map = SpaceMap { source: x.clone(), target: y.clone(), map: witness.clone() };
    debug_assert!(map.is_homeomorphism());
    Some(witness)
}

/// Audit-mode cross check: searches all point bijections for one that maps
/// the open family onto the open family. Exponential; intended for ≤ 8
/// points.
pub fn homeomorphic_by_open_bijection(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    if x.n_points() != y.n_points() || x.opens().len() != y.opens().len() {
        return None;
    }
    let n = x.n_points();
    assert!(n <= 8, "open-bijection search limited to 8 points");
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(
        k: usize,
        perm: &mut Vec<usize>,
        x: &FiniteSpace,
        y: &FiniteSpace,
    ) -> Option<Vec<usize>> {
        let n = perm.len();
        if k == n {
            let f = SpaceMap { source: x.clone(), target: y.clone(), map: perm.clone() };
            let images: Vec<Mask> = {
                let mut v: Vec<Mask> = x.opens().iter().map(|&u| f.image(u)).collect();
                v.sort_unstable();
                v
            };
            if images == y.opens() {
                return Some(perm.clone());
            }
            return None;
        }
        for i in k..n {
            perm.swap(k, i);
            if let Some(found) = rec(k + 1, perm, x, y) {
                return Some(found);
            }
            perm.swap(k, i);
        }
        None
    }
    rec(0, &mut perm, x, y)
}

/// All maps `x → y` as tables, in lexicographic order.
pub fn enumerate_maps(x: &FiniteSpace, y: &FiniteSpace) -> Vec<SpaceMap> {
    let n = x.n_points();
    let m = y.n_points();
    if n == 0 {
        return vec![SpaceMap { source: x.clone(), target: y.clone(), map: vec![] }];
    }
    if m == 0 {
        return vec![]; // no maps from a non-empty space into the empty space
    }
    let total = (m as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    assert!(total <= 2_000_000, "map table enumeration too large ({total})");
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    loop {
        out.push(SpaceMap { source: x.clone(), target: y.clone(), map: table.clone() });
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            table[k] += 1;
            if table[k] < m {
                break;
            }
            table[k] = 0;
        }
    }
}

/// All strongly continuous maps `x → y`.
pub fn enumerate_strongly_continuous(x: &FiniteSpace, y: &FiniteSpace) -> Vec<SpaceMap> {
    enumerate_maps(x, y).into_iter().filter(|f| f.is_strongly_continuous()).collect()
}
