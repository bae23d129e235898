//! Finite lattices: meet/join tables, distributivity, ordinal sums.

use crate::error::OrderError;
use crate::iso::preorder_isomorphism;
use crate::mask::{self, Mask};
use crate::preorder::FinitePoset;

/// A finite lattice over a [`FinitePoset`].
///
/// Every finite lattice is bounded; the minimum and maximum witnesses are
/// stored so statements phrased as "lattice with minimum/maximum" read off
/// the same vocabulary everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    min: usize,
    max: usize,
    distributive: bool,
}

impl FiniteLattice {
    /// Computes meet/join tables from the order relation, failing with the
    /// first pair that lacks a greatest lower or least upper bound.
    pub fn from_poset(poset: FinitePoset) -> Result<FiniteLattice, OrderError> {
        let n = poset.n();
        if n == 0 {
            return Err(OrderError::NotALattice {
                a: "(empty)".into(),
                b: "(empty)".into(),
                kind: "carrier",
            });
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let lower = poset.down_mask(i) & poset.down_mask(j);
                meet[i * n + j] = bound_of(&poset, lower, true).ok_or(OrderError::NotALattice {
                    a: poset.label(i).to_string(),
                    b: poset.label(j).to_string(),
                    kind: "meet",
                })?;
                let upper = poset.up_mask(i) & poset.up_mask(j);
                join[i * n + j] = bound_of(&poset, upper, false).ok_or(OrderError::NotALattice {
                    a: poset.label(i).to_string(),
                    b: poset.label(j).to_string(),
                    kind: "join",
                })?;
            }
        }
        let mut min = 0;
        let mut max = 0;
        for i in 1..n {
            min = meet[min * n + i];
            max = join[max * n + i];
        }
        let mut lat = FiniteLattice { poset, meet, join, min, max, distributive: false };
        lat.distributive = lat.check_distributive();
        Ok(lat)
    }

    /// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples.
    fn check_distributive(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The one-element lattice.
    pub fn singleton(label: &str) -> FiniteLattice {
        let poset = FinitePoset::from_pairs::<_, &str, &str>(&[label], &[]).unwrap();
        FiniteLattice::from_poset(poset).unwrap()
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FiniteLattice {
        FiniteLattice::from_poset(FinitePoset::chain(n)).unwrap()
    }

    /// The powerset of `atoms` generators ordered by inclusion (so `2²` is
    /// `powerset(2)`). Labels render the subsets.
    pub fn powerset(atoms: usize) -> FiniteLattice {
        assert!(atoms <= 6, "powerset lattice limited to 6 atoms");
        let gens: Vec<String> = (0..atoms).map(|i| i.to_string()).collect();
        let n = 1usize << atoms;
        let labels: Vec<String> = (0..n).map(|s| mask::render(s as Mask, &gens)).collect();
        let mut pairs = Vec::new();
        for s in 0..n {
            for t in 0..n {
                if s & t == s && s != t {
                    pairs.push((labels[s].clone(), labels[t].clone()));
                }
            }
        }
        let poset = FinitePoset::from_pairs(&labels, &pairs).unwrap();
        FiniteLattice::from_poset(poset).unwrap()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.poset.le(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n() + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n() + j]
    }

    pub fn has_min(&self) -> bool {
        true
    }

    pub fn has_max(&self) -> bool {
        true
    }

    pub fn min(&self) -> usize {
        self.min
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// Stacks `upper` above `self`: every element of `self` lies below every
    /// element of `upper`. Elements are relabelled `x.0` / `x.1` by side;
    /// the `self` part keeps indices `0..self.n()`.
    pub fn ordinal_sum(&self, upper: &FiniteLattice) -> FiniteLattice {
        let mut labels: Vec<String> = Vec::with_capacity(self.n() + upper.n());
        labels.extend(self.labels().iter().map(|l| format!("{l}.0")));
        labels.extend(upper.labels().iter().map(|l| format!("{l}.1")));
        let nl = self.n();
        let n = nl + upper.n();
        let mut up: Vec<Mask> = Vec::with_capacity(n);
        let upper_part = mask::full(n) & !mask::full(nl);
        for i in 0..nl {
            up.push((self.poset.up_mask(i) as Mask) | upper_part);
        }
        for i in 0..upper.n() {
            up.push((upper.poset.up_mask(i) as Mask) << nl);
        }
        let preorder = crate::preorder::Preorder::from_up_sets(labels, up)
            .expect("ordinal sum relation is a preorder");
        let poset = FinitePoset::from_preorder(preorder).expect("ordinal sum is antisymmetric");
        FiniteLattice::from_poset(poset).expect("ordinal sum of lattices is a lattice")
    }

    /// Adds a new top element (ordinal sum with the one-element lattice).
    pub fn add_top(&self) -> FiniteLattice {
        self.ordinal_sum(&FiniteLattice::singleton("*"))
    }

    /// Short human-readable description: size and covering pairs.
    pub fn describe(&self) -> String {
        let mut covers = Vec::new();
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i != j && self.le(i, j) {
                    let strict_between = (0..self.n())
                        .any(|k| k != i && k != j && self.le(i, k) && self.le(k, j));
                    if !strict_between {
                        covers.push(format!("{}<{}", self.label(i), self.label(j)));
                    }
                }
            }
        }
        format!("lattice[{}: {}]", self.n(), covers.join(" "))
    }
}

/// Order isomorphism between two lattices (equivalently a lattice
/// isomorphism), as a witness index map. Deterministic: first witness in
/// canonical backtracking order.
pub fn lattices_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    preorder_isomorphism(a.poset().preorder(), b.poset().preorder())
}

fn bound_of(poset: &FinitePoset, candidates: Mask, greatest: bool) -> Option<usize> {
    for i in mask::iter(candidates) {
        let covers = if greatest {
            // greatest element of `candidates`: everything in the set is ≤ i
            candidates & !poset.down_mask(i) == 0
        } else {
            candidates & !poset.up_mask(i) == 0
        };
        if covers {
            return Some(i);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Result<FiniteLattice, OrderError> {
        let poset = FinitePoset::from_pairs(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        .unwrap();
        FiniteLattice::from_poset(poset)
    }

    #[test]
    fn chain_is_distributive() {
        let c = FiniteLattice::chain(3);
        assert!(c.is_distributive());
        assert_eq!(c.min(), 0);
        assert_eq!(c.max(), 2);
        assert_eq!(c.meet(1, 2), 1);
        assert_eq!(c.join(0, 2), 2);
    }

    #[test]
    fn m3_is_a_non_distributive_lattice() {
        let l = m3().unwrap();
        assert!(!l.is_distributive());
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 4);
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let err = FiniteLattice::from_poset(FinitePoset::antichain(2)).unwrap_err();
        assert_eq!(err, OrderError::NotALattice { a: "0".into(), b: "1".into(), kind: "meet" });
    }

    #[test]
    fn powerset_two_is_the_diamond() {
        let b = FiniteLattice::powerset(2);
        assert_eq!(b.n(), 4);
        assert!(b.is_distributive());
        // the two atoms meet at bottom and join at top
        assert_eq!(b.meet(1, 2), 0);
        assert_eq!(b.join(1, 2), 3);
    }

    #[test]
    fn ordinal_sum_of_chains_is_a_chain() {
        let two = FiniteLattice::chain(2);
        let theta = FiniteLattice::singleton("*");
        let three = two.ordinal_sum(&theta);
        assert_eq!(three.n(), 3);
        assert!(lattices_isomorphic(&three, &FiniteLattice::chain(3)).is_some());
        let two_again = theta.ordinal_sum(&theta);
        assert!(lattices_isomorphic(&two_again, &FiniteLattice::chain(2)).is_some());
    }

    #[test]
    fn ordinal_sum_diamond_plus_top() {
        let l = FiniteLattice::powerset(2).add_top();
        assert_eq!(l.n(), 5);
        assert!(l.is_distributive());
        // new maximum sits above the old one
        assert_eq!(l.label(l.max()), "*.1");
        assert!(l.le(3, l.max()));
    }

    #[test]
    fn iso_rejects_diamond_vs_chain() {
        let b = FiniteLattice::powerset(2);
        let c = FiniteLattice::chain(4);
        assert!(lattices_isomorphic(&b, &c).is_none());
    }
}
