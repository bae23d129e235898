//! Finite commutative rings, possibly without identity, as operation
//! tables. Every constructor funnels through the same axiom validator.

use crate::error::RingError;
use order_core::mask::{self, Mask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommRing {
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: Option<usize>,
    characteristic: usize,
    /// Set by [`FiniteCommRing::cyclic`]; enables the divisor fast path for
    /// prime ideal enumeration.
    cyclic_modulus: Option<usize>,
}

impl FiniteCommRing {
    /// Validates the abelian-group, commutativity, associativity and
    /// distributivity axioms over the full tables.
    pub fn from_tables(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
    ) -> Result<FiniteCommRing, RingError> {
        Self::validated(labels, add, mul, None)
    }

    fn validated(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        cyclic_modulus: Option<usize>,
    ) -> Result<FiniteCommRing, RingError> {
        let n = labels.len();
        if n == 0 {
            return Err(RingError::AxiomViolation { law: "non-empty carrier", witness: "{}".into() });
        }
        if n > mask::MAX_ELEMENTS {
            return Err(RingError::TooManyElements(n, mask::MAX_ELEMENTS));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(RingError::DuplicateLabel(l.clone()));
            }
        }
        if add.len() != n * n {
            return Err(RingError::TableArityMismatch { got: add.len(), want: n });
        }
        if mul.len() != n * n {
            return Err(RingError::TableArityMismatch { got: mul.len(), want: n });
        }
        let pair = |a: usize, b: usize| format!("(`{}`, `{}`)", labels[a], labels[b]);
        let triple =
            |a: usize, b: usize, c: usize| format!("(`{}`, `{}`, `{}`)", labels[a], labels[b], labels[c]);

        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] != add[b * n + a] {
                    return Err(RingError::AxiomViolation { law: "a+b = b+a", witness: pair(a, b) });
                }
                if mul[a * n + b] != mul[b * n + a] {
                    return Err(RingError::AxiomViolation { law: "ab = ba", witness: pair(a, b) });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]] {
                        return Err(RingError::AxiomViolation {
                            law: "(a+b)+c = a+(b+c)",
                            witness: triple(a, b, c),
                        });
                    }
                    if mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(RingError::AxiomViolation {
                            law: "(ab)c = a(bc)",
                            witness: triple(a, b, c),
                        });
                    }
                    if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]] {
                        return Err(RingError::AxiomViolation {
                            law: "a(b+c) = ab+ac",
                            witness: triple(a, b, c),
                        });
                    }
                }
            }
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| add[a * n + z] == a))
            .ok_or(RingError::AxiomViolation { law: "additive identity exists", witness: "(none)".into() })?;
        let mut neg = vec![usize::MAX; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == zero).ok_or_else(|| {
                RingError::AxiomViolation {
                    law: "additive inverse exists",
                    witness: format!("(`{}`)", labels[a]),
                }
            })?;
        }
        let one = (0..n).find(|&e| (0..n).all(|a| mul[e * n + a] == a));

        let mut ring = FiniteCommRing {
            labels,
            add,
            mul,
            neg,
            zero,
            one,
            characteristic: 1,
            cyclic_modulus,
        };
        ring.characteristic = (0..n).fold(1, |acc, a| lcm(acc, ring.additive_order(a)));
        Ok(ring)
    }

    /// The cyclic ring `Z/n`.
    pub fn cyclic(n: usize) -> Result<FiniteCommRing, RingError> {
        if n == 0 {
            return Err(RingError::AxiomViolation { law: "non-empty carrier", witness: "Z/0".into() });
        }
        if n > mask::MAX_ELEMENTS {
            return Err(RingError::TooManyElements(n, mask::MAX_ELEMENTS));
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let add: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let mul: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a * b) % n)).collect();
        Self::validated(labels, add, mul, Some(n))
    }

    /// Componentwise product ring.
    pub fn product(a: &FiniteCommRing, b: &FiniteCommRing) -> Result<FiniteCommRing, RingError> {
        let (na, nb) = (a.n(), b.n());
        let n = na * nb;
        if n > mask::MAX_ELEMENTS {
            return Err(RingError::TooManyElements(n, mask::MAX_ELEMENTS));
        }
        let labels: Vec<String> = (0..na)
            .flat_map(|i| (0..nb).map(move |j| (i, j)))
            .map(|(i, j)| format!("({},{})", a.label(i), b.label(j)))
            .collect();
        let idx = |i: usize, j: usize| i * nb + j;
        let mut add = vec![0usize; n * n];
        let mut mul = vec![0usize; n * n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        let p = idx(i1, j1) * n + idx(i2, j2);
                        add[p] = idx(a.add(i1, i2), b.add(j1, j2));
                        mul[p] = idx(a.mul(i1, i2), b.mul(j1, j2));
                    }
                }
            }
        }
        Self::validated(labels, add, mul, None)
    }

    /// Restricts both tables to an ideal, making it a ring in its own
    /// right (usually without identity).
    pub fn ideal_as_ring(a: &FiniteCommRing, carrier: Mask) -> Result<FiniteCommRing, RingError> {
        if !crate::ideal::is_ideal(a, carrier) {
            return Err(RingError::NotAnIdeal(
                mask::render(carrier, a.labels()),
                "not an additive subgroup absorbing multiplication",
            ));
        }
        let kept: Vec<usize> = mask::iter(carrier).collect();
        let pos = |old: usize| kept.iter().position(|&k| k == old).unwrap();
        let labels: Vec<String> = kept.iter().map(|&i| a.label(i).to_string()).collect();
        let k = kept.len();
        let mut add = vec![0usize; k * k];
        let mut mul = vec![0usize; k * k];
        for (i, &x) in kept.iter().enumerate() {
            for (j, &y) in kept.iter().enumerate() {
                add[i * k + j] = pos(a.add(x, y));
                mul[i * k + j] = pos(a.mul(x, y));
            }
        }
        Self::validated(labels, add, mul, None)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    /// Least `m ≥ 1` with `m·x = 0` for every `x` (the additive exponent).
    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn cyclic_modulus(&self) -> Option<usize> {
        self.cyclic_modulus
    }

    /// `k`-fold sum of `x`.
    pub fn nsmul(&self, k: usize, x: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, x);
        }
        acc
    }

    fn additive_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn describe(&self) -> String {
        match self.cyclic_modulus {
            Some(n) => format!("Z/{n}"),
            None => format!("ring[{} elements]", self.n()),
        }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z6_has_identity_and_characteristic_six() {
        let r = FiniteCommRing::cyclic(6).unwrap();
        assert_eq!(r.one(), Some(1));
        assert_eq!(r.characteristic(), 6);
        assert_eq!(r.zero(), 0);
        assert_eq!(r.neg(2), 4);
    }

    #[test]
    fn trivial_ring_is_its_own_identity() {
        let r = FiniteCommRing::cyclic(1).unwrap();
        assert_eq!(r.one(), Some(0));
        assert_eq!(r.characteristic(), 1);
    }

    #[test]
    fn even_part_of_z8_has_no_identity() {
        let z8 = FiniteCommRing::cyclic(8).unwrap();
        let s = FiniteCommRing::ideal_as_ring(&z8, 0b01010101).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.one(), None);
        assert_eq!(s.characteristic(), 4);
    }

    #[test]
    fn multiples_of_three_in_z6_form_a_field_with_identity_three() {
        let z6 = FiniteCommRing::cyclic(6).unwrap();
        let s = FiniteCommRing::ideal_as_ring(&z6, 0b001001).unwrap();
        assert_eq!(s.n(), 2);
        // 3·3 = 9 = 3 in Z/6, so 3 acts as the identity
        assert_eq!(s.one(), Some(s.index_of("3").unwrap()));
    }

    #[test]
    fn non_ideal_carrier_is_rejected() {
        let z6 = FiniteCommRing::cyclic(6).unwrap();
        assert!(matches!(
            FiniteCommRing::ideal_as_ring(&z6, 0b000110),
            Err(RingError::NotAnIdeal(..))
        ));
    }

    #[test]
    fn product_of_cyclics() {
        let z2 = FiniteCommRing::cyclic(2).unwrap();
        let z3 = FiniteCommRing::cyclic(3).unwrap();
        let p = FiniteCommRing::product(&z2, &z3).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.characteristic(), 6);
        assert!(p.one().is_some());
    }

    #[test]
    fn axiom_violation_is_reported_with_a_witness() {
        // "or" table is not a valid addition (no inverses)
        let labels = vec!["0".to_string(), "1".to_string()];
        let or_table = vec![0, 1, 1, 1];
        let and_table = vec![0, 0, 0, 1];
        let err = FiniteCommRing::from_tables(labels, or_table, and_table).unwrap_err();
        assert!(matches!(err, RingError::AxiomViolation { law: "additive inverse exists", .. }));
    }
}
