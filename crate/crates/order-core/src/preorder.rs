//! Finite preorders and posets stored as bitmask rows.

use crate::error::OrderError;
use crate::mask::{self, Mask};

/// A reflexive, transitive relation on a list of labelled elements.
///
/// Row `i` of `up` is the up-set `{j : i ≤ j}`. Constructors close the
/// relation reflexively and transitively, so a value of this type is
/// always a preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    labels: Vec<String>,
    up: Vec<Mask>,
}

impl Preorder {
    /// Builds a preorder from generating pairs `(a, b)` meaning `a ≤ b`.
    /// The reflexive-transitive closure is taken.
    pub fn from_pairs<S, A, B>(labels: &[S], pairs: &[(A, B)]) -> Result<Preorder, OrderError>
    where
        S: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n > mask::MAX_ELEMENTS {
            return Err(OrderError::TooManyElements(n, mask::MAX_ELEMENTS));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        let index = |s: &str| -> Result<usize, OrderError> {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| OrderError::UnknownLabel(s.to_string()))
        };
        let mut up: Vec<Mask> = (0..n).map(mask::bit).collect();
        for (a, b) in pairs {
            let i = index(a.as_ref())?;
            let j = index(b.as_ref())?;
            up[i] |= mask::bit(j);
        }
        transitive_close(&mut up);
        Ok(Preorder { labels, up })
    }

    /// Builds a preorder from explicit up-set rows, validating the axioms.
    pub fn from_up_sets(labels: Vec<String>, up: Vec<Mask>) -> Result<Preorder, OrderError> {
        let n = labels.len();
        if n > mask::MAX_ELEMENTS {
            return Err(OrderError::TooManyElements(n, mask::MAX_ELEMENTS));
        }
        if up.len() != n {
            return Err(OrderError::MapArityMismatch { got: up.len(), want: n });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            if !mask::has(up[i], i) {
                return Err(OrderError::NotReflexive(labels[i].clone()));
            }
        }
        for i in 0..n {
            for j in mask::iter(up[i]) {
                if up[j] & !up[i] != 0 {
                    let k = mask::iter(up[j] & !up[i]).next().unwrap();
                    return Err(OrderError::NotTransitive(
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[k].clone(),
                    ));
                }
            }
        }
        Ok(Preorder { labels, up })
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

    pub fn le(&self, i: usize, j: usize) -> bool {
        mask::has(self.up[i], j)
    }

    /// `{j : i ≤ j}`.
    pub fn up_mask(&self, i: usize) -> Mask {
        self.up[i]
    }

    /// `{j : j ≤ i}`.
    pub fn down_mask(&self, i: usize) -> Mask {
        let mut m = 0;
        for j in 0..self.n() {
            if self.le(j, i) {
                m |= mask::bit(j);
            }
        }
        m
    }

    /// The equivalence class of `i` under `≤ ∧ ≥`.
    pub fn class_mask(&self, i: usize) -> Mask {
        self.up[i] & self.down_mask(i)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n()).all(|i| self.class_mask(i) == mask::bit(i))
    }

    /// True when every element is comparable to every other (a total preorder).
    pub fn is_total(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.le(i, j) || self.le(j, i)))
    }
}

/// Transitive closure in place (rows are assumed reflexive).
pub(crate) fn transitive_close(up: &mut [Mask]) {
    let n = up.len();
    for k in 0..n {
        for i in 0..n {
            if mask::has(up[i], k) {
                up[i] |= up[k];
            }
        }
    }
}

/// A preorder that is additionally antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset(Preorder);

impl FinitePoset {
    pub fn from_pairs<S, A, B>(labels: &[S], pairs: &[(A, B)]) -> Result<FinitePoset, OrderError>
    where
        S: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        Self::from_preorder(Preorder::from_pairs(labels, pairs)?)
    }

    pub fn from_preorder(p: Preorder) -> Result<FinitePoset, OrderError> {
        for i in 0..p.n() {
            let class = p.class_mask(i);
            if class != mask::bit(i) {
                let j = mask::iter(class).find(|&j| j != i).unwrap();
                return Err(OrderError::NotAntisymmetric(
                    p.label(i).to_string(),
                    p.label(j).to_string(),
                ));
            }
        }
        Ok(FinitePoset(p))
    }

    /// A chain `0 < 1 < … < n-1` with decimal labels.
    pub fn chain(n: usize) -> FinitePoset {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let up: Vec<Mask> = (0..n).map(|i| mask::full(n) & !mask::full(i)).collect();
        FinitePoset(Preorder { labels, up })
    }

    /// An antichain of `n` incomparable elements.
    pub fn antichain(n: usize) -> FinitePoset {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let up: Vec<Mask> = (0..n).map(mask::bit).collect();
        FinitePoset(Preorder { labels, up })
    }

    pub fn preorder(&self) -> &Preorder {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn labels(&self) -> &[String] {
        self.0.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        self.0.label(i)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.0.le(i, j)
    }

    pub fn up_mask(&self, i: usize) -> Mask {
        self.0.up_mask(i)
    }

    pub fn down_mask(&self, i: usize) -> Mask {
        self.0.down_mask(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_taken() {
        let p = Preorder::from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.le(0, 2));
        assert!(p.le(0, 0));
        assert!(!p.le(2, 0));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = Preorder::from_pairs::<_, &str, &str>(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, OrderError::DuplicateLabel("a".into()));
    }

    #[test]
    fn unknown_label_rejected() {
        let err = Preorder::from_pairs(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, OrderError::UnknownLabel("z".into()));
    }

    #[test]
    fn poset_rejects_equivalent_pair() {
        let err = FinitePoset::from_pairs(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, OrderError::NotAntisymmetric("a".into(), "b".into()));
    }

    #[test]
    fn chain_orders_as_expected() {
        let c = FinitePoset::chain(3);
        assert!(c.le(0, 2));
        assert!(!c.le(2, 1));
        assert_eq!(c.down_mask(1), 0b011);
    }

    #[test]
    fn class_mask_detects_equivalence() {
        let p = Preorder::from_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("c", "a")])
            .unwrap();
        assert_eq!(p.class_mask(0), 0b011);
        assert!(!p.is_antisymmetric());
    }

    #[test]
    fn from_up_sets_validates_transitivity() {
        let labels: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        // a ≤ b, b ≤ c, but the row for a is missing c.
        let rows = vec![0b011, 0b110, 0b100];
        let err = Preorder::from_up_sets(labels, rows).unwrap_err();
        assert!(matches!(err, OrderError::NotTransitive(..)));
    }
}
