//! Backtracking isomorphism search on finite preorders.

use crate::mask;
use crate::preorder::Preorder;

/// Finds an order isomorphism `a → b` as an index map, or `None`.
///
/// Candidates are pruned by the (in-degree, out-degree) signature of each
/// element; the first witness in backtracking order (source elements in
/// input order, target candidates ascending) is returned, so the result
/// is deterministic.
pub fn preorder_isomorphism(a: &Preorder, b: &Preorder) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() {
        return None;
    }
    let sig = |p: &Preorder, i: usize| (mask::count(p.down_mask(i)), mask::count(p.up_mask(i)));
    let sig_a: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &sig_a, &sig_b, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

fn assign(
    a: &Preorder,
    b: &Preorder,
    sig_a: &[(usize, usize)],
    sig_b: &[(usize, usize)],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    i: usize,
) -> bool {
    let n = a.n();
    if i == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || sig_a[i] != sig_b[cand] {
            continue;
        }
        let consistent = (0..i).all(|j| {
            a.le(i, j) == b.le(cand, map[j]) && a.le(j, i) == b.le(map[j], cand)
        });
        if !consistent {
            continue;
        }
        map[i] = cand;
        used[cand] = true;
        if assign(a, b, sig_a, sig_b, map, used, i + 1) {
            return true;
        }
        used[cand] = false;
        map[i] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preorder::FinitePoset;

    #[test]
    fn relabelled_chain_is_isomorphic() {
        let a = FinitePoset::chain(3);
        let b = FinitePoset::from_pairs(&["x", "y", "z"], &[("z", "y"), ("y", "x")]).unwrap();
        let f = preorder_isomorphism(a.preorder(), b.preorder()).unwrap();
        // 0 (bottom) must land on z (index 2).
        assert_eq!(f[0], 2);
        assert_eq!(f[2], 0);
    }

    #[test]
    fn size_mismatch_is_none() {
        let a = FinitePoset::chain(3);
        let b = FinitePoset::chain(4);
        assert!(preorder_isomorphism(a.preorder(), b.preorder()).is_none());
    }

    #[test]
    fn chain_vs_antichain_is_none() {
        let a = FinitePoset::chain(2);
        let b = FinitePoset::antichain(2);
        assert!(preorder_isomorphism(a.preorder(), b.preorder()).is_none());
    }

    #[test]
    fn witness_is_an_isomorphism() {
        let a = FinitePoset::from_pairs(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let b = FinitePoset::from_pairs(&["p", "q", "r", "s"], &[("q", "p"), ("q", "r"), ("p", "s"), ("r", "s")]).unwrap();
        let f = preorder_isomorphism(a.preorder(), b.preorder()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.le(i, j), b.preorder().le(f[i], f[j]));
            }
        }
    }
}
