//! Exhaustive corpora of small posets, preorders and lattices.

use crate::error::OrderError;
use crate::iso::preorder_isomorphism;
use crate::lattice::FiniteLattice;
use crate::mask::{self, Mask};
use crate::preorder::{FinitePoset, Preorder};

/// Largest `n` for the brute-force scan over all relations on `n` points.
pub const LABELED_SCAN_LIMIT: usize = 5;

/// Largest carrier size for the lattice corpora.
pub const LATTICE_CORPUS_LIMIT: usize = 7;

/// All posets on `n` elements whose relation is contained in the numeric
/// order of the indices (every isomorphism class appears at least once).
///
/// Generated by choosing, for each element in turn, a down-closed set of
/// strict predecessors.
pub fn natural_posets(n: usize) -> Vec<FinitePoset> {
    let mut out = Vec::new();
    let mut strict_down: Vec<Mask> = Vec::with_capacity(n);
    extend_natural(n, &mut strict_down, &mut out);
    out
}

fn extend_natural(n: usize, strict_down: &mut Vec<Mask>, out: &mut Vec<FinitePoset>) {
    let j = strict_down.len();
    if j == n {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut up: Vec<Mask> = (0..n).map(mask::bit).collect();
        for (k, &d) in strict_down.iter().enumerate() {
            for i in mask::iter(d) {
                up[i] |= mask::bit(k);
            }
        }
        let p = Preorder::from_up_sets(labels, up).expect("generated rows form a preorder");
        out.push(FinitePoset::from_preorder(p).expect("relation within numeric order"));
        return;
    }
    // candidate strict down-sets of element j: transitively closed subsets
    // of the previous elements
    for d in 0..(1u64 << j) {
        if mask::iter(d).all(|i| strict_down[i] & !d == 0) {
            strict_down.push(d);
            extend_natural(n, strict_down, out);
            strict_down.pop();
        }
    }
}

/// All preorders on `n` labelled points, by scanning every off-diagonal
/// relation pattern and keeping the transitive ones. Guarded at
/// [`LABELED_SCAN_LIMIT`].
pub fn labeled_preorders(n: usize) -> Result<Vec<Preorder>, OrderError> {
    if n > LABELED_SCAN_LIMIT {
        return Err(OrderError::BoundExceeded { what: "labelled points", n, limit: LABELED_SCAN_LIMIT });
    }
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let off_diag: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let bits = off_diag.len();
    let mut out = Vec::new();
    for pattern in 0u64..(1u64 << bits) {
        let mut up: Vec<Mask> = (0..n).map(mask::bit).collect();
        for (b, &(i, j)) in off_diag.iter().enumerate() {
            if pattern & (1 << b) != 0 {
                up[i] |= mask::bit(j);
            }
        }
        let transitive = (0..n).all(|i| mask::iter(up[i]).all(|j| up[j] & !up[i] == 0));
        if transitive {
            out.push(Preorder::from_up_sets(labels.clone(), up).expect("checked transitive"));
        }
    }
    Ok(out)
}

/// All posets on `n` labelled points (antisymmetric preorders).
pub fn labeled_posets(n: usize) -> Result<Vec<FinitePoset>, OrderError> {
    Ok(labeled_preorders(n)?
        .into_iter()
        .filter(|p| p.is_antisymmetric())
        .map(|p| FinitePoset::from_preorder(p).unwrap())
        .collect())
}

/// All pairwise non-isomorphic lattices with at most `max` elements,
/// smallest first. Guarded at [`LATTICE_CORPUS_LIMIT`].
pub fn all_lattices(max: usize) -> Result<Vec<FiniteLattice>, OrderError> {
    if max > LATTICE_CORPUS_LIMIT {
        return Err(OrderError::BoundExceeded { what: "lattice size", n: max, limit: LATTICE_CORPUS_LIMIT });
    }
    let mut out: Vec<FiniteLattice> = Vec::new();
    for k in 1..=max {
        let mut seen: Vec<FiniteLattice> = Vec::new();
        for poset in natural_posets(k) {
            let Ok(lat) = FiniteLattice::from_poset(poset) else { continue };
            let fresh = !seen
                .iter()
                .any(|l| preorder_isomorphism(l.poset().preorder(), lat.poset().preorder()).is_some());
            if fresh {
                seen.push(lat);
            }
        }
        out.extend(seen);
    }
    Ok(out)
}

/// All pairwise non-isomorphic distributive lattices with at most `max`
/// elements.
pub fn enumerate_distributive_lattices(max: usize) -> Result<Vec<FiniteLattice>, OrderError> {
    Ok(all_lattices(max)?.into_iter().filter(|l| l.is_distributive()).collect())
}
