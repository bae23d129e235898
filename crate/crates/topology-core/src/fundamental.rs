//! The fundamental-set lattice F(X) of a finite space.

use crate::classify::fundamental_sets;
use crate::space::FiniteSpace;
use order_core::lattice::FiniteLattice;
use order_core::mask::{self, Mask};
use order_core::preorder::{FinitePoset, Preorder};

/// F(X) ordered by inclusion, with the open set behind each lattice
/// element. Element order follows ascending mask value, so the minimum is
/// ∅ and the maximum is the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalLattice {
    pub lattice: FiniteLattice,
    pub open_masks: Vec<Mask>,
}

impl FundamentalLattice {
    pub fn element_of_open(&self, m: Mask) -> Option<usize> {
        self.open_masks.binary_search(&m).ok()
    }

    pub fn open_of_element(&self, i: usize) -> Mask {
        self.open_masks[i]
    }
}

/// On a finite space every open is compact and ∅ is fundamental, so F(X)
/// is the open family under inclusion; it is always a bounded distributive
/// lattice with meet/join given by intersection/union.
pub fn fundamental_lattice(x: &FiniteSpace) -> FundamentalLattice {
    let sets = fundamental_sets(x);
    let labels: Vec<String> = sets.iter().map(|&m| mask::render(m, x.points())).collect();
    let n = sets.len();
    let mut up: Vec<Mask> = vec![0; n];
    for (i, &s) in sets.iter().enumerate() {
        for (j, &t) in sets.iter().enumerate() {
            if s & !t == 0 {
                up[i] |= mask::bit(j);
            }
        }
    }
    let preorder = Preorder::from_up_sets(labels, up).expect("inclusion is a preorder");
    let poset = FinitePoset::from_preorder(preorder).expect("inclusion is antisymmetric");
    let lattice = FiniteLattice::from_poset(poset).expect("opens are union/intersection closed");
    debug_assert!(lattice.is_distributive());
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(sets[lattice.meet(i, j)], sets[i] & sets[j]);
            debug_assert_eq!(sets[lattice.join(i, j)], sets[i] | sets[j]);
        }
    }
    FundamentalLattice { lattice, open_masks: sets }
}
