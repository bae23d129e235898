//! Corpus-level properties over all small labelled topologies.

use order_core::mask::Mask;
use topology_core::classify::{audit, classify, fundamental_sets, generic_points, irreducible_closed_sets};
use topology_core::enumerate::labeled_topologies;
use topology_core::fundamental::fundamental_lattice;
use topology_core::map::{are_homeomorphic, enumerate_maps, homeomorphic_by_open_bijection};
use topology_core::space::{alexandroff, FiniteSpace};

/// Independent oracle: enumerate topologies on `n ≤ 4` points directly as
/// families of subsets closed under the axioms, with no preorder detour.
fn topologies_by_family_scan(n: usize) -> Vec<Vec<Mask>> {
    assert!(n <= 4);
    let subsets = 1usize << n;
    let full = (subsets - 1) as Mask;
    let mut out = Vec::new();
    for family_bits in 0u32..(1u32 << subsets) {
        if family_bits & 1 == 0 || family_bits & (1 << (subsets - 1)) == 0 {
            continue; // must contain ∅ and the full set
        }
        let members: Vec<Mask> =
            (0..subsets).filter(|&i| family_bits & (1 << i) != 0).map(|i| i as Mask).collect();
        let closed = members.iter().all(|&u| {
            members.iter().all(|&v| {
                family_bits & (1 << (u | v) as usize) != 0 && family_bits & (1 << (u & v) as usize) != 0
            })
        });
        if closed {
            debug_assert!(members.iter().all(|&m| m <= full));
            out.push(members);
        }
    }
    out
}

#[test]
fn preorder_route_matches_family_scan_oracle() {
    for n in 0..=4 {
        let mut via_preorders: Vec<Vec<Mask>> =
            labeled_topologies(n).unwrap().iter().map(|x| x.opens().to_vec()).collect();
        let mut via_scan = topologies_by_family_scan(n);
        via_preorders.sort();
        via_scan.sort();
        assert_eq!(via_preorders, via_scan, "n = {n}");
    }
    assert_eq!(labeled_topologies(4).unwrap().len(), 355);
}

#[test]
fn alexandroff_specialization_roundtrip_on_all_four_point_topologies() {
    let corpus = labeled_topologies(4).unwrap();
    assert_eq!(corpus.len(), 355);
    for x in &corpus {
        assert_eq!(&alexandroff(&x.specialization()), x);
    }
}

#[test]
fn specialization_alexandroff_roundtrip_on_preorders() {
    for p in order_core::enumerate::labeled_preorders(3).unwrap() {
        assert_eq!(alexandroff(&p).specialization(), p);
    }
}

#[test]
fn structural_constants_agree_with_definition_level_checkers() {
    for n in 0..=4 {
        for x in labeled_topologies(n).unwrap() {
            let p = classify(&x);
            assert!(p.compact && p.coherent && p.empty_fundamental && p.almost_sober);
            assert_eq!(p.sober, p.t0, "finite spaces: sober iff T0");
            assert!(p.ra_space);
            assert!(p.is_consistent());
            assert!(audit::is_compact_by_cover_search(&x, x.full_mask()));
            assert!(audit::is_coherent_by_basis_search(&x));
            assert!(audit::is_empty_fundamental_by_family_search(&x));
            assert_eq!(audit::is_sober_by_definition(&x), p.sober);
            assert!(audit::is_almost_sober_by_definition(&x));
            assert_eq!(audit::fundamental_sets_by_definition(&x), fundamental_sets(&x));
        }
    }
}

#[test]
fn fundamental_lattices_are_bounded_and_distributive() {
    for n in 0..=4 {
        for x in labeled_topologies(n).unwrap() {
            let f = fundamental_lattice(&x);
            assert!(f.lattice.is_distributive());
            assert!(f.lattice.has_min() && f.lattice.has_max());
            assert_eq!(f.open_of_element(f.lattice.min()), 0);
            assert_eq!(f.open_of_element(f.lattice.max()), x.full_mask());
        }
    }
}

#[test]
fn open_subspaces_of_sober_spaces_are_sober() {
    for n in 1..=4 {
        for x in labeled_topologies(n).unwrap() {
            if !classify(&x).sober {
                continue;
            }
            for &u in x.opens() {
                let z = x.subspace(u);
                assert!(classify(&z).sober, "open subspace {u:#b} of a sober space");
            }
        }
    }
}

#[test]
fn continuous_images_of_irreducibles_have_irreducible_closures() {
    let spaces: Vec<FiniteSpace> =
        (1..=3).flat_map(|n| labeled_topologies(n).unwrap()).collect();
    let mut checked = 0usize;
    for x in &spaces {
        for y in &spaces {
            for f in enumerate_maps(x, y) {
                if !f.is_continuous() {
                    continue;
                }
                for &irr in &irreducible_closed_sets(x) {
                    let image_closure = y.closure(f.image(irr));
                    assert!(
                        irreducible_closed_sets(y).contains(&image_closure),
                        "closure of a continuous image of an irreducible set"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000, "exercised {checked} cases");
}

#[test]
fn compactification_turns_up_spectral_into_spectral_on_three_point_corpus() {
    for x in labeled_topologies(3).unwrap() {
        let before = classify(&x);
        let after = classify(&x.trivial_compactification());
        assert_eq!(after.spectral, before.up_spectral);
        // adding a bottom never destroys T0 and always keeps the space compact
        assert_eq!(after.t0, before.t0);
        assert!(after.compact);
    }
}

#[test]
fn homeomorphism_shortcut_agrees_with_open_bijection_search() {
    let spaces: Vec<FiniteSpace> =
        (0..=3).flat_map(|n| labeled_topologies(n).unwrap()).collect();
    for x in &spaces {
        for y in &spaces {
            let fast = are_homeomorphic(x, y).is_some();
            let slow = homeomorphic_by_open_bijection(x, y).is_some();
            assert_eq!(fast, slow, "{} vs {}", x.describe(), y.describe());
        }
    }
}

#[test]
fn irreducible_sets_have_generic_points_on_finite_spaces() {
    for n in 1..=4 {
        for x in labeled_topologies(n).unwrap() {
            for &f in &irreducible_closed_sets(&x) {
                assert!(!generic_points(&x, f).is_empty());
            }
        }
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        /// Random subfamilies closed up to the axioms validate, and the
        /// normalized space round-trips through specialization.
        #[test]
        fn random_preorder_roundtrip(seed in 0u64..2000) {
            // derive a preorder on 4 points from the seed bits
            let n = 4usize;
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let mut pairs = Vec::new();
            let mut bits = seed;
            for i in 0..n {
                for j in 0..n {
                    if i != j && bits & 1 == 1 {
                        pairs.push((labels[i].clone(), labels[j].clone()));
                    }
                    bits >>= 1;
                }
            }
            let p = order_core::preorder::Preorder::from_pairs(&labels, &pairs).unwrap();
            let x = alexandroff(&p);
            prop_assert_eq!(x.specialization(), p);
            prop_assert_eq!(&alexandroff(&x.specialization()), &x);
            prop_assert!(classify(&x).is_consistent());
        }
    }
}
