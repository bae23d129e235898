//! Exhaustive adjunction audits over small (M, X) pairs, including
//! cross-object naturality families.

use duality::adjunction::{adjunction_audit, adjunction_audit_with_endos, lambda, lambda_inverse};
use duality::DualityError;
use order_core::enumerate::enumerate_distributive_lattices;
use order_core::hom::enumerate_proper_homs;
use order_core::lattice::FiniteLattice;
use topology_core::enumerate::labeled_topologies;
use topology_core::fundamental::fundamental_lattice;
use topology_core::map::enumerate_strongly_continuous;
use topology_core::space::FiniteSpace;

#[test]
fn audit_passes_for_distributive_lattices_up_to_three_against_two_point_spaces() {
    let lattices = enumerate_distributive_lattices(3).unwrap();
    let spaces = labeled_topologies(2).unwrap();
    for m in &lattices {
        for x in &spaces {
            let report = adjunction_audit_with_endos(m, x).unwrap();
            assert!(report.ok(), "M = {}, X = {}: {report}", m.describe(), x.describe());
        }
    }
}

#[test]
fn lambda_and_its_inverse_are_mutually_inverse() {
    let m = FiniteLattice::chain(3);
    let x = FiniteSpace::sierpinski();
    let fx = fundamental_lattice(&x);
    for alpha in enumerate_proper_homs(&m, &fx.lattice) {
        let eps = lambda(&m, &x, &alpha).unwrap();
        let back = lambda_inverse(&m, &x, &eps).unwrap();
        assert_eq!(back.map, alpha.map);
    }
    let spec_m = duality::spec_lattice(&m);
    for eps in enumerate_strongly_continuous(&x, &spec_m.space) {
        let alpha = lambda_inverse(&m, &x, &eps).unwrap();
        let forward = lambda(&m, &x, &alpha).unwrap();
        assert_eq!(forward, eps);
    }
}

#[test]
fn naturality_with_cross_object_families() {
    // M = 2², X = discrete two points, Y ranges over all 2-point spaces,
    // L over distributive lattices with ≤ 3 elements
    let m = FiniteLattice::powerset(2);
    let x = FiniteSpace::discrete(vec!["1".into(), "2".into()]);
    let mut space_family = Vec::new();
    for y in labeled_topologies(2).unwrap() {
        space_family.extend(enumerate_strongly_continuous(&y, &x));
    }
    let mut lattice_family = Vec::new();
    for l in enumerate_distributive_lattices(3).unwrap() {
        lattice_family.extend(enumerate_proper_homs(&l, &m));
    }
    let report = adjunction_audit(&m, &x, &space_family, &lattice_family).unwrap();
    assert!(report.ok(), "{report}");
    assert!(report.naturality_squares > 50, "checked {}", report.naturality_squares);
}

#[test]
fn mismatched_family_endpoint_is_an_error() {
    let m = FiniteLattice::chain(2);
    let x = FiniteSpace::sierpinski();
    let wrong = topology_core::SpaceMap::identity(&FiniteSpace::empty());
    assert!(matches!(
        adjunction_audit(&m, &x, &[wrong], &[]),
        Err(DualityError::ObjectMismatch(_))
    ));
}

#[test]
fn hom_side_and_map_side_always_balance() {
    // |[M, F(X)]| = |[X, spec(M)]| over a small sweep
    for m in enumerate_distributive_lattices(4).unwrap() {
        for x in labeled_topologies(2).unwrap() {
            let report = adjunction_audit(&m, &x, &[], &[]).unwrap();
            assert_eq!(report.hom_side.len(), report.map_side.len());
            assert!(report.bijective && report.inverse_ok);
        }
    }
}
