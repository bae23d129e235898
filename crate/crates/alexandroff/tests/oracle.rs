//! Flag-by-flag agreement between the symbolic classifier and the honest
//! finite-space classifier on realizable (all-finite) templates.

use alexandroff::bridge::embed_finite;
use alexandroff::classify::classify_template;
use alexandroff::rng::{random_fin_template, SplitMix64};
use topology_core::classify::classify;

#[test]
fn symbolic_matches_finite_classifier_on_seeded_templates() {
    let mut rng = SplitMix64::new(7);
    for trial in 0..200 {
        let t = random_fin_template(&mut rng, 6);
        let symbolic = classify_template(&t);
        let finite = classify(&embed_finite(&t).unwrap());
        assert_eq!(symbolic, finite, "trial {trial}: {}", t.describe());
    }
}

#[test]
fn symbolic_matches_finite_classifier_on_a_second_seed() {
    let mut rng = SplitMix64::new(20260808);
    for trial in 0..60 {
        let t = random_fin_template(&mut rng, 5);
        let symbolic = classify_template(&t);
        let finite = classify(&embed_finite(&t).unwrap());
        assert_eq!(symbolic, finite, "trial {trial}: {}", t.describe());
    }
}
